#include "boxpot/de_quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace boxpot {

void QuadratureParams::validate() const {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::domain_error("QuadratureParams: alpha and beta must be positive");
  if (!(tau > 0.0)) throw std::domain_error("QuadratureParams: tau must be positive");
  if (n_lo >= n_hi) throw std::domain_error("QuadratureParams: requires n_lo < n_hi");
}

void LambdaSquared::validate(Eigen::Index dimension) const {
  if (!std::isfinite(re) || !std::isfinite(im))
    throw std::domain_error("LambdaSquared: non-finite value");
  if (re < 0.0) throw std::domain_error("LambdaSquared: Re lambda^2 must be >= 0");
  if (dimension < 3 && !(re > 0.0))
    throw std::domain_error("LambdaSquared: Re lambda^2 must be > 0 for dimension < 3");
}

std::optional<DePoint> de_transform(double u, double alpha, double beta) {
  if (!std::isfinite(u)) throw std::domain_error("de_transform: non-finite u");
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::domain_error("de_transform: alpha and beta must be positive");
  const double w = u - std::exp(-u);  // -inf once exp(-u) overflows
  const double sigma = beta * w;
  const double es = std::exp(sigma);
  const double t = std::exp(alpha * (sigma + es));
  if (!std::isfinite(t) || !(t > 0.0)) return std::nullopt;
  const double dt = t * alpha * beta * (1.0 + std::exp(-u)) * (1.0 + es);
  if (!std::isfinite(dt)) return std::nullopt;
  return DePoint{t, dt};
}

DeNodeTable trapezoid_weights(const QuadratureParams& params) {
  params.validate();
  DeNodeTable table;
  table.nodes.reserve(params.n_hi - params.n_lo + 1);
  for (int s = params.n_lo; s <= params.n_hi; ++s) {
    const double u = s * params.tau;
    const auto point = de_transform(u, params.alpha, params.beta);
    if (!point) {
      ++table.skipped;
      continue;
    }
    table.nodes.push_back(DeNode{u, point->t, point->dt, params.tau * point->dt});
  }
  if (!table.nodes.empty()) {
    table.nodes.front().weight *= 0.5;
    table.nodes.back().weight *= 0.5;
  }
  return table;
}

}  // namespace boxpot
