#include "boxpot/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace boxpot {

namespace {
constexpr double kInvSqrtPi = 0.5641895835477562869480794515608;

std::complex<double> outer_weight(const LambdaSquared& lambda2, double t) {
  if (lambda2.im == 0.0) return std::exp(-0.25 * lambda2.re * t);
  return std::exp(std::complex<double>(-0.25 * lambda2.re * t, -0.25 * lambda2.im * t));
}

void check_dims(const IndexVector& k, const Eigen::ArrayXd& h, double d,
                const LambdaSquared& lambda2) {
  if (k.size() != h.size())
    throw std::domain_error("coefficient: k and h dimension mismatch");
  if (k.size() < 1) throw std::domain_error("coefficient: dimension must be >= 1");
  if (!(h > 0.0).all()) throw std::domain_error("coefficient: steps must be positive");
  if (!(d > 0.0)) throw std::domain_error("coefficient: D must be positive");
  lambda2.validate(k.size());
}
}  // namespace

std::complex<double> a_coeff(const IndexVector& k, PolynomialOrder m,
                             const Eigen::ArrayXd& h, double d,
                             const LambdaSquared& lambda2,
                             const DeNodeTable& table) {
  check_dims(k, h, d, lambda2);
  const Eigen::Index n = k.size();
  const double sqrt_d = std::sqrt(d);
  std::complex<double> sum = 0.0;
  for (const DeNode& node : table.nodes) {
    double prod = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double t_j = node.t / (h[j] * h[j] * d);
      const double x = double(k[j]) / sqrt_d;
      prod *= kInvSqrtPi / sqrt_d * std::exp(-x * x / (1.0 + t_j)) * p_poly(m, t_j, x);
    }
    sum += outer_weight(lambda2, node.t) * node.weight * prod;
  }
  return 0.25 * sum;
}

std::complex<double> a_coeff(const IndexVector& k, PolynomialOrder m,
                             const Eigen::ArrayXd& h, double d,
                             const LambdaSquared& lambda2,
                             const QuadratureParams& quad) {
  return a_coeff(k, m, h, d, lambda2, trapezoid_weights(quad));
}

std::complex<double> b_coeff(const IndexVector& k, const IndexVector& m_idx,
                             const Box& box, PolynomialOrder m,
                             const Eigen::ArrayXd& h, double d,
                             const LambdaSquared& lambda2,
                             const DeNodeTable& table, double r) {
  check_dims(k, h, d, lambda2);
  box.validate();
  if (m_idx.size() != k.size() || box.dimension() != k.size())
    throw std::domain_error("b_coeff: dimension mismatch");
  if (!(r > 0.0)) throw std::domain_error("b_coeff: requires r > 0");
  const Eigen::Index n = k.size();
  const double sqrt_d = std::sqrt(d);
  std::complex<double> sum = 0.0;
  for (const DeNode& node : table.nodes) {
    double prod = 1.0;
    for (Eigen::Index j = 0; j < n && prod != 0.0; ++j) {
      const double t_j = node.t / (h[j] * h[j] * d);
      const double x = double(k[j] - m_idx[j]) / sqrt_d;
      const double p = (box.lo[j] - h[j] * double(m_idx[j])) / (h[j] * sqrt_d);
      const double q = (box.hi[j] - h[j] * double(m_idx[j])) / (h[j] * sqrt_d);
      prod *= phi_diff_truncated(m, x, t_j, p, q, r) / sqrt_d;
    }
    sum += outer_weight(lambda2, node.t) * node.weight * prod;
  }
  return 0.25 * sum;
}

std::complex<double> b_coeff(const IndexVector& k, const IndexVector& m_idx,
                             const Box& box, PolynomialOrder m,
                             const Eigen::ArrayXd& h, double d,
                             const LambdaSquared& lambda2,
                             const QuadratureParams& quad, double r) {
  return b_coeff(k, m_idx, box, m, h, d, lambda2, trapezoid_weights(quad), r);
}

}  // namespace boxpot
