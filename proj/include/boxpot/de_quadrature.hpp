#pragma once

#include <Eigen/Core>
#include <complex>
#include <optional>
#include <vector>

namespace boxpot {

/// Constants of the double-exponential substitution
///   t = e^xi, xi = alpha (sigma + e^sigma), sigma = beta (u - e^{-u})
/// and the trapezoid window u = s tau, s = n_lo..n_hi.
struct QuadratureParams {
  double alpha = 2.0;
  double beta = 2.0;
  double tau = 0.005;
  int n_lo = -300;
  int n_hi = 300;
  void validate() const;
};

/// The operator parameter lambda^2 of -Delta + lambda^2.
struct LambdaSquared {
  double re = 1.0;
  double im = 0.0;
  std::complex<double> value() const { return {re, im}; }
  /// Re lambda^2 >= 0 always; Re lambda^2 > 0 required for dimension < 3.
  void validate(Eigen::Index dimension) const;
};

struct DePoint {
  double t;
  double dt;
};

/// Substituted time t(u) and derivative dt/du. Returns nullopt when the
/// doubly-exponential composition over- or underflows the double range;
/// such nodes are skipped, never clamped.
std::optional<DePoint> de_transform(double u, double alpha, double beta);

struct DeNode {
  double u;
  double t;
  double dt;
  /// Trapezoid quadrature weight tau * dt, halved on the first and last
  /// valid node (composite rule on the truncated window).
  double weight;
};

/// Node table for the truncated trapezoid rule; strictly increasing in t.
struct DeNodeTable {
  std::vector<DeNode> nodes;
  int skipped = 0;
};

DeNodeTable trapezoid_weights(const QuadratureParams& params);

}  // namespace boxpot
