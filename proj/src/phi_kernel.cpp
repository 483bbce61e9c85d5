#include "boxpot/phi_kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace boxpot {

namespace {
constexpr double kInvSqrtPi = 0.5641895835477562869480794515608;
// exp(-z) underflows near z ~ 745. Past that the Q_M term is exactly zero in
// doubles and must not be evaluated: its Hermite factors grow without the
// compensating Gaussian and would turn 0 * inf into NaN.
constexpr double kExpArgMax = 745.0;
}  // namespace

double f_arg(double t, double x, double y) {
  if (!(t > 0.0)) throw std::domain_error("f_arg: t must be positive");
  return std::sqrt((1.0 + t) / t) * (y - x / (1.0 + t));
}

double f_arg_squared(double t, double x, double p) {
  if (!(t > 0.0)) throw std::domain_error("f_arg_squared: t must be positive");
  const double d = x - p;
  return p * p + d * d / t - x * x / (1.0 + t);
}

double p_poly(PolynomialOrder m, double t, double x) {
  if (t < 0.0) throw std::domain_error("p_poly: t must be nonnegative");
  const double y = x * x / (1.0 + t);
  double scale = 1.0 / std::sqrt(1.0 + t);
  double sum = 0.0;
  for (int k = 0; k < m.value(); ++k) {
    sum += scale * laguerre(k, -0.5, y);
    scale /= (1.0 + t);
  }
  return sum;
}

double q_poly(PolynomialOrder m, double t, double x, double p) {
  if (!(t > 0.0)) throw std::domain_error("q_poly: t must be positive");
  const int order = m.value();
  if (order == 1) return 0.0;
  const double sqrt_t = std::sqrt(t);
  const double f = f_arg(t, x, p);
  const double xs = x / std::sqrt(1.0 + t);
  const double ps = (p - x) / sqrt_t;
  double outer = 0.0;
  double kfac = 1.0;  // k! 4^k
  for (int k = 1; k < order; ++k) {
    kfac *= 4.0 * k;
    const double onetp = std::pow(1.0 + t, k + 0.5);
    double inner = 0.0;
    double tpow = 1.0;   // t^{l/2}
    double binom = 1.0;  // C(2k, l)
    for (int l = 1; l <= 2 * k; ++l) {
      tpow *= sqrt_t;
      binom *= double(2 * k - l + 1) / double(l);
      const double term = hermite(2 * k - l, p) * hermite(l - 1, ps) -
                          binom * hermite(2 * k - l, xs) * hermite(l - 1, f) / onetp;
      inner += ((l % 2 == 0) ? 1.0 : -1.0) * term / tpow;
    }
    outer += ((k % 2 == 0) ? 1.0 : -1.0) * inner / kfac;
  }
  return 2.0 * outer;
}

double phi_m(PolynomialOrder m, const PhiArgs& a) {
  if (!(a.t > 0.0)) throw std::domain_error("phi_m: t must be positive");
  if (!std::isfinite(a.x)) throw std::domain_error("phi_m: x must be finite");
  const double inf = std::numeric_limits<double>::infinity();
  if (a.p == inf) return 0.0;
  const double gauss = std::exp(-a.x * a.x / (1.0 + a.t));
  if (a.p == -inf) return kInvSqrtPi * gauss * p_poly(m, a.t, a.x);
  const double f2 = f_arg_squared(a.t, a.x, a.p);
  double qterm = 0.0;
  if (f2 < kExpArgMax)
    qterm = std::exp(-f2) * kInvSqrtPi * q_poly(m, a.t, a.x, a.p);
  return 0.5 * kInvSqrtPi * gauss *
         (erfc(f_arg(a.t, a.x, a.p)) * p_poly(m, a.t, a.x) - qterm);
}

namespace {
double phi_endpoint(PolynomialOrder m, double x, double t, double e, double r,
                    double far_value) {
  if (e >= r) return 0.0;
  if (e <= -r) return far_value;
  return phi_m(m, PhiArgs{x, t, e});
}
}  // namespace

double phi_diff_truncated(PolynomialOrder m, double x, double t, double p,
                          double q, double r) {
  if (!(p < q)) throw std::domain_error("phi_diff_truncated: requires p < q");
  if (!(r > 0.0)) throw std::domain_error("phi_diff_truncated: requires r > 0");
  if (!(t > 0.0)) throw std::domain_error("phi_diff_truncated: t must be positive");
  const double far = kInvSqrtPi * std::exp(-x * x / (1.0 + t)) * p_poly(m, t, x);
  return phi_endpoint(m, x, t, p, r, far) - phi_endpoint(m, x, t, q, r, far);
}

}  // namespace boxpot
