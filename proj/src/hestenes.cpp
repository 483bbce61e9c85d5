#include "boxpot/hestenes.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <type_traits>
#include <vector>

#include "boxpot/errors.hpp"

namespace boxpot {

HestenesScheme hestenes_solve(const Eigen::VectorXd& rates) {
  const Eigen::Index n = rates.size();
  if (n < 1) throw SingularSystemError("hestenes_solve: needs at least one rate");
  if (!(rates.array() > 0.0).all())
    throw SingularSystemError("hestenes_solve: rates must be positive");
  std::vector<double> sorted(rates.data(), rates.data() + n);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw SingularSystemError("hestenes_solve: repeated rates make the system singular");

  Eigen::MatrixXd a(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    double power = 1.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      a(k, s) = power;
      power *= -rates[s];
    }
  }
  const Eigen::VectorXd rhs = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd coeffs = a.partialPivLu().solve(rhs);
  const double residual = (a * coeffs - rhs).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-9))
    throw SingularSystemError("hestenes_solve: residual " + std::to_string(residual) +
                              " exceeds 1e-9");
  return HestenesScheme{rates, std::move(coeffs)};
}

HestenesScheme standard_scheme(ExtensionKind kind, int order) {
  Eigen::VectorXd rates(order + 1);
  for (int s = 1; s <= order + 1; ++s) {
    switch (kind) {
      case ExtensionKind::ext1: rates[s - 1] = std::ldexp(1.0, -s); break;
      case ExtensionKind::ext2: rates[s - 1] = 1.0 / s; break;
      case ExtensionKind::ext3: rates[s - 1] = double(s); break;
    }
  }
  return hestenes_solve(rates);
}

namespace {

// Neumaier-compensated accumulator. The Hestenes coefficients are large and
// alternating (up to ~3e7 for the 2^{-s} family at N = 6); the reflection
// sum cancels to O(1) and needs the compensation.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double term) {
    const double next = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - next) + term;
    else
      comp += (term - next) + sum;
    sum = next;
  }
  double value() const { return sum + comp; }
};

template <typename Scalar, typename Fn>
Scalar extend_impl(const Fn& f, const HestenesScheme& scheme, double x,
                   double lo, double hi) {
  if (!(lo < hi)) throw std::domain_error("hestenes_extend: requires lo < hi");
  if (!std::isfinite(x)) throw std::domain_error("hestenes_extend: non-finite x");
  if (x >= lo && x <= hi) return f(x);
  const double anchor = (x < lo) ? lo : hi;
  const double offset = x - anchor;
  const double tol = 1e-12 * (hi - lo);
  CompensatedSum re, im;
  for (Eigen::Index s = 0; s < scheme.rates.size(); ++s) {
    const double arg = anchor - scheme.rates[s] * offset;
    if (arg < lo - tol || arg > hi + tol)
      throw OutOfReachError("hestenes_extend: reflected argument " + std::to_string(arg) +
                            " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    const std::complex<double> term = scheme.coeffs[s] * std::complex<double>(f(std::clamp(arg, lo, hi)));
    re.add(term.real());
    im.add(term.imag());
  }
  if constexpr (std::is_same_v<Scalar, double>)
    return re.value();
  else
    return Scalar{re.value(), im.value()};
}

}  // namespace

double hestenes_extend(const std::function<double(double)>& f,
                       const HestenesScheme& scheme, double x, double lo,
                       double hi) {
  return extend_impl<double>(f, scheme, x, lo, hi);
}

std::complex<double> hestenes_extend(
    const std::function<std::complex<double>(double)>& f,
    const HestenesScheme& scheme, double x, double lo, double hi) {
  return extend_impl<std::complex<double>>(f, scheme, x, lo, hi);
}

}  // namespace boxpot
