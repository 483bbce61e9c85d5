#pragma once

#include <stdexcept>

namespace boxpot {

/// Approximation order M >= 1; the generating function eta_{2M} satisfies the
/// moment conditions of order N = 2M. Closed forms for M in {1,2,3} are
/// cross-checked against the generic sums in the test suite.
class PolynomialOrder {
 public:
  explicit PolynomialOrder(int m) : m_(m) {
    if (m < 1) throw std::domain_error("PolynomialOrder: M must be >= 1");
  }
  int value() const { return m_; }

 private:
  int m_;
};

/// Complementary error function; absolute error <= 1e-15, range (0, 2),
/// monotone decreasing. Throws on non-finite input.
double erfc(double x);

/// Physicists' Hermite polynomial H_k(x) via H_{k+1} = 2x H_k - 2k H_{k-1}.
double hermite(int k, double x);

/// Generalized Laguerre polynomial L_k^{(gamma)}(x), gamma > -1, by the
/// standard three-term recurrence.
double laguerre(int k, double gamma, double x);

/// eta_{2M}(x) = pi^{-1/2} L_{M-1}^{(1/2)}(x^2) exp(-x^2).
double eta_basis(PolynomialOrder m, double x);

}  // namespace boxpot
