#pragma once

#include <Eigen/Core>
#include <complex>
#include <functional>

namespace boxpot {

/// Reflection extension of order N: rates a_1..a_{N+1} (distinct, positive)
/// and coefficients c_1..c_{N+1} solving sum_s c_s (-a_s)^k = 1, k = 0..N,
/// so the extension reproduces polynomials up to degree N.
struct HestenesScheme {
  Eigen::VectorXd rates;
  Eigen::VectorXd coeffs;
  int order() const { return static_cast<int>(rates.size()) - 1; }
};

/// Solve the (N+1)x(N+1) system by partial-pivoting LU. Throws
/// SingularSystemError for repeated rates or residual above 1e-9.
HestenesScheme hestenes_solve(const Eigen::VectorXd& rates);

/// The three rate families used for boundary extension benchmarks.
enum class ExtensionKind { ext1, ext2, ext3 };  // a_s = 2^{-s}, 1/s, s

HestenesScheme standard_scheme(ExtensionKind kind, int order);

/// Evaluate f on [lo, hi] or its reflection extension outside. Throws
/// OutOfReachError when a reflected argument leaves [lo, hi].
double hestenes_extend(const std::function<double(double)>& f,
                       const HestenesScheme& scheme, double x, double lo,
                       double hi);
std::complex<double> hestenes_extend(
    const std::function<std::complex<double>(double)>& f,
    const HestenesScheme& scheme, double x, double lo, double hi);

}  // namespace boxpot
