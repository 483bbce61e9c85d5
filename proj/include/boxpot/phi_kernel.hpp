#pragma once

#include "boxpot/special_functions.hpp"

namespace boxpot {

/// Arguments of Phi_M: scaled coordinate x, heat-time t > 0 and scaled
/// interval endpoint p. +-infinity are accepted as exact sentinels for the
/// whole-line limits.
struct PhiArgs {
  double x;
  double t;
  double p;
};

/// F(t,x,y) = sqrt((1+t)/t) (y - x/(1+t)).
double f_arg(double t, double x, double y);

/// F(t,x,p)^2 expanded as p^2 + (x-p)^2/t - x^2/(1+t). Squaring f_arg
/// directly cancels catastrophically for large t; exp(-F^2) must come from
/// this form.
double f_arg_squared(double t, double x, double p);

/// P_M(t,x) = sum_{k=0}^{M-1} (1+t)^{-k-1/2} L_k^{(-1/2)}(x^2/(1+t)).
/// Regular at t = 0; throws only for t < 0.
double p_poly(PolynomialOrder m, double t, double x);

/// Q_M(t,x,p): the Hermite double sum over k = 1..M-1, l = 1..2k.
/// Q_1 is identically zero.
double q_poly(PolynomialOrder m, double t, double x, double p);

/// Closed form of (pi t)^{-1/2} int_p^inf exp(-(x-y)^2/t) eta_{2M}(y) dy:
///   exp(-x^2/(1+t))/(2 sqrt(pi)) [erfc(F) P_M - pi^{-1/2} exp(-F^2) Q_M].
/// p = +inf gives 0; p = -inf gives pi^{-1/2} exp(-x^2/(1+t)) P_M(t,x).
double phi_m(PolynomialOrder m, const PhiArgs& args);

/// Phi_M(x,t,p) - Phi_M(x,t,q), p < q, with far-field simplification of any
/// endpoint beyond distance r: an endpoint e <= -r contributes the -inf
/// limit, e >= r contributes 0. Truncation error is O(exp(-r^2)).
double phi_diff_truncated(PolynomialOrder m, double x, double t, double p,
                          double q, double r);

}  // namespace boxpot
