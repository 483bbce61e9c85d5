#include "support/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace oracles {

namespace {
constexpr long double kSqrtPi = 1.77245385090551602729816748334L;

long double erf_series(long double x) {
  // erf(x) = 2x e^{-x^2}/sqrt(pi) sum_k (2x^2)^k / (1*3*...*(2k+1)),
  // all terms positive: no cancellation.
  const long double x2 = x * x;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= 2.0L * x2 / (2.0L * k + 1.0L);
    sum += term;
    if (term < 1e-22L * sum) break;
  }
  return 2.0L * x * std::exp(-x2) / kSqrtPi * sum;
}

long double erfc_cf(long double x) {
  // erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...))))
  long double frac = 0.0L;
  for (int k = 120; k >= 1; --k) frac = (k / 2.0L) / (x + frac);
  return std::exp(-x * x) / kSqrtPi / (x + frac);
}
}  // namespace

double erfc_reference(double x) {
  if (x < 0.0) return double(2.0L - erfc_reference(-x));
  if (x < 3.0) return double(1.0L - erf_series(x));
  if (x > 27.5) return 0.0;  // below the double underflow threshold
  return double(erfc_cf(x));
}

double hermite_closed_form(int k, double x) {
  const double x2 = x * x;
  switch (k) {
    case 0: return 1.0;
    case 1: return 2.0 * x;
    case 2: return 4.0 * x2 - 2.0;
    case 3: return x * (8.0 * x2 - 12.0);
    case 4: return 16.0 * x2 * x2 - 48.0 * x2 + 12.0;
    case 5: return x * (32.0 * x2 * x2 - 160.0 * x2 + 120.0);
    case 6: return 64.0 * x2 * x2 * x2 - 480.0 * x2 * x2 + 720.0 * x2 - 120.0;
    default: throw std::invalid_argument("hermite_closed_form: k must be <= 6");
  }
}

double laguerre_series(int k, double gamma, double x) {
  // L_k^{(gamma)}(x) = sum_i (-1)^i binom(k+gamma, k-i) x^i / i!
  long double sum = 0.0L;
  for (int i = 0; i <= k; ++i) {
    const long double binom = std::exp(
        std::lgamma((long double)(k + gamma + 1)) -
        std::lgamma((long double)(gamma + i + 1)) - std::lgamma((long double)(k - i + 1)));
    long double term = binom;
    for (int j = 1; j <= i; ++j) term *= -x / j;
    sum += term;
  }
  return double(sum);
}

namespace {
void gauss_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = xi;
      for (int kk = 2; kk <= n; ++kk) {
        const double p2 = ((2.0 * kk - 1.0) * xi * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      const double dx = p1 / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    x[i] = xi;
    w[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
  }
}

template <typename Scalar, typename Fn>
Scalar integrate_impl(const Fn& f, double a, double b, int panels, int nq) {
  std::vector<double> gx, gw;
  gauss_nodes(nq, gx, gw);
  Scalar total{};
  const double step = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * step;
    for (int i = 0; i < nq; ++i)
      total += Scalar(0.5 * step * gw[i]) * f(mid + 0.5 * step * gx[i]);
  }
  return total;
}
}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int points_per_panel) {
  return integrate_impl<double>(f, a, b, panels, points_per_panel);
}

std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int panels, int points_per_panel) {
  return integrate_impl<std::complex<double>>(f, a, b, panels, points_per_panel);
}

namespace {
double eta_2m(int order_m, double x) {
  return laguerre_series(order_m - 1, 0.5, x * x) * std::exp(-x * x) / std::sqrt(M_PI);
}
}  // namespace

double phi_defining_integral(int order_m, double x, double t, double p) {
  const double hi = 9.5;  // eta_{2M} is below 1e-38 beyond |y| = 9.5
  if (p >= hi) return 0.0;
  const double width = std::min(0.5, std::sqrt(t) / 2);
  const int panels = std::max(8, int(std::ceil((hi - p) / width)));
  const double value = integrate(
      [&](double y) { return std::exp(-(x - y) * (x - y) / t) * eta_2m(order_m, y); }, p,
      hi, panels);
  return value / std::sqrt(M_PI * t);
}

double eta_moment(int order_m, int j) {
  return integrate([&](double x) { return std::pow(x, j) * eta_2m(order_m, x); }, -10.0,
                   10.0, 80);
}

std::complex<double> potential_1d(const std::function<std::complex<double>(double)>& f,
                                  double lo, double hi, std::complex<double> lambda,
                                  double x0, int panels) {
  auto kernel_times_f = [&](double y) {
    return std::exp(-lambda * std::abs(x0 - y)) / (2.0 * lambda) * f(y);
  };
  std::complex<double> total = 0.0;
  if (x0 > lo && x0 < hi) {
    total += integrate_complex(kernel_times_f, lo, x0, panels);
    total += integrate_complex(kernel_times_f, x0, hi, panels);
  } else {
    total = integrate_complex(kernel_times_f, lo, hi, 2 * panels);
  }
  return total;
}

}  // namespace oracles
