#include "boxpot/special_functions.hpp"

#include <cmath>

namespace boxpot {

namespace {
constexpr double kInvSqrtPi = 0.5641895835477562869480794515608;
}

double erfc(double x) {
  if (!std::isfinite(x)) throw std::domain_error("erfc: non-finite argument");
  return std::erfc(x);
}

double hermite(int k, double x) {
  if (k < 0) throw std::domain_error("hermite: degree must be nonnegative");
  if (!std::isfinite(x)) throw std::domain_error("hermite: non-finite argument");
  if (k == 0) return 1.0;
  double hkm1 = 1.0;
  double hk = 2.0 * x;
  for (int i = 1; i < k; ++i) {
    const double hkp1 = 2.0 * x * hk - 2.0 * i * hkm1;
    hkm1 = hk;
    hk = hkp1;
  }
  return hk;
}

double laguerre(int k, double gamma, double x) {
  if (!(gamma > -1.0)) throw std::domain_error("laguerre: gamma must be > -1");
  if (k < 0) throw std::domain_error("laguerre: degree must be nonnegative");
  if (!std::isfinite(x)) throw std::domain_error("laguerre: non-finite argument");
  if (k == 0) return 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 + gamma - x;
  for (int i = 1; i < k; ++i) {
    const double lkp1 = ((2.0 * i + 1.0 + gamma - x) * lk - (i + gamma) * lkm1) / (i + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

double eta_basis(PolynomialOrder m, double x) {
  return kInvSqrtPi * laguerre(m.value() - 1, 0.5, x * x) * std::exp(-x * x);
}

}  // namespace boxpot
