#include "boxpot/reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "boxpot/errors.hpp"

namespace boxpot {

namespace {
constexpr double kPi = std::numbers::pi;
}

const std::vector<ProfileFunction>& shipped_profiles() {
  static const std::vector<ProfileFunction> profiles = {
      {"cos2", [](double x) { return std::cos(kPi * x / 2) * std::cos(kPi * x / 2); },
       [](double x) { return -kPi * kPi / 2 * std::cos(kPi * x); }},
      {"poly6", [](double x) { return std::pow(x * x - 1.0, 3); },
       [](double x) { return 6.0 * (x * x - 1.0) * (5.0 * x * x - 1.0); }},
      {"poly4", [](double x) { return (1.0 - x * x) * (1.0 - x * x); },
       [](double x) { return 12.0 * x * x - 4.0; }},
      {"sinsq", [](double x) { return 1.0 - std::sin(kPi * x * x / 2); },
       [](double x) {
         return -kPi * std::cos(kPi * x * x / 2) +
                kPi * kPi * x * x * std::sin(kPi * x * x / 2);
       }},
      {"exppoly",
       [](double x) {
         const double w = 1.0 - x * x;
         return std::exp(x) * w * w;
       },
       [](double x) {
         const double w = 1.0 - x * x;
         return std::exp(x) * (w * w + 8.0 * x * x * x - 8.0 * x + 12.0 * x * x - 4.0);
       }}};
  return profiles;
}

const ProfileFunction& profile_by_name(const std::string& name) {
  for (const ProfileFunction& profile : shipped_profiles())
    if (profile.name == name) return profile;
  throw std::domain_error("unknown profile '" + name + "'");
}

bool boundary_vanishing(const ProfileFunction& profile, double tol) {
  // fourth-order central difference for u'
  auto derivative = [&](double x) {
    const double h = 1e-3;
    return (-profile.u(x + 2 * h) + 8 * profile.u(x + h) - 8 * profile.u(x - h) +
            profile.u(x - 2 * h)) /
           (12 * h);
  };
  for (double x : {-1.0, 1.0})
    if (std::abs(profile.u(x)) > tol || std::abs(derivative(x)) > tol) return false;
  return true;
}

std::complex<double> exact_potential_product(const ProfileFunction& profile,
                                             const LambdaSquared& lambda2,
                                             const Eigen::ArrayXd& x) {
  lambda2.validate(x.size());
  if (x.size() < 1) throw std::domain_error("exact_potential_product: empty point");
  if (!((x >= -1.0).all() && (x <= 1.0).all()))
    throw std::domain_error("exact_potential_product: x must lie in [-1,1]^n");
  if (!boundary_vanishing(profile))
    throw std::domain_error("exact_potential_product: profile '" + profile.name +
                            "' does not vanish with u' at the boundary");
  // log-domain product; counts of repeated coordinates keep this exact for
  // the padded high-dimensional points
  double log_mag = 0.0;
  double sign = 1.0;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const double v = profile.u(x[j]);
    if (v == 0.0) return 0.0;
    log_mag += std::log(std::abs(v));
    if (v < 0.0) sign = -sign;
  }
  return sign * std::exp(log_mag);
}

std::complex<double> kernel_closed_form(int n, std::complex<double> lambda,
                                        double radius) {
  if (!(radius > 0.0)) throw std::domain_error("kernel_closed_form: radius must be > 0");
  if (lambda != 0.0 && !(lambda.real() > 0.0))
    throw std::domain_error("kernel_closed_form: Re lambda must be positive");
  switch (n) {
    case 3:
      return std::exp(-lambda * radius) / (4.0 * kPi * radius);
    case 1:
      if (lambda == 0.0)
        throw std::domain_error("kernel_closed_form: lambda must be nonzero for n=1");
      return std::exp(-lambda * radius) / (2.0 * lambda);
    default:
      throw std::domain_error("kernel_closed_form: unsupported dimension " +
                              std::to_string(n));
  }
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
void gauss_legendre(int n, Eigen::ArrayXd& nodes, Eigen::ArrayXd& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

using PointFn = std::function<std::complex<double>(const Eigen::ArrayXd&)>;

std::complex<double> line_potential(const PointFn& f, const Box& box,
                                    std::complex<double> lambda, double x0,
                                    int panels, const Eigen::ArrayXd& gx,
                                    const Eigen::ArrayXd& gw) {
  // split at the kink y = x0; each side integrated by composite Gauss
  std::complex<double> total = 0.0;
  Eigen::ArrayXd point(1);
  for (double bound : {box.lo[0], box.hi[0]}) {
    const double a = std::min(bound, x0);
    const double b = std::max(bound, x0);
    if (b - a < 1e-15) continue;
    const double step = (b - a) / panels;
    for (int panel = 0; panel < panels; ++panel) {
      const double mid = a + (panel + 0.5) * step;
      for (Eigen::Index i = 0; i < gx.size(); ++i) {
        const double y = mid + 0.5 * step * gx[i];
        point[0] = y;
        total += 0.5 * step * gw[i] * kernel_closed_form(1, lambda, std::abs(x0 - y)) *
                 f(point);
      }
    }
  }
  return total;
}

std::complex<double> pyramid_potential(const PointFn& f, const Box& box,
                                       std::complex<double> lambda,
                                       const Eigen::ArrayXd& x0, int panels,
                                       const Eigen::ArrayXd& gx,
                                       const Eigen::ArrayXd& gw) {
  // One pyramid per box face with apex x0; along each ray the radial
  // variable removes the 1/r singularity (integrand ~ rho).
  const int nq = int(gx.size());
  std::complex<double> total = 0.0;
  Eigen::ArrayXd y(3);
  for (int axis = 0; axis < 3; ++axis) {
    const int a1 = (axis + 1) % 3;
    const int a2 = (axis + 2) % 3;
    for (double face : {box.lo[axis], box.hi[axis]}) {
      const double depth = std::abs(face - x0[axis]);
      if (depth < 1e-14) continue;
      const double du = (box.hi[a1] - box.lo[a1]) / panels;
      const double dv = (box.hi[a2] - box.lo[a2]) / panels;
      const double dr = 1.0 / panels;
      for (int pu = 0; pu < panels; ++pu) {
        for (int pv = 0; pv < panels; ++pv) {
          for (int pr = 0; pr < panels; ++pr) {
            for (int iu = 0; iu < nq; ++iu) {
              const double u = box.lo[a1] + (pu + 0.5 + 0.5 * gx[iu]) * du;
              for (int iv = 0; iv < nq; ++iv) {
                const double v = box.lo[a2] + (pv + 0.5 + 0.5 * gx[iv]) * dv;
                Eigen::Array3d face_point;
                face_point[axis] = face;
                face_point[a1] = u;
                face_point[a2] = v;
                const Eigen::Array3d dir = face_point - x0.head<3>();
                const double dist = std::sqrt((dir * dir).sum());
                for (int ir = 0; ir < nq; ++ir) {
                  const double rho = (pr + 0.5 + 0.5 * gx[ir]) * dr;
                  y = x0 + rho * dir;
                  const double w =
                      gw[iu] * gw[iv] * gw[ir] * 0.125 * du * dv * dr * depth;
                  total += w * rho * std::exp(-lambda * (rho * dist)) /
                           (4.0 * kPi * dist) * f(y);
                }
              }
            }
          }
        }
      }
    }
  }
  return total;
}

}  // namespace

std::complex<double> brute_force_potential(const PointFn& f, const Box& box,
                                           const LambdaSquared& lambda2,
                                           const Eigen::ArrayXd& x,
                                           double target_accuracy) {
  box.validate();
  const Eigen::Index n = box.dimension();
  if (x.size() != n) throw std::domain_error("brute_force_potential: dimension mismatch");
  lambda2.validate(n);
  const std::complex<double> lambda = std::sqrt(lambda2.value());

  Eigen::ArrayXd gx, gw;
  std::complex<double> coarse, fine;
  if (n == 1) {
    gauss_legendre(16, gx, gw);
    coarse = line_potential(f, box, lambda, x[0], 4, gx, gw);
    fine = line_potential(f, box, lambda, x[0], 8, gx, gw);
  } else if (n == 3) {
    gauss_legendre(16, gx, gw);
    coarse = pyramid_potential(f, box, lambda, x, 2, gx, gw);
    fine = pyramid_potential(f, box, lambda, x, 3, gx, gw);
  } else {
    throw std::domain_error("brute_force_potential: only n = 1 and n = 3 supported");
  }
  const double achieved = std::abs(fine - coarse);
  if (achieved > target_accuracy)
    throw AccuracyError("brute_force_potential: refinement disagreement " +
                            std::to_string(achieved) + " exceeds target",
                        achieved);
  return fine;
}

}  // namespace boxpot
