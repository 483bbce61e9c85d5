#pragma once

#include <Eigen/Core>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "boxpot/box_grid.hpp"
#include "boxpot/de_quadrature.hpp"

namespace boxpot {

/// A univariate test profile u with its second derivative. Shipped profiles
/// vanish together with u' at +-1, so the zero extension of prod_j u(x_j)
/// is C^1 and solves (-Delta + lambda^2) v = f with f cut off at the box.
struct ProfileFunction {
  std::string name;
  std::function<double(double)> u;
  std::function<double(double)> u_second;
};

const std::vector<ProfileFunction>& shipped_profiles();
const ProfileFunction& profile_by_name(const std::string& name);

/// True when u(+-1) and u'(+-1) vanish within tol (u' by finite differences).
bool boundary_vanishing(const ProfileFunction& profile, double tol = 1e-12);

/// Exact potential of f = (-Delta + lambda^2) prod_j u(x_j) over [-1,1]^n:
/// prod_j u(x_j). Throws for x outside the cube or a profile that fails the
/// boundary-vanishing check.
std::complex<double> exact_potential_product(const ProfileFunction& profile,
                                             const LambdaSquared& lambda2,
                                             const Eigen::ArrayXd& x);

/// Fundamental-solution values: n=3 -> exp(-lambda r)/(4 pi r),
/// n=1 -> exp(-lambda r)/(2 lambda). Other n are unsupported.
std::complex<double> kernel_closed_form(int n, std::complex<double> lambda,
                                        double radius);

/// Direct quadrature of the volume potential for n in {1, 3}. The kernel
/// singularity at y = x is removed by splitting at x (n=1) or by pyramid
/// decomposition toward the box faces (n=3). Throws AccuracyError with the
/// achieved estimate when refinement disagrees beyond target_accuracy.
std::complex<double> brute_force_potential(
    const std::function<std::complex<double>(const Eigen::ArrayXd&)>& f,
    const Box& box, const LambdaSquared& lambda2, const Eigen::ArrayXd& x,
    double target_accuracy = 1e-8);

}  // namespace boxpot
