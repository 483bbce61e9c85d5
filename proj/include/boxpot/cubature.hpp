#pragma once

#include <complex>
#include <vector>

#include "boxpot/box_grid.hpp"
#include "boxpot/coefficients.hpp"
#include "boxpot/density.hpp"
#include "boxpot/de_quadrature.hpp"
#include "boxpot/hestenes.hpp"
#include "boxpot/special_functions.hpp"

namespace boxpot {

/// Quasi-interpolant D^{-n/2} sum_m f(hm) prod_j eta_{2M}((x_j - h_j m_j)/(h_j sqrt(D)))
/// over the collar-padded node set of the box. The density must be evaluable
/// on the padded domain (its factors' own continuation is used outside).
std::complex<double> quasi_interpolant(const SeparatedDensity& density,
                                       const Grid& grid, PolynomialOrder m,
                                       const Eigen::ArrayXd& x, const Box& box);

/// Cubature of the volume potential at the grid point h.k: the interior
/// discrete convolution against a_{k-m} plus the collar sum against b_{k,m}
/// with the extended density. Per-axis sums are evaluated as one-dimensional
/// discrete convolutions; products across axes accumulate in the log domain
/// with sign tracking. `extension` == nullptr samples the density's factors
/// directly outside the box.
std::complex<double> evaluate_potential(const SeparatedDensity& density,
                                        const Box& box, const Grid& grid,
                                        PolynomialOrder m,
                                        const LambdaSquared& lambda2,
                                        const QuadratureParams& quad,
                                        const HestenesScheme* extension,
                                        const IndexVector& k);

/// Interior part only: per-axis convolutions against the a-kernel over the
/// open interior band. Shared factors across rank terms are convolved once
/// per quadrature node; a vanishing shared convolution falls back to direct
/// per-term products.
std::complex<double> interior_convolution(const SeparatedDensity& density,
                                          const Box& box, const Grid& grid,
                                          PolynomialOrder m,
                                          const LambdaSquared& lambda2,
                                          const QuadratureParams& quad,
                                          const IndexVector& k);

struct ConvergenceRow {
  double h_inv;
  double error;
  double rate;  ///< log2(err_prev / err_cur); NaN when undefined
  double seconds;
};

/// Everything a convergence run needs besides the step size.
struct TableSetup {
  SeparatedDensity density;
  Box box;
  double shape_d = 4.0;
  double radius_r = 6.0;
  PolynomialOrder order{3};
  LambdaSquared lambda2{};
  QuadratureParams quad{};
  const HestenesScheme* extension = nullptr;
  std::complex<double> reference = 0.0;
};

/// One row per step; the rate column compares against the previous row.
/// Evaluation points must be grid points of every requested step.
std::vector<ConvergenceRow> convergence_table(const TableSetup& setup,
                                              const std::vector<double>& h_inv_list,
                                              const Eigen::ArrayXd& point);

}  // namespace boxpot
