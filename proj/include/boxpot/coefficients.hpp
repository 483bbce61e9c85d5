#pragma once

#include <Eigen/Core>
#include <complex>

#include "boxpot/box_grid.hpp"
#include "boxpot/de_quadrature.hpp"
#include "boxpot/phi_kernel.hpp"

namespace boxpot {

using IndexVector = Eigen::Array<long, Eigen::Dynamic, 1>;

/// Convolution coefficient a_k of the interior sum: the t-integral of
///   e^{-lambda^2 t/4} prod_j pi^{-1/2} e^{-k_j^2/(D(1+t_j))} P_M(t_j, k_j/sqrt(D))
/// over the DE node table, with per-axis time t_j = t/(h_j^2 D) and the
/// 1/(4 D^{n/2}) prefactor. Invariant under k_j -> -k_j; real for real
/// lambda^2.
std::complex<double> a_coeff(const IndexVector& k, PolynomialOrder m,
                             const Eigen::ArrayXd& h, double d,
                             const LambdaSquared& lambda2,
                             const DeNodeTable& table);
std::complex<double> a_coeff(const IndexVector& k, PolynomialOrder m,
                             const Eigen::ArrayXd& h, double d,
                             const LambdaSquared& lambda2,
                             const QuadratureParams& quad);

/// Boundary coefficient b_{k,m}: per-axis factors are Phi_M differences at
/// the scaled endpoint distances, with endpoints beyond r replaced by their
/// far-field limits (a-factor or zero). Deep inside the box b_{k,m} equals
/// a_{k-m} exactly under this classification.
std::complex<double> b_coeff(const IndexVector& k, const IndexVector& m_idx,
                             const Box& box, PolynomialOrder m,
                             const Eigen::ArrayXd& h, double d,
                             const LambdaSquared& lambda2,
                             const DeNodeTable& table, double r);
std::complex<double> b_coeff(const IndexVector& k, const IndexVector& m_idx,
                             const Box& box, PolynomialOrder m,
                             const Eigen::ArrayXd& h, double d,
                             const LambdaSquared& lambda2,
                             const QuadratureParams& quad, double r);

}  // namespace boxpot
