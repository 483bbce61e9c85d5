#pragma once

#include <Eigen/Core>
#include <complex>
#include <functional>
#include <vector>

namespace boxpot {

using UnivariateFn = std::function<std::complex<double>(double)>;

/// Rank-R separated density
///   f(x) = sum_{p=1}^R r_p prod_{j=1}^n f_j^{(p)}(x_j)
/// with real weights r_p and univariate factors that may be complex-valued.
///
/// Two storage patterns share one interface:
///  - an explicit R x n table of factor ids (tests, small n), and
///  - the diagonal pattern f = sum_{p=1}^n [prod_{j != p} base(x_j)] diag(x_p)
///    with unit weights, which stays O(1) in memory for very large n.
class SeparatedDensity {
 public:
  struct Term {
    double weight;
    std::vector<int> factor_of_axis;  // factor id per axis, size n
  };

  static SeparatedDensity from_table(Eigen::Index dimension,
                                     std::vector<UnivariateFn> factors,
                                     std::vector<Term> terms);
  static SeparatedDensity diagonal(Eigen::Index dimension, UnivariateFn base,
                                   UnivariateFn diag);

  Eigen::Index dimension() const { return dimension_; }
  Eigen::Index rank() const {
    return diagonal_ ? dimension_ : static_cast<Eigen::Index>(terms_.size());
  }
  bool is_diagonal() const { return diagonal_; }

  double weight(Eigen::Index p) const;
  int factor_id(Eigen::Index p, Eigen::Index j) const;
  int factor_count() const { return static_cast<int>(factors_.size()); }
  const UnivariateFn& factor(int id) const { return factors_[id]; }
  int base_id() const { return 0; }  // diagonal pattern
  int diag_id() const { return 1; }

  /// Pointwise value; O(n) for the diagonal pattern.
  std::complex<double> operator()(const Eigen::ArrayXd& x) const;

 private:
  SeparatedDensity() = default;
  Eigen::Index dimension_ = 0;
  bool diagonal_ = false;
  std::vector<UnivariateFn> factors_;
  std::vector<Term> terms_;
};

/// The product test density f = (-Laplace + lambda^2) prod_j u(x_j), realized
/// rank-n with f_j^{(p)} = u for j != p and f_p^{(p)} = -u'' + (lambda^2/n) u.
SeparatedDensity test_density(std::function<double(double)> u,
                              std::function<double(double)> u_second,
                              std::complex<double> lambda2, Eigen::Index n);

}  // namespace boxpot
