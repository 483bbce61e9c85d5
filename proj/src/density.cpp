#include "boxpot/density.hpp"

#include <stdexcept>
#include <utility>

namespace boxpot {

SeparatedDensity SeparatedDensity::from_table(Eigen::Index dimension,
                                              std::vector<UnivariateFn> factors,
                                              std::vector<Term> terms) {
  if (dimension < 1) throw std::domain_error("SeparatedDensity: dimension must be >= 1");
  if (terms.empty()) throw std::domain_error("SeparatedDensity: rank must be >= 1");
  for (const Term& term : terms) {
    if (static_cast<Eigen::Index>(term.factor_of_axis.size()) != dimension)
      throw std::domain_error("SeparatedDensity: term/axis table dimension mismatch");
    for (int id : term.factor_of_axis)
      if (id < 0 || id >= static_cast<int>(factors.size()))
        throw std::domain_error("SeparatedDensity: factor id out of range");
  }
  SeparatedDensity density;
  density.dimension_ = dimension;
  density.factors_ = std::move(factors);
  density.terms_ = std::move(terms);
  return density;
}

SeparatedDensity SeparatedDensity::diagonal(Eigen::Index dimension, UnivariateFn base,
                                            UnivariateFn diag) {
  if (dimension < 1) throw std::domain_error("SeparatedDensity: dimension must be >= 1");
  SeparatedDensity density;
  density.dimension_ = dimension;
  density.diagonal_ = true;
  density.factors_.push_back(std::move(base));
  density.factors_.push_back(std::move(diag));
  return density;
}

double SeparatedDensity::weight(Eigen::Index p) const {
  if (diagonal_) return 1.0;
  return terms_.at(p).weight;
}

int SeparatedDensity::factor_id(Eigen::Index p, Eigen::Index j) const {
  if (diagonal_) return j == p ? diag_id() : base_id();
  return terms_.at(p).factor_of_axis.at(j);
}

std::complex<double> SeparatedDensity::operator()(const Eigen::ArrayXd& x) const {
  if (x.size() != dimension_)
    throw std::domain_error("SeparatedDensity: evaluation point dimension mismatch");
  if (diagonal_) {
    // prod base * sum diag/base, with zero base factors handled directly
    std::vector<std::complex<double>> base_values(dimension_), diag_values(dimension_);
    for (Eigen::Index j = 0; j < dimension_; ++j) {
      base_values[j] = factors_[0](x[j]);
      diag_values[j] = factors_[1](x[j]);
    }
    std::complex<double> sum = 0.0;
    for (Eigen::Index p = 0; p < dimension_; ++p) {
      std::complex<double> prod = diag_values[p];
      for (Eigen::Index j = 0; j < dimension_ && prod != 0.0; ++j)
        if (j != p) prod *= base_values[j];
      sum += prod;
    }
    return sum;
  }
  std::complex<double> sum = 0.0;
  for (const Term& term : terms_) {
    std::complex<double> prod = term.weight;
    for (Eigen::Index j = 0; j < dimension_ && prod != 0.0; ++j)
      prod *= factors_[term.factor_of_axis[j]](x[j]);
    sum += prod;
  }
  return sum;
}

SeparatedDensity test_density(std::function<double(double)> u,
                              std::function<double(double)> u_second,
                              std::complex<double> lambda2, Eigen::Index n) {
  if (n < 1) throw std::domain_error("test_density: dimension must be >= 1");
  const std::complex<double> lambda2_over_n = lambda2 / double(n);
  UnivariateFn base = [u](double x) { return std::complex<double>(u(x)); };
  UnivariateFn diag = [u, u_second, lambda2_over_n](double x) {
    return std::complex<double>(-u_second(x)) + lambda2_over_n * u(x);
  };
  return SeparatedDensity::diagonal(n, std::move(base), std::move(diag));
}

}  // namespace boxpot
