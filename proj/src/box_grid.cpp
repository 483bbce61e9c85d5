#include "boxpot/box_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace boxpot {

void Box::validate() const {
  if (lo.size() != hi.size())
    throw std::domain_error("Box: lo and hi must have equal dimension");
  if (lo.size() < 1) throw std::domain_error("Box: dimension must be >= 1");
  if (!(lo < hi).all()) throw std::domain_error("Box: requires lo_j < hi_j");
}

Box Box::cube(Eigen::Index n, double lo_value, double hi_value) {
  Box box{Eigen::ArrayXd::Constant(n, lo_value), Eigen::ArrayXd::Constant(n, hi_value)};
  box.validate();
  return box;
}

void Grid::validate() const {
  if (h.size() < 1 || !(h > 0.0).all())
    throw std::domain_error("Grid: steps h_j must be positive");
  if (!(d > 0.0)) throw std::domain_error("Grid: shape parameter D must be positive");
  if (!(r > 0.0)) throw std::domain_error("Grid: support radius r must be positive");
}

Grid Grid::uniform(Eigen::Index n, double step, double d, double r) {
  Grid grid{Eigen::ArrayXd::Constant(n, step), d, r};
  grid.validate();
  return grid;
}

AxisRange axis_range(double lo, double hi, double h, double d, double r) {
  // Boundary-distance ties keep the node: the kept set uses <=, the interior
  // band is open. Classification at exact distance is value-consistent with
  // the per-endpoint far-field rule either way.
  constexpr double kTieEps = 1e-9;
  const double band = r * h * std::sqrt(d);
  AxisRange range;
  range.m_lo = static_cast<long>(std::ceil((lo - band) / h - kTieEps));
  range.m_hi = static_cast<long>(std::floor((hi + band) / h + kTieEps));
  range.interior_lo = static_cast<long>(std::floor((lo + band) / h + kTieEps)) + 1;
  range.interior_hi = static_cast<long>(std::ceil((hi - band) / h - kTieEps)) - 1;
  if (range.interior_empty()) {
    range.interior_lo = 0;
    range.interior_hi = -1;
  }
  return range;
}

GridPartition GridPartition::build(const Box& box, const Grid& grid) {
  box.validate();
  grid.validate();
  if (grid.h.size() != box.dimension())
    throw std::domain_error("GridPartition: grid/box dimension mismatch");
  GridPartition partition;
  partition.axes.reserve(box.dimension());
  for (Eigen::Index j = 0; j < box.dimension(); ++j)
    partition.axes.push_back(axis_range(box.lo[j], box.hi[j], grid.h[j], grid.d, grid.r));
  return partition;
}

}  // namespace boxpot
