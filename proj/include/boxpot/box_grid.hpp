#pragma once

#include <Eigen/Core>
#include <vector>

namespace boxpot {

/// Axis-aligned integration domain prod_j [lo_j, hi_j].
struct Box {
  Eigen::ArrayXd lo;
  Eigen::ArrayXd hi;
  Eigen::Index dimension() const { return lo.size(); }
  void validate() const;
  static Box cube(Eigen::Index n, double lo_value, double hi_value);
};

/// Grid steps h_j, Gaussian shape parameter D and support radius r.
struct Grid {
  Eigen::ArrayXd h;
  double d = 4.0;
  double r = 6.0;
  void validate() const;
  static Grid uniform(Eigen::Index n, double step, double d = 4.0, double r = 6.0);
};

/// Per-axis node classification. The kept node set is
///   { m : dist(h m, [lo, hi]) <= r h sqrt(D) }   (boundary nodes kept),
/// and the interior band is the open sub-range h m in (lo + rh sqrt(D),
/// hi - rh sqrt(D)); its complement within the kept set is the collar.
struct AxisRange {
  long m_lo = 0;
  long m_hi = -1;
  long interior_lo = 0;
  long interior_hi = -1;
  bool interior_empty() const { return interior_lo > interior_hi; }
  long node_count() const { return m_hi - m_lo + 1; }
};

AxisRange axis_range(double lo, double hi, double h, double d, double r);

/// Axis-wise partition of the quasi-interpolation node set; every kept node
/// is either interior or collar, never both.
struct GridPartition {
  std::vector<AxisRange> axes;
  static GridPartition build(const Box& box, const Grid& grid);
};

}  // namespace boxpot
