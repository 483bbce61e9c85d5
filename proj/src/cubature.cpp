#include "boxpot/cubature.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

namespace boxpot {

namespace {

constexpr double kInvSqrtPi = 0.5641895835477562869480794515608;

std::complex<double> outer_weight(const LambdaSquared& lambda2, double t) {
  if (lambda2.im == 0.0) return std::exp(-0.25 * lambda2.re * t);
  return std::exp(std::complex<double>(-0.25 * lambda2.re * t, -0.25 * lambda2.im * t));
}

// P_M(t, x) over an array of y = x^2/(1+t) values.
Eigen::ArrayXd p_poly_array(int order, double t, const Eigen::ArrayXd& y) {
  const double inv1pt = 1.0 / (1.0 + t);
  double scale = std::sqrt(inv1pt);
  Eigen::ArrayXd sum = Eigen::ArrayXd::Constant(y.size(), scale);
  if (order == 1) return sum;
  Eigen::ArrayXd lkm1 = Eigen::ArrayXd::Ones(y.size());
  Eigen::ArrayXd lk = 0.5 - y;
  for (int k = 1; k < order; ++k) {
    scale *= inv1pt;
    sum += scale * lk;
    if (k + 1 < order) {
      Eigen::ArrayXd lkp1 = ((2.0 * k + 0.5 - y) * lk - (k - 0.5) * lkm1) / (k + 1.0);
      lkm1.swap(lk);
      lk.swap(lkp1);
    }
  }
  return sum;
}

// Axes sharing (k_j, box axis, step) are interchangeable: their per-axis
// convolutions coincide, which keeps the work O(distinct classes) rather
// than O(n) in very high dimension.
struct ClassKey {
  long k;
  double lo, hi, h;
  bool operator<(const ClassKey& o) const {
    return std::tie(k, lo, hi, h) < std::tie(o.k, o.lo, o.hi, o.h);
  }
};

struct FactorSamples {
  Eigen::ArrayXd re;
  Eigen::ArrayXd im;
};

struct AxisClass {
  ClassKey key;
  long count = 0;  // number of axes in the class
  AxisRange range;
  long first = 0;          // first node index used
  long last = -1;          // last node index used
  Eigen::ArrayXd xm;       // (k - m)/sqrt(D)
  Eigen::ArrayXd xm2;      // squared
  std::vector<Eigen::Index> collar;  // offsets needing the full Phi difference
  Eigen::ArrayXd p_sc, q_sc;
  std::map<int, FactorSamples> samples;
};

enum class SumMode { full, interior };

struct Workspace {
  std::vector<AxisClass> classes;
  std::vector<int> class_of_axis;
};

Workspace build_workspace(const SeparatedDensity& density, const Box& box,
                          const Grid& grid, const HestenesScheme* extension,
                          const IndexVector& k, SumMode mode) {
  const Eigen::Index n = density.dimension();
  Workspace ws;
  ws.class_of_axis.resize(n);
  std::map<ClassKey, int> index_of;
  for (Eigen::Index j = 0; j < n; ++j) {
    const ClassKey key{k[j], box.lo[j], box.hi[j], grid.h[j]};
    auto [it, inserted] = index_of.try_emplace(key, int(ws.classes.size()));
    if (inserted) ws.classes.push_back(AxisClass{key});
    ws.class_of_axis[j] = it->second;
    ++ws.classes[it->second].count;
  }

  const double sqrt_d = std::sqrt(grid.d);
  for (AxisClass& cls : ws.classes) {
    cls.range = axis_range(cls.key.lo, cls.key.hi, cls.key.h, grid.d, grid.r);
    if (mode == SumMode::interior) {
      cls.first = cls.range.interior_lo;
      cls.last = cls.range.interior_hi;
    } else {
      cls.first = cls.range.m_lo;
      cls.last = cls.range.m_hi;
    }
    const long count = cls.last - cls.first + 1;
    if (count <= 0) continue;
    cls.xm.resize(count);
    cls.p_sc.resize(count);
    cls.q_sc.resize(count);
    for (long i = 0; i < count; ++i) {
      const long mi = cls.first + i;
      const double y = cls.key.h * double(mi);
      cls.xm[i] = double(cls.key.k - mi) / sqrt_d;
      cls.p_sc[i] = (cls.key.lo - y) / (cls.key.h * sqrt_d);
      cls.q_sc[i] = (cls.key.hi - y) / (cls.key.h * sqrt_d);
      if (mode == SumMode::full && !(cls.p_sc[i] <= -grid.r && cls.q_sc[i] >= grid.r))
        cls.collar.push_back(i);
    }
    cls.xm2 = cls.xm.square();
  }

  // Sample every referenced factor once per class (s-independent). Nodes
  // outside the box take the extension when a scheme is given, the factor's
  // own continuation otherwise.
  auto sample_factor = [&](AxisClass& cls, int fid) {
    if (cls.samples.count(fid)) return;
    const long count = cls.last - cls.first + 1;
    FactorSamples samples;
    samples.re.resize(std::max(count, 0L));
    samples.im.resize(std::max(count, 0L));
    const UnivariateFn& f = density.factor(fid);
    for (long i = 0; i < count; ++i) {
      const double y = cls.key.h * double(cls.first + i);
      std::complex<double> value;
      if (y >= cls.key.lo && y <= cls.key.hi)
        value = f(y);
      else if (extension)
        value = hestenes_extend(f, *extension, y, cls.key.lo, cls.key.hi);
      else
        value = f(y);
      samples.re[i] = value.real();
      samples.im[i] = value.imag();
    }
    cls.samples.emplace(fid, std::move(samples));
  };
  if (density.is_diagonal()) {
    for (AxisClass& cls : ws.classes) {
      sample_factor(cls, density.base_id());
      sample_factor(cls, density.diag_id());
    }
  } else {
    for (Eigen::Index p = 0; p < density.rank(); ++p)
      for (Eigen::Index j = 0; j < n; ++j)
        sample_factor(ws.classes[ws.class_of_axis[j]], density.factor_id(p, j));
  }
  return ws;
}

// Per-axis kernel factors at one quadrature node, D^{-1/2} folded in.
Eigen::ArrayXd class_factors(const AxisClass& cls, PolynomialOrder m, double t,
                             const Grid& grid, SumMode mode) {
  const double sqrt_d = std::sqrt(grid.d);
  const double t_ax = t / (cls.key.h * cls.key.h * grid.d);
  Eigen::ArrayXd y = cls.xm2 / (1.0 + t_ax);
  Eigen::ArrayXd factors =
      (kInvSqrtPi / sqrt_d) * (-y).exp() * p_poly_array(m.value(), t_ax, y);
  if (mode == SumMode::full) {
    for (Eigen::Index i : cls.collar)
      factors[i] = phi_diff_truncated(m, cls.xm[i], t_ax, cls.p_sc[i], cls.q_sc[i],
                                      grid.r) / sqrt_d;
  }
  return factors;
}

struct ClassConv {
  std::map<int, std::complex<double>> by_factor;
};

// sum_p r_p prod_j conv(class(j), factor(p, j)); the diagonal pattern closes
// the sum per class group, with the all-axes product kept in the log domain.
std::complex<double> rank_sum(const SeparatedDensity& density,
                              const std::vector<ClassConv>& conv,
                              const Workspace& ws) {
  if (density.is_diagonal()) {
    long zero_axes = 0;
    int zero_class = -1;
    for (std::size_t g = 0; g < ws.classes.size(); ++g) {
      if (std::abs(conv[g].by_factor.at(density.base_id())) == 0.0) {
        zero_axes += ws.classes[g].count;
        zero_class = int(g);
      }
    }
    if (zero_axes >= 2) return 0.0;
    double log_mag = 0.0;
    std::complex<double> phase = 1.0;
    for (std::size_t g = 0; g < ws.classes.size(); ++g) {
      if (int(g) == zero_class) continue;
      const std::complex<double> c = conv[g].by_factor.at(density.base_id());
      log_mag += double(ws.classes[g].count) * std::log(std::abs(c));
      phase *= std::pow(c / std::abs(c), double(ws.classes[g].count));
    }
    if (zero_axes == 1) {
      const std::complex<double> d = conv[zero_class].by_factor.at(density.diag_id());
      return std::exp(log_mag) * phase * d;
    }
    std::complex<double> ratio = 0.0;
    for (std::size_t g = 0; g < ws.classes.size(); ++g) {
      const std::complex<double> c = conv[g].by_factor.at(density.base_id());
      const std::complex<double> d = conv[g].by_factor.at(density.diag_id());
      ratio += double(ws.classes[g].count) * d / c;
    }
    return std::exp(log_mag) * phase * ratio;
  }

  std::complex<double> sum = 0.0;
  for (Eigen::Index p = 0; p < density.rank(); ++p) {
    std::complex<double> prod = density.weight(p);
    for (Eigen::Index j = 0; j < density.dimension() && prod != 0.0; ++j)
      prod *= conv[ws.class_of_axis[j]].by_factor.at(density.factor_id(p, j));
    sum += prod;
  }
  return sum;
}

std::complex<double> convolve(const SeparatedDensity& density, const Box& box,
                              const Grid& grid, PolynomialOrder m,
                              const LambdaSquared& lambda2,
                              const QuadratureParams& quad,
                              const HestenesScheme* extension,
                              const IndexVector& k, SumMode mode) {
  box.validate();
  grid.validate();
  quad.validate();
  lambda2.validate(density.dimension());
  if (box.dimension() != density.dimension() || grid.h.size() != density.dimension() ||
      k.size() != density.dimension())
    throw std::domain_error("evaluate_potential: dimension mismatch");

  Workspace ws = build_workspace(density, box, grid, extension, k, mode);
  for (const AxisClass& cls : ws.classes)
    if (cls.last < cls.first) return 0.0;  // empty axis range annihilates every term

  const DeNodeTable table = trapezoid_weights(quad);
  std::vector<ClassConv> conv(ws.classes.size());
  std::complex<double> acc = 0.0;
  for (const DeNode& node : table.nodes) {
    const std::complex<double> w = outer_weight(lambda2, node.t) * node.weight;
    if (w == std::complex<double>(0.0, 0.0)) continue;
    for (std::size_t g = 0; g < ws.classes.size(); ++g) {
      const AxisClass& cls = ws.classes[g];
      const Eigen::ArrayXd factors = class_factors(cls, m, node.t, grid, mode);
      conv[g].by_factor.clear();
      for (const auto& [fid, samples] : cls.samples)
        conv[g].by_factor[fid] = {(factors * samples.re).sum(),
                                  (factors * samples.im).sum()};
    }
    acc += w * rank_sum(density, conv, ws);
  }
  return 0.25 * acc;
}

}  // namespace

std::complex<double> evaluate_potential(const SeparatedDensity& density,
                                        const Box& box, const Grid& grid,
                                        PolynomialOrder m,
                                        const LambdaSquared& lambda2,
                                        const QuadratureParams& quad,
                                        const HestenesScheme* extension,
                                        const IndexVector& k) {
  return convolve(density, box, grid, m, lambda2, quad, extension, k, SumMode::full);
}

std::complex<double> interior_convolution(const SeparatedDensity& density,
                                          const Box& box, const Grid& grid,
                                          PolynomialOrder m,
                                          const LambdaSquared& lambda2,
                                          const QuadratureParams& quad,
                                          const IndexVector& k) {
  return convolve(density, box, grid, m, lambda2, quad, nullptr, k, SumMode::interior);
}

std::complex<double> quasi_interpolant(const SeparatedDensity& density,
                                       const Grid& grid, PolynomialOrder m,
                                       const Eigen::ArrayXd& x, const Box& box) {
  box.validate();
  grid.validate();
  if (box.dimension() != density.dimension() || grid.h.size() != density.dimension() ||
      x.size() != density.dimension())
    throw std::domain_error("quasi_interpolant: dimension mismatch");
  if (!((x >= box.lo).all() && (x <= box.hi).all()))
    throw std::domain_error("quasi_interpolant: x must lie in the box");

  const Eigen::Index n = density.dimension();
  const double sqrt_d = std::sqrt(grid.d);

  // Class key carries the (real) evaluation coordinate instead of an index.
  struct QKey {
    double x, lo, hi, h;
    bool operator<(const QKey& o) const {
      return std::tie(x, lo, hi, h) < std::tie(o.x, o.lo, o.hi, o.h);
    }
  };
  std::map<QKey, int> index_of;
  struct QClass {
    QKey key;
    long count = 0;
    long m_lo = 0, m_hi = -1;
    Eigen::ArrayXd kernel;
    std::map<int, FactorSamples> samples;
  };
  std::vector<QClass> classes;
  std::vector<int> class_of_axis(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const QKey key{x[j], box.lo[j], box.hi[j], grid.h[j]};
    auto [it, inserted] = index_of.try_emplace(key, int(classes.size()));
    if (inserted) classes.push_back(QClass{key});
    class_of_axis[j] = it->second;
    ++classes[it->second].count;
  }
  const PolynomialOrder order = m;
  for (QClass& cls : classes) {
    const AxisRange range = axis_range(cls.key.lo, cls.key.hi, cls.key.h, grid.d, grid.r);
    cls.m_lo = range.m_lo;
    cls.m_hi = range.m_hi;
    const long count = range.node_count();
    cls.kernel.resize(count);
    for (long i = 0; i < count; ++i) {
      const double y = cls.key.h * double(range.m_lo + i);
      cls.kernel[i] =
          eta_basis(order, (cls.key.x - y) / (cls.key.h * sqrt_d)) / sqrt_d;
    }
  }
  for (Eigen::Index p = 0; p < density.rank(); ++p) {
    for (Eigen::Index j = 0; j < n; ++j) {
      QClass& cls = classes[class_of_axis[j]];
      const int fid = density.factor_id(p, j);
      if (cls.samples.count(fid)) continue;
      const long count = cls.m_hi - cls.m_lo + 1;
      FactorSamples samples;
      samples.re.resize(count);
      samples.im.resize(count);
      const UnivariateFn& f = density.factor(fid);
      for (long i = 0; i < count; ++i) {
        const std::complex<double> value = f(cls.key.h * double(cls.m_lo + i));
        samples.re[i] = value.real();
        samples.im[i] = value.imag();
      }
      cls.samples.emplace(fid, std::move(samples));
    }
  }

  // Reuse the rank assembly through a lightweight adapter workspace.
  Workspace ws;
  ws.class_of_axis = class_of_axis;
  ws.classes.resize(classes.size());
  std::vector<ClassConv> conv(classes.size());
  for (std::size_t g = 0; g < classes.size(); ++g) {
    ws.classes[g].count = classes[g].count;
    for (const auto& [fid, samples] : classes[g].samples)
      conv[g].by_factor[fid] = {(classes[g].kernel * samples.re).sum(),
                                (classes[g].kernel * samples.im).sum()};
  }
  return rank_sum(density, conv, ws);
}

std::vector<ConvergenceRow> convergence_table(const TableSetup& setup,
                                              const std::vector<double>& h_inv_list,
                                              const Eigen::ArrayXd& point) {
  if (h_inv_list.empty())
    throw std::domain_error("convergence_table: empty step list");
  const Eigen::Index n = setup.density.dimension();
  if (point.size() != n)
    throw std::domain_error("convergence_table: point dimension mismatch");

  std::vector<ConvergenceRow> rows;
  rows.reserve(h_inv_list.size());
  double prev_error = std::numeric_limits<double>::quiet_NaN();
  for (double h_inv : h_inv_list) {
    if (!(h_inv > 0.0))
      throw std::domain_error("convergence_table: h_inv must be positive");
    IndexVector k(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double scaled = point[j] * h_inv;
      k[j] = std::lround(scaled);
      if (std::abs(scaled - double(k[j])) > 1e-9 * std::max(1.0, std::abs(scaled)))
        throw std::domain_error("convergence_table: point is not a grid point of h = 1/" +
                                std::to_string(h_inv));
    }
    const Grid grid = Grid::uniform(n, 1.0 / h_inv, setup.shape_d, setup.radius_r);
    const auto start = std::chrono::steady_clock::now();
    const std::complex<double> value =
        evaluate_potential(setup.density, setup.box, grid, setup.order, setup.lambda2,
                           setup.quad, setup.extension, k);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double error = std::abs(value - setup.reference);
    double rate = std::numeric_limits<double>::quiet_NaN();
    if (std::isfinite(prev_error) && prev_error > 0.0 && error > 0.0)
      rate = std::log2(prev_error / error);
    rows.push_back(ConvergenceRow{h_inv, error, rate, seconds});
    prev_error = error;
  }
  return rows;
}

}  // namespace boxpot
