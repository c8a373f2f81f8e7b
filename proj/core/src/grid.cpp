#include "besovcap/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace besovcap {

void Exponents::validate() const {
  if (n < 1 || n > 3) throw parameter_error("Exponents: n must be 1, 2 or 3");
  if (!(p >= 1.0)) throw parameter_error("Exponents: p must be >= 1");
  if (!(q >= 1.0)) throw parameter_error("Exponents: q must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw parameter_error("Exponents: alpha must lie in (0,1)");
}

double Exponents::p_star() const {
  if (!has_p_star()) throw parameter_error("p_star requires p < n");
  return static_cast<double>(n) * p / (static_cast<double>(n) - p);
}

double Exponents::p_alpha() const {
  if (!has_p_alpha()) throw parameter_error("p_alpha requires alpha*p < n");
  return static_cast<double>(n) * p / (static_cast<double>(n) - alpha * p);
}

namespace {

inline double abs_pow(double x, double p) {
  if (p == 1.0) return std::fabs(x);
  if (p == 2.0) return x * x;
  return std::pow(std::fabs(x), p);
}

} // namespace

GridFunction::GridFunction(int dim, std::array<std::int64_t, 3> lo,
                           std::array<std::int64_t, 3> extents, double spacing)
    : dim_(dim), lo_(lo), ext_(extents), spacing_(spacing) {
  if (dim < 1 || dim > 3) throw parameter_error("GridFunction: dim must be 1, 2 or 3");
  if (!(spacing > 0.0)) throw parameter_error("GridFunction: spacing must be positive");
  for (int a = 0; a < 3; ++a) {
    if (a < dim) {
      if (ext_[a] < 1) throw parameter_error("GridFunction: extents must be >= 1");
    } else {
      lo_[a] = 0;
      ext_[a] = 1;
    }
  }
  const std::int64_t total = ext_[0] * ext_[1] * ext_[2];
  if (total > (std::int64_t{1} << 31))
    throw parameter_error("GridFunction: lattice too large");
  stride_[2] = 1;
  stride_[1] = ext_[2];
  stride_[0] = ext_[1] * ext_[2];
  samples_.assign(static_cast<std::size_t>(total), 0.0);
}

double GridFunction::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim_; ++a) v *= spacing_;
  return v;
}

double GridFunction::value_at(std::span<const double> point) const {
  std::array<std::int64_t, 3> idx{0, 0, 0};
  for (int a = 0; a < dim_; ++a) {
    // Half-open cells; the small nudge keeps lattice-aligned points on the
    // upper side despite rounding in point/spacing.
    const double t = point[a] / spacing_ - static_cast<double>(lo_[a]);
    const auto i = static_cast<std::int64_t>(std::floor(t + 1e-9));
    if (i < 0 || i >= ext_[a]) return 0.0;
    idx[a] = i;
  }
  return samples_[flat(idx)];
}

bool GridFunction::is_zero() const {
  for (double s : samples_)
    if (s != 0.0) return false;
  return true;
}

std::pair<std::int64_t, std::int64_t> GridFunction::support_range(int axis) const {
  require_axis(*this, axis);
  std::int64_t first = ext_[axis], last = -1;
  std::array<std::int64_t, 3> idx{};
  for (idx[0] = 0; idx[0] < ext_[0]; ++idx[0])
    for (idx[1] = 0; idx[1] < ext_[1]; ++idx[1])
      for (idx[2] = 0; idx[2] < ext_[2]; ++idx[2]) {
        if (samples_[flat(idx)] != 0.0) {
          first = std::min(first, idx[axis]);
          last = std::max(last, idx[axis]);
        }
      }
  if (last < 0) return {0, -1};
  return {first, last};
}

void GridFunction::check_finite() const {
  for (double s : samples_)
    if (!std::isfinite(s)) throw numerical_fault("GridFunction: non-finite sample");
}

void GridFunction::shift_lo(std::array<std::int64_t, 3> delta) {
  for (int a = 0; a < dim_; ++a) lo_[a] += delta[a];
}

void require_axis(const GridFunction& f, int axis) {
  if (axis < 0 || axis >= f.dim()) throw parameter_error("axis out of range");
}

double lp_norm(const GridFunction& f, double p) {
  if (!(p >= 1.0)) throw parameter_error("lp_norm: p must be >= 1");
  double sum = 0.0;
  for (double s : f.samples()) sum += abs_pow(s, p);
  return std::pow(sum * f.cell_volume(), 1.0 / p);
}

GridFunction translate(const GridFunction& f, int axis, std::int64_t cells) {
  require_axis(f, axis);
  GridFunction g = f;
  std::array<std::int64_t, 3> delta{0, 0, 0};
  delta[axis] = -cells;
  g.shift_lo(delta);
  return g;
}

namespace {

// Applies body(base_flat, n, stride) to every 1-D line along `axis`.
template <class F>
void for_each_line(const GridFunction& f, int axis, F&& body) {
  const int a1 = (axis == 0) ? 1 : 0;
  const int a2 = (axis == 2) ? 1 : 2;
  std::array<std::int64_t, 3> idx{0, 0, 0};
  for (idx[a1] = 0; idx[a1] < f.extent(a1); ++idx[a1])
    for (idx[a2] = 0; idx[a2] < f.extent(a2); ++idx[a2]) {
      std::array<std::int64_t, 3> base = idx;
      base[axis] = 0;
      body(f.flat(base), f.extent(axis), f.stride(axis));
    }
}

} // namespace

double difference_norm(const GridFunction& f, int axis, std::int64_t shift_cells, double p) {
  require_axis(f, axis);
  if (shift_cells < 0) throw parameter_error("difference_norm: shift_cells must be >= 0");
  if (!(p >= 1.0)) throw parameter_error("difference_norm: p must be >= 1");
  if (shift_cells == 0) return 0.0;
  const std::int64_t m = shift_cells;
  const double* data = f.samples().data();
  double sum = 0.0;
  for_each_line(f, axis, [&](std::int64_t base, std::int64_t n, std::int64_t stride) {
    for (std::int64_t r = -m; r < n; ++r) {
      const double fi = (r >= 0 && r < n) ? data[base + r * stride] : 0.0;
      const double fim = (r + m >= 0 && r + m < n) ? data[base + (r + m) * stride] : 0.0;
      if (fi != 0.0 || fim != 0.0) sum += abs_pow(fim - fi, p);
    }
  });
  return std::pow(sum * f.cell_volume(), 1.0 / p);
}

GridFunction partial_derivative(const GridFunction& f, int axis) {
  require_axis(f, axis);
  std::array<std::int64_t, 3> lo{f.lo(0), f.lo(1), f.lo(2)};
  std::array<std::int64_t, 3> ext{f.extent(0), f.extent(1), f.extent(2)};
  lo[axis] -= 1;
  ext[axis] += 1;
  GridFunction d(f.dim(), lo, ext, f.spacing());
  const double inv_h = 1.0 / f.spacing();
  const double* src = f.samples().data();
  double* dst = d.samples().data();
  const std::int64_t n = f.extent(axis);
  const std::int64_t s_src = f.stride(axis);
  const std::int64_t s_dst = d.stride(axis);

  const int a1 = (axis == 0) ? 1 : 0;
  const int a2 = (axis == 2) ? 1 : 2;
  std::array<std::int64_t, 3> idx{0, 0, 0};
  for (idx[a1] = 0; idx[a1] < f.extent(a1); ++idx[a1])
    for (idx[a2] = 0; idx[a2] < f.extent(a2); ++idx[a2]) {
      std::array<std::int64_t, 3> base = idx;
      base[axis] = 0;
      const std::int64_t bs = f.flat(base);
      const std::int64_t bd = d.flat(base);
      // slot t of the result corresponds to source index t-1
      for (std::int64_t t = 0; t < n + 1; ++t) {
        const double lo_v = (t - 1 >= 0 && t - 1 < n) ? src[bs + (t - 1) * s_src] : 0.0;
        const double hi_v = (t >= 0 && t < n) ? src[bs + t * s_src] : 0.0;
        dst[bd + t * s_dst] = (hi_v - lo_v) * inv_h;
      }
    }
  return d;
}

namespace {

void require_compatible(const GridFunction& a, const GridFunction& b, const char* op) {
  if (a.dim() != b.dim()) throw parameter_error(std::string(op) + ": dimension mismatch");
  if (std::fabs(a.spacing() - b.spacing()) > 1e-12 * a.spacing())
    throw parameter_error(std::string(op) + ": spacing mismatch");
}

} // namespace

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  require_compatible(f, g, "convolve");
  std::array<std::int64_t, 3> lo{}, ext{};
  for (int a = 0; a < 3; ++a) {
    lo[a] = f.lo(a) + g.lo(a);
    ext[a] = (a < f.dim()) ? f.extent(a) + g.extent(a) - 1 : 1;
  }
  GridFunction r(f.dim(), lo, ext, f.spacing());
  const double* fd = f.samples().data();
  const double* gd = g.samples().data();
  double* rd = r.samples().data();

  std::array<std::int64_t, 3> j{};
  for (j[0] = 0; j[0] < g.extent(0); ++j[0])
    for (j[1] = 0; j[1] < g.extent(1); ++j[1])
      for (j[2] = 0; j[2] < g.extent(2); ++j[2]) {
        const double w = gd[g.flat(j)];
        if (w == 0.0) continue;
        std::array<std::int64_t, 3> i{};
        for (i[0] = 0; i[0] < f.extent(0); ++i[0])
          for (i[1] = 0; i[1] < f.extent(1); ++i[1]) {
            const std::int64_t fbase = f.flat({i[0], i[1], 0});
            const std::int64_t rbase = r.flat({i[0] + j[0], i[1] + j[1], j[2]});
            for (std::int64_t k = 0; k < f.extent(2); ++k)
              rd[rbase + k] += w * fd[fbase + k];
          }
      }
  const double scale = f.cell_volume();
  for (double& v : r.samples()) v *= scale;
  return r;
}

GridFunction tighten_support(const GridFunction& f) {
  std::array<std::int64_t, 3> first{}, last{};
  bool empty = false;
  for (int a = 0; a < f.dim(); ++a) {
    auto [lo, hi] = f.support_range(a);
    if (hi < lo) {
      empty = true;
      break;
    }
    first[a] = lo;
    last[a] = hi;
  }
  if (empty) return GridFunction(f.dim(), {0, 0, 0}, {1, 1, 1}, f.spacing());
  std::array<std::int64_t, 3> lo{}, ext{1, 1, 1};
  for (int a = 0; a < f.dim(); ++a) {
    lo[a] = f.lo(a) + first[a];
    ext[a] = last[a] - first[a] + 1;
  }
  GridFunction g(f.dim(), lo, ext, f.spacing());
  std::array<std::int64_t, 3> i{};
  for (i[0] = 0; i[0] < g.extent(0); ++i[0])
    for (i[1] = 0; i[1] < g.extent(1); ++i[1])
      for (i[2] = 0; i[2] < g.extent(2); ++i[2])
        g.cell(i) = f.cell({i[0] + first[0], i[1] + (f.dim() > 1 ? first[1] : 0),
                            i[2] + (f.dim() > 2 ? first[2] : 0)});
  return g;
}

GridFunction subtract(const GridFunction& a, const GridFunction& b) {
  require_compatible(a, b, "subtract");
  std::array<std::int64_t, 3> lo{}, hi{}, ext{};
  for (int ax = 0; ax < 3; ++ax) {
    lo[ax] = std::min(a.lo(ax), b.lo(ax));
    hi[ax] = std::max(a.lo(ax) + a.extent(ax), b.lo(ax) + b.extent(ax));
    ext[ax] = hi[ax] - lo[ax];
  }
  GridFunction r(a.dim(), lo, ext, a.spacing());
  auto accumulate = [&](const GridFunction& src, double sign) {
    std::array<std::int64_t, 3> i{};
    for (i[0] = 0; i[0] < src.extent(0); ++i[0])
      for (i[1] = 0; i[1] < src.extent(1); ++i[1])
        for (i[2] = 0; i[2] < src.extent(2); ++i[2]) {
          std::array<std::int64_t, 3> t{i[0] + src.lo(0) - lo[0], i[1] + src.lo(1) - lo[1],
                                        i[2] + src.lo(2) - lo[2]};
          r.cell(t) += sign * src.cell(i);
        }
  };
  accumulate(a, 1.0);
  accumulate(b, -1.0);
  return r;
}

} // namespace besovcap
