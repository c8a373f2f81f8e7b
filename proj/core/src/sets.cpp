#include "besovcap/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace besovcap {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DiscreteSet::DiscreteSet(int dim, double spacing) : dim_(dim), spacing_(spacing) {
  if (dim < 1 || dim > 3) throw parameter_error("DiscreteSet: dim must be 1, 2 or 3");
  if (!(spacing > 0.0)) throw parameter_error("DiscreteSet: spacing must be positive");
  mask_.assign(1, 0);
}

DiscreteSet::DiscreteSet(int dim, std::array<std::int64_t, 3> lo,
                         std::array<std::int64_t, 3> extents, double spacing)
    : dim_(dim), spacing_(spacing), lo_(lo), ext_(extents) {
  if (dim < 1 || dim > 3) throw parameter_error("DiscreteSet: dim must be 1, 2 or 3");
  if (!(spacing > 0.0)) throw parameter_error("DiscreteSet: spacing must be positive");
  normalize_axes();
  const std::int64_t total = ext_[0] * ext_[1] * ext_[2];
  if (total > (std::int64_t{1} << 31)) throw parameter_error("DiscreteSet: lattice too large");
  mask_.assign(static_cast<std::size_t>(total), 0);
}

void DiscreteSet::normalize_axes() {
  for (int a = 0; a < 3; ++a) {
    if (a < dim_) {
      if (ext_[a] < 1) throw parameter_error("DiscreteSet: extents must be >= 1");
    } else {
      lo_[a] = 0;
      ext_[a] = 1;
    }
  }
}

double DiscreteSet::measure() const {
  double v = static_cast<double>(count_);
  for (int a = 0; a < dim_; ++a) v *= spacing_;
  return v;
}

bool DiscreteSet::contains(std::array<std::int64_t, 3> global) const {
  std::array<std::int64_t, 3> local{};
  for (int a = 0; a < 3; ++a) {
    local[a] = global[a] - lo_[a];
    if (local[a] < 0 || local[a] >= ext_[a]) return false;
  }
  return mask_[flat(local)] != 0;
}

void DiscreteSet::insert(std::array<std::int64_t, 3> global) {
  std::array<std::int64_t, 3> local{};
  for (int a = 0; a < 3; ++a) {
    local[a] = global[a] - lo_[a];
    if (local[a] < 0 || local[a] >= ext_[a])
      throw parameter_error("DiscreteSet::insert: cell outside bounding box");
  }
  auto& slot = mask_[flat(local)];
  if (!slot) {
    slot = 1;
    ++count_;
  }
}

void DiscreteSet::tighten() {
  if (count_ == 0) {
    lo_ = {0, 0, 0};
    ext_ = {1, 1, 1};
    mask_.assign(1, 0);
    return;
  }
  std::array<std::int64_t, 3> mn{ext_[0], ext_[1], ext_[2]}, mx{-1, -1, -1};
  std::array<std::int64_t, 3> i{};
  for (i[0] = 0; i[0] < ext_[0]; ++i[0])
    for (i[1] = 0; i[1] < ext_[1]; ++i[1])
      for (i[2] = 0; i[2] < ext_[2]; ++i[2])
        if (mask_[flat(i)])
          for (int a = 0; a < 3; ++a) {
            mn[a] = std::min(mn[a], i[a]);
            mx[a] = std::max(mx[a], i[a]);
          }
  DiscreteSet out(dim_, {lo_[0] + mn[0], lo_[1] + mn[1], lo_[2] + mn[2]},
                  {mx[0] - mn[0] + 1, mx[1] - mn[1] + 1, mx[2] - mn[2] + 1}, spacing_);
  for (i[0] = mn[0]; i[0] <= mx[0]; ++i[0])
    for (i[1] = mn[1]; i[1] <= mx[1]; ++i[1])
      for (i[2] = mn[2]; i[2] <= mx[2]; ++i[2])
        if (mask_[flat(i)]) out.insert({i[0] + lo_[0], i[1] + lo_[1], i[2] + lo_[2]});
  *this = std::move(out);
}

GridFunction DiscreteSet::indicator() const {
  GridFunction f(dim_, lo_, ext_, spacing_);
  double* data = f.samples().data();
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) data[i] = 1.0;
  return f;
}

namespace {

// Felzenszwalb-Huttenlocher 1-D squared distance transform (lower envelope
// of parabolas); distances in cell units.
void dt1d(std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
          std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  d.resize(n);
  v.resize(n);
  z.resize(n + 1);
  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = 1; q < n; ++q) {
    double s;
    for (;;) {
      const int p = v[k];
      s = ((f[q] + q * q) - (f[p] + p * p)) / (2.0 * (q - p));
      if (s > z[k]) break;
      --k;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

// In-place n-D squared EDT on a dense field (kInf = no seed).
void edt(std::vector<double>& field, std::array<std::int64_t, 3> ext, int dim) {
  std::array<std::int64_t, 3> stride{ext[1] * ext[2], ext[2], 1};
  std::vector<double> line, dist;
  std::vector<int> v;
  std::vector<double> z;
  for (int axis = 0; axis < dim; ++axis) {
    if (ext[axis] == 1) continue;
    const int a1 = (axis == 0) ? 1 : 0;
    const int a2 = (axis == 2) ? 1 : 2;
    line.resize(static_cast<std::size_t>(ext[axis]));
    std::array<std::int64_t, 3> i{};
    for (i[a1] = 0; i[a1] < ext[a1]; ++i[a1])
      for (i[a2] = 0; i[a2] < ext[a2]; ++i[a2]) {
        std::array<std::int64_t, 3> base = i;
        base[axis] = 0;
        const std::int64_t b = base[0] * stride[0] + base[1] * stride[1] + base[2] * stride[2];
        const std::int64_t s = stride[axis];
        for (std::int64_t t = 0; t < ext[axis]; ++t) line[static_cast<std::size_t>(t)] = field[b + t * s];
        dt1d(line, dist, v, z);
        for (std::int64_t t = 0; t < ext[axis]; ++t) field[b + t * s] = dist[static_cast<std::size_t>(t)];
      }
  }
}

} // namespace

DiscreteSet DiscreteSet::dilated_by(double radius) const {
  if (!(radius >= 0.0)) throw parameter_error("dilated_by: radius must be >= 0");
  if (empty()) return *this;
  const double rc = radius / spacing_;
  const std::int64_t grow = static_cast<std::int64_t>(std::ceil(rc)) + 1;
  std::array<std::int64_t, 3> lo = lo_, ext = ext_;
  for (int a = 0; a < dim_; ++a) {
    lo[a] -= grow;
    ext[a] += 2 * grow;
  }
  DiscreteSet out(dim_, lo, ext, spacing_);
  std::vector<double> field(static_cast<std::size_t>(ext[0] * ext[1] * ext[2]), kInf);
  for_each_cell([&](std::array<std::int64_t, 3> g) {
    const std::int64_t idx =
        ((g[0] - lo[0]) * ext[1] + (g[1] - lo[1])) * ext[2] + (g[2] - lo[2]);
    field[static_cast<std::size_t>(idx)] = 0.0;
  });
  edt(field, ext, dim_);
  const double limit = rc * rc * (1.0 + 1e-12) + 1e-12;
  std::array<std::int64_t, 3> i{};
  for (i[0] = 0; i[0] < ext[0]; ++i[0])
    for (i[1] = 0; i[1] < ext[1]; ++i[1])
      for (i[2] = 0; i[2] < ext[2]; ++i[2]) {
        const std::int64_t idx = (i[0] * ext[1] + i[1]) * ext[2] + i[2];
        if (field[static_cast<std::size_t>(idx)] <= limit)
          out.insert({i[0] + lo[0], i[1] + lo[1], i[2] + lo[2]});
      }
  out.tighten();
  return out;
}

DiscreteSet DiscreteSet::eroded_by(double radius) const {
  if (!(radius >= 0.0)) throw parameter_error("eroded_by: radius must be >= 0");
  if (empty()) return *this;
  const double rc = radius / spacing_;
  std::array<std::int64_t, 3> lo = lo_, ext = ext_;
  for (int a = 0; a < dim_; ++a) {
    lo[a] -= 1;
    ext[a] += 2;
  }
  // seeds are complement cells (the pad ring is complement by construction)
  std::vector<double> field(static_cast<std::size_t>(ext[0] * ext[1] * ext[2]), 0.0);
  for_each_cell([&](std::array<std::int64_t, 3> g) {
    const std::int64_t idx =
        ((g[0] - lo[0]) * ext[1] + (g[1] - lo[1])) * ext[2] + (g[2] - lo[2]);
    field[static_cast<std::size_t>(idx)] = kInf;
  });
  edt(field, ext, dim_);
  DiscreteSet out(dim_, lo_, ext_, spacing_);
  const double limit = rc * rc * (1.0 + 1e-12);
  for_each_cell([&](std::array<std::int64_t, 3> g) {
    const std::int64_t idx =
        ((g[0] - lo[0]) * ext[1] + (g[1] - lo[1])) * ext[2] + (g[2] - lo[2]);
    if (field[static_cast<std::size_t>(idx)] > limit) out.insert(g);
  });
  out.tighten();
  return out;
}

DiscreteSet DiscreteSet::unioned(const DiscreteSet& other) const {
  if (other.dim_ != dim_) throw parameter_error("unioned: dimension mismatch");
  if (std::fabs(other.spacing_ - spacing_) > 1e-12 * spacing_)
    throw parameter_error("unioned: lattice spacing mismatch");
  std::array<std::int64_t, 3> lo{}, hi{};
  for (int a = 0; a < 3; ++a) {
    lo[a] = std::min(lo_[a], other.lo_[a]);
    hi[a] = std::max(lo_[a] + ext_[a], other.lo_[a] + other.ext_[a]);
  }
  DiscreteSet out(dim_, lo, {hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]}, spacing_);
  for_each_cell([&](std::array<std::int64_t, 3> g) { out.insert(g); });
  other.for_each_cell([&](std::array<std::int64_t, 3> g) { out.insert(g); });
  out.tighten();
  return out;
}

bool DiscreteSet::subset_of(const DiscreteSet& other) const {
  bool ok = true;
  for_each_cell([&](std::array<std::int64_t, 3> g) {
    if (!other.contains(g)) ok = false;
  });
  return ok;
}

double measure(const DiscreteSet& E) { return E.measure(); }

double projection_measure(const DiscreteSet& E, int axis) {
  if (E.dim() == 1)
    throw parameter_error("projection_measure: undefined for n = 1 (0-dimensional projection)");
  if (axis < 0 || axis >= E.dim()) throw parameter_error("projection_measure: axis out of range");
  const int a1 = (axis == 0) ? 1 : 0;
  const int a2 = (axis == 2) ? 1 : 2;
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(E.extent(a1) * E.extent(a2)), 0);
  E.for_each_cell([&](std::array<std::int64_t, 3> g) {
    const std::int64_t u = g[a1] - E.lo(a1);
    const std::int64_t v = g[a2] - E.lo(a2);
    hit[static_cast<std::size_t>(u * E.extent(a2) + v)] = 1;
  });
  std::int64_t count = 0;
  for (auto h : hit) count += h;
  double m = static_cast<double>(count);
  for (int a = 0; a < E.dim() - 1; ++a) m *= E.spacing();
  return m;
}

double overlap(const DiscreteSet& E, int axis, std::int64_t shift_cells) {
  if (axis < 0 || axis >= E.dim()) throw parameter_error("overlap: axis out of range");
  if (shift_cells < 0) throw parameter_error("overlap: shift_cells must be >= 0");
  std::int64_t count = 0;
  E.for_each_cell([&](std::array<std::int64_t, 3> g) {
    g[axis] += shift_cells;
    if (E.contains(g)) ++count;
  });
  double m = static_cast<double>(count);
  for (int a = 0; a < E.dim(); ++a) m *= E.spacing();
  return m;
}

double translation_search(const DiscreteSet& E, double mu, double lam, double eta) {
  const int n = E.dim();
  if (!(eta > 0.0)) throw parameter_error("translation_search: eta must be positive");
  if (E.measure() > mu * (1.0 + 1e-12))
    throw parameter_error("translation_search: |E| exceeds mu");
  for (int k = 0; k < n; ++k) {
    // n = 1 is rejected inside projection_measure
    if (projection_measure(E, k) < lam * (1.0 - 1e-12))
      throw parameter_error("translation_search: projection measure below lam");
  }
  const double h = E.spacing();
  const double H = 2.0 * mu * mu * static_cast<double>(n) / (lam * eta);
  const auto m_max = static_cast<std::int64_t>(std::ceil(H / h - 1e-9));
  for (std::int64_t m = 1; m <= m_max; ++m) {
    double total = 0.0;
    for (int k = 0; k < n; ++k) total += overlap(E, k, m);
    if (total < eta) return static_cast<double>(m) * h;
  }
  throw numerical_fault("translation_search: scan exhausted without meeting the averaging bound");
}

namespace {

std::int64_t first_center_at_or_after(double x, double h) {
  return static_cast<std::int64_t>(std::ceil(x / h - 0.5 - 1e-9));
}

std::int64_t last_center_before(double x, double h) {
  return static_cast<std::int64_t>(std::ceil(x / h - 0.5 - 1e-9)) - 1;
}

struct Shape {
  enum class Kind { box, ball } kind;
  std::array<double, 6> a{}; // box bounds or (cx, cy, r)
  int dim = 0;
};

} // namespace

DiscreteSet parse_set_description(const std::string& text, double spacing) {
  if (!(spacing > 0.0)) throw parameter_error("set description: spacing must be positive");
  std::vector<Shape> shapes;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    std::vector<double> args;
    double v;
    while (ls >> v) args.push_back(v);
    if (!ls.eof())
      throw parameter_error("set description line " + std::to_string(lineno) +
                            ": malformed number");
    Shape s;
    if (kind == "box") {
      if (args.size() != 2 && args.size() != 4 && args.size() != 6)
        throw parameter_error("set description line " + std::to_string(lineno) +
                              ": box needs 2, 4 or 6 bounds");
      s.kind = Shape::Kind::box;
      s.dim = static_cast<int>(args.size() / 2);
      for (std::size_t i = 0; i < args.size(); ++i) s.a[i] = args[i];
      for (int a = 0; a < s.dim; ++a)
        if (!(s.a[2 * a] < s.a[2 * a + 1]))
          throw parameter_error("set description line " + std::to_string(lineno) +
                                ": box bounds must increase");
    } else if (kind == "ball") {
      if (args.size() != 3)
        throw parameter_error("set description line " + std::to_string(lineno) +
                              ": ball needs cx cy r");
      if (!(args[2] > 0.0))
        throw parameter_error("set description line " + std::to_string(lineno) +
                              ": ball radius must be positive");
      s.kind = Shape::Kind::ball;
      s.dim = 2;
      s.a = {args[0], args[1], args[2], 0, 0, 0};
    } else {
      throw parameter_error("set description line " + std::to_string(lineno) +
                            ": unknown shape '" + kind + "'");
    }
    shapes.push_back(s);
  }
  if (shapes.empty()) throw parameter_error("set description: no shapes");
  const int dim = shapes.front().dim;
  for (const auto& s : shapes)
    if (s.dim != dim) throw parameter_error("set description: mixed dimensions");

  // joint cell bounding box
  std::array<std::int64_t, 3> lo{0, 0, 0}, hi{1, 1, 1};
  bool first = true;
  for (const auto& s : shapes) {
    std::array<std::int64_t, 3> slo{0, 0, 0}, shi{1, 1, 1};
    for (int a = 0; a < dim; ++a) {
      double x0, x1;
      if (s.kind == Shape::Kind::box) {
        x0 = s.a[2 * a];
        x1 = s.a[2 * a + 1];
      } else {
        x0 = s.a[a] - s.a[2];
        x1 = s.a[a] + s.a[2];
      }
      slo[a] = first_center_at_or_after(x0, spacing);
      shi[a] = last_center_before(x1, spacing) + 2;
    }
    if (first) {
      lo = slo;
      hi = shi;
      first = false;
    } else {
      for (int a = 0; a < dim; ++a) {
        lo[a] = std::min(lo[a], slo[a]);
        hi[a] = std::max(hi[a], shi[a]);
      }
    }
  }
  std::array<std::int64_t, 3> ext{};
  for (int a = 0; a < 3; ++a) ext[a] = (a < dim) ? std::max<std::int64_t>(hi[a] - lo[a], 1) : 1;
  DiscreteSet out(dim, lo, ext, spacing);

  std::array<std::int64_t, 3> i{};
  for (i[0] = lo[0]; i[0] < lo[0] + ext[0]; ++i[0])
    for (i[1] = lo[1]; i[1] < lo[1] + ext[1]; ++i[1])
      for (i[2] = lo[2]; i[2] < lo[2] + ext[2]; ++i[2]) {
        bool inside = false;
        for (const auto& s : shapes) {
          if (s.kind == Shape::Kind::box) {
            bool ok = true;
            for (int a = 0; a < dim; ++a) {
              const double c = (static_cast<double>(i[a]) + 0.5) * spacing;
              if (!(c >= s.a[2 * a] - 1e-9 * spacing && c < s.a[2 * a + 1] - 1e-9 * spacing))
                ok = false;
            }
            inside = inside || ok;
          } else {
            const double dx = (static_cast<double>(i[0]) + 0.5) * spacing - s.a[0];
            const double dy = (static_cast<double>(i[1]) + 0.5) * spacing - s.a[1];
            if (dx * dx + dy * dy <= s.a[2] * s.a[2] * (1.0 + 1e-12)) inside = true;
          }
          if (inside) break;
        }
        if (inside) out.insert(i);
      }
  out.tighten();
  if (out.empty()) throw parameter_error("set description: no lattice cells inside");
  return out;
}

} // namespace besovcap
