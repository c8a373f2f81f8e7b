#include "besovcap/modulus.hpp"

#include <algorithm>
#include <cmath>

#include "besovcap/parallel.hpp"

namespace besovcap {

ModulusCurve::ModulusCurve(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.empty() || knots_.size() != values_.size())
    throw parameter_error("ModulusCurve: knots and values must be nonempty and equal-sized");
  if (knots_.front() != 0.0 || values_.front() != 0.0)
    throw parameter_error("ModulusCurve: curve must start at (0, 0)");
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i] > knots_[i - 1])) throw parameter_error("ModulusCurve: knots must increase");
    if (values_[i] < values_[i - 1]) throw parameter_error("ModulusCurve: values must not decrease");
  }
  cumulative_.resize(knots_.size(), 0.0);
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    const double w = knots_[i] - knots_[i - 1];
    cumulative_[i] = cumulative_[i - 1] + 0.5 * (values_[i] + values_[i - 1]) * w;
  }
}

ModulusCurve ModulusCurve::zero() { return ModulusCurve({0.0}, {0.0}); }

double ModulusCurve::value(double delta) const {
  if (delta < 0.0) throw parameter_error("ModulusCurve::value: delta must be >= 0");
  if (delta >= knots_.back()) return plateau();
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), delta);
  const std::size_t i = static_cast<std::size_t>(it - knots_.begin());
  if (i == 0) return values_.front();
  const double a = knots_[i - 1], b = knots_[i];
  const double s = (delta - a) / (b - a);
  return values_[i - 1] * (1.0 - s) + values_[i] * s;
}

double ModulusCurve::averaged(double t) const {
  if (!(t > 0.0)) throw parameter_error("averaged_modulus: t must be positive");
  const double W = knots_.back();
  if (t >= W) return (cumulative_.back() + (t - W) * plateau()) / t;
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - knots_.begin());
  const double a = knots_[i - 1];
  const double va = values_[i - 1];
  const double vt = value(t);
  return (cumulative_[i - 1] + 0.5 * (va + vt) * (t - a)) / t;
}

namespace {

// Largest lattice shift m with m*h <= delta, robust against delta being a
// rounded multiple of h.
std::int64_t max_shift(double delta, double h) {
  const double u = delta / h;
  return static_cast<std::int64_t>(std::floor(u * (1.0 + 4e-16) + 1e-12));
}

std::int64_t support_cells(const GridFunction& f, int axis) {
  auto [first, last] = f.support_range(axis);
  if (last < first) return 0;
  return last - first + 1;
}

} // namespace

double partial_modulus(const GridFunction& f, int axis, double delta, double p) {
  require_axis(f, axis);
  if (delta < 0.0) throw parameter_error("partial_modulus: delta must be >= 0");
  const std::int64_t w = support_cells(f, axis);
  if (w == 0) return 0.0;
  const std::int64_t m_max = std::min<std::int64_t>(max_shift(delta, f.spacing()), w);
  double best = 0.0;
  for (std::int64_t m = 1; m <= m_max; ++m)
    best = std::max(best, difference_norm(f, axis, m, p));
  return best;
}

ModulusCurve curve_of(const GridFunction& f, int axis, double p) {
  require_axis(f, axis);
  const std::int64_t w = support_cells(f, axis);
  if (w == 0) return ModulusCurve::zero();
  const double h = f.spacing();
  std::vector<double> diffs(static_cast<std::size_t>(w) + 1, 0.0);
  parallel_for(w, [&](std::ptrdiff_t i) {
    diffs[static_cast<std::size_t>(i) + 1] = difference_norm(f, axis, i + 1, p);
  });
  std::vector<double> knots(diffs.size()), values(diffs.size());
  double running = 0.0;
  for (std::size_t m = 0; m < diffs.size(); ++m) {
    running = std::max(running, diffs[m]);
    knots[m] = static_cast<double>(m) * h;
    values[m] = running;
  }
  return ModulusCurve(std::move(knots), std::move(values));
}

double averaged_modulus(const ModulusCurve& w, double t) { return w.averaged(t); }

double modulus_at_infinity(const GridFunction& f, int axis, double p) {
  return curve_of(f, axis, p).plateau();
}

DerivativeViaModulus derivative_norm_via_modulus(const GridFunction& f, int axis, double p) {
  require_axis(f, axis);
  const std::int64_t w = support_cells(f, axis);
  DerivativeViaModulus out{0.0, 0.0};
  if (w == 0) return out;
  const double h = f.spacing();
  double running = 0.0;
  for (std::int64_t m = 1; m <= w; ++m) {
    running = std::max(running, difference_norm(f, axis, m, p));
    const double ratio = running / (static_cast<double>(m) * h);
    if (m <= 5) out.reported = std::max(out.reported, ratio);
    out.full_sup = std::max(out.full_sup, ratio);
  }
  return out;
}

} // namespace besovcap
