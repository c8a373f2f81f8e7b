#include "besovcap/rearrange.hpp"

#include <algorithm>
#include <cmath>

#include "besovcap/modulus.hpp"

namespace besovcap {

RearrangementProfile::RearrangementProfile(std::vector<double> breakpoints,
                                           std::vector<double> levels)
    : breakpoints_(std::move(breakpoints)), levels_(std::move(levels)) {
  if (breakpoints_.size() != levels_.size())
    throw parameter_error("RearrangementProfile: breakpoints/levels size mismatch");
  double prev_b = 0.0;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > prev_b))
      throw parameter_error("RearrangementProfile: breakpoints must increase from 0");
    if (!(levels_[i] > 0.0)) throw parameter_error("RearrangementProfile: levels must be positive");
    if (i > 0 && !(levels_[i] < levels_[i - 1]))
      throw parameter_error("RearrangementProfile: levels must strictly decrease");
    prev_b = breakpoints_[i];
  }
  cumulative_.resize(breakpoints_.size(), 0.0);
  double prev = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    acc += (breakpoints_[i] - prev) * levels_[i];
    cumulative_[i] = acc;
    prev = breakpoints_[i];
  }
}

double RearrangementProfile::star(double t) const {
  if (!(t > 0.0)) throw parameter_error("rearrangement: t must be positive");
  // value at a breakpoint belongs to the left step
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.end()) return 0.0;
  return levels_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

double RearrangementProfile::integral_to(double t) const {
  if (!(t >= 0.0)) throw parameter_error("rearrangement: t must be >= 0");
  if (breakpoints_.empty() || t == 0.0) return 0.0;
  if (t >= breakpoints_.back()) return cumulative_.back();
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
  const double prev_b = (i == 0) ? 0.0 : breakpoints_[i - 1];
  const double prev_c = (i == 0) ? 0.0 : cumulative_[i - 1];
  return prev_c + (t - prev_b) * levels_[i];
}

double RearrangementProfile::double_star(double t) const {
  if (!(t > 0.0)) throw parameter_error("double_star: t must be positive");
  return integral_to(t) / t;
}

double distribution(const GridFunction& f, double y) {
  if (!(y > 0.0)) throw parameter_error("distribution: y must be positive");
  std::int64_t count = 0;
  for (double s : f.samples())
    if (std::fabs(s) > y) ++count;
  return static_cast<double>(count) * f.cell_volume();
}

RearrangementProfile rearrangement(const GridFunction& f) {
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(f.size()));
  for (double s : f.samples())
    if (s != 0.0) vals.push_back(std::fabs(s));
  // stable sort keeps lattice order within ties, so profiles are reproducible
  std::stable_sort(vals.begin(), vals.end(), std::greater<double>());
  const double vol = f.cell_volume();
  std::vector<double> breaks, levels;
  std::size_t i = 0;
  std::int64_t seen = 0;
  while (i < vals.size()) {
    std::size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    seen += static_cast<std::int64_t>(j - i);
    levels.push_back(vals[i]);
    breaks.push_back(static_cast<double>(seen) * vol);
    i = j;
  }
  return RearrangementProfile(std::move(breaks), std::move(levels));
}

double double_star(const RearrangementProfile& profile, double t) { return profile.double_star(t); }

double deriv_identity_gap(const RearrangementProfile& profile, double t) {
  if (!(t > 0.0)) throw parameter_error("deriv_identity_gap: t must be positive");
  if (profile.empty()) return 0.0;
  const double B = profile.support_measure();
  const double C = profile.total_integral();
  double integral = 0.0;
  if (t < B) {
    // On a step (a, b] with level L and F(u) = F_a + L (u - a):
    //   int (F(u)/u - L)/u du = (F_a - L a) (1/x - 1/y)  over [x, y] inside.
    const auto breaks = profile.breakpoints();
    const auto levels = profile.levels();
    double a = 0.0;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
      const double b = breaks[i];
      const double L = levels[i];
      const double x = std::max(t, a);
      if (x < b) {
        const double Fa = profile.integral_to(a);
        integral += (Fa - L * a) * (1.0 / x - 1.0 / b);
      }
      a = b;
    }
  }
  // beyond support f* = 0 and f**(u) = C/u
  integral += C / std::max(t, B);
  return std::fabs(profile.double_star(t) - integral);
}

OscillationBounds oscillation_bounds(const GridFunction& f, double t, double p) {
  if (!(t > 0.0)) throw parameter_error("oscillation_bounds: t must be positive");
  if (!(p >= 1.0)) throw parameter_error("oscillation_bounds: p must be >= 1");
  const int n = f.dim();
  const auto profile = rearrangement(f);
  OscillationBounds out{};
  out.lhs = profile.double_star(t) - profile.star(t);
  const double root = std::pow(t, 1.0 / static_cast<double>(n));
  double deriv_sum = 0.0, modulus_sum = 0.0;
  for (int k = 0; k < n; ++k) {
    deriv_sum += rearrangement(partial_derivative(f, k)).double_star(t);
    modulus_sum += curve_of(f, k, p).value(root);
  }
  out.rhs_sobolev = static_cast<double>(n) * root * deriv_sum;
  out.rhs_modulus = 2.0 * std::pow(t, -1.0 / p) * modulus_sum;
  return out;
}

} // namespace besovcap
