#include "besovcap/mollify.hpp"

#include <algorithm>
#include <cmath>

namespace besovcap {

namespace {

double center(std::int64_t i, double h) { return (static_cast<double>(i) + 0.5) * h; }

void clamp_unit_interval(GridFunction& f) {
  for (double& v : f.samples()) v = std::clamp(v, 0.0, 1.0);
}

} // namespace

Mollifier standard_mollifier(int dim, double tau, double spacing) {
  if (!(tau > 0.0)) throw parameter_error("standard_mollifier: tau must be positive");
  if (tau < 3.0 * spacing)
    throw resolution_error("standard_mollifier: tau must be at least 3 lattice cells");
  const auto r = static_cast<std::int64_t>(std::ceil(tau / spacing)) + 1;
  std::array<std::int64_t, 3> lo{}, ext{1, 1, 1};
  for (int a = 0; a < dim; ++a) {
    lo[a] = -r;
    ext[a] = 2 * r;
  }
  GridFunction kernel(dim, lo, ext, spacing);
  std::array<std::int64_t, 3> i{};
  double sum = 0.0;
  for (i[0] = 0; i[0] < ext[0]; ++i[0])
    for (i[1] = 0; i[1] < ext[1]; ++i[1])
      for (i[2] = 0; i[2] < ext[2]; ++i[2]) {
        double r2 = 0.0;
        for (int a = 0; a < dim; ++a) {
          const double c = center(i[a] + lo[a], spacing) / tau;
          r2 += c * c;
        }
        if (r2 < 1.0) {
          const double raw = std::exp(1.0 / (r2 - 1.0));
          kernel.cell(i) = raw;
          sum += raw;
        }
      }
  if (sum <= 0.0) throw resolution_error("standard_mollifier: kernel has no interior cells");
  const double cellvol = kernel.cell_volume();
  const double integral = sum * cellvol;
  for (double& v : kernel.samples()) v /= integral;
  double c = 1.0 / integral;
  for (int a = 0; a < dim; ++a) c *= tau;
  Mollifier out{MollifierSpec{dim, tau, c}, tighten_support(kernel)};
  return out;
}

GridFunction mollify(const GridFunction& f, double tau) {
  const Mollifier phi = standard_mollifier(f.dim(), tau, f.spacing());
  return convolve(f, phi.kernel);
}

GridFunction cutoff(int dim, double spacing) {
  const Mollifier phi = standard_mollifier(dim, 1.0, spacing);
  const auto r = static_cast<std::int64_t>(std::ceil(2.0 / spacing)) + 1;
  std::array<std::int64_t, 3> lo{}, ext{1, 1, 1};
  for (int a = 0; a < dim; ++a) {
    lo[a] = -r;
    ext[a] = 2 * r;
  }
  GridFunction ball(dim, lo, ext, spacing);
  std::array<std::int64_t, 3> i{};
  for (i[0] = 0; i[0] < ext[0]; ++i[0])
    for (i[1] = 0; i[1] < ext[1]; ++i[1])
      for (i[2] = 0; i[2] < ext[2]; ++i[2]) {
        double r2 = 0.0;
        for (int a = 0; a < dim; ++a) {
          const double c = center(i[a] + lo[a], spacing);
          r2 += c * c;
        }
        if (r2 < 4.0) ball.cell(i) = 1.0;
      }
  GridFunction eta = convolve(ball, phi.kernel);
  clamp_unit_interval(eta);
  // the support estimate |x| < 3 holds up to rounding-level mass in the
  // outermost cells; pin it exactly
  for (i[0] = 0; i[0] < eta.extent(0); ++i[0])
    for (i[1] = 0; i[1] < eta.extent(1); ++i[1])
      for (i[2] = 0; i[2] < eta.extent(2); ++i[2]) {
        double r2 = 0.0;
        for (int a = 0; a < dim; ++a) {
          const double c = center(i[a] + eta.lo(a), spacing);
          r2 += c * c;
        }
        if (r2 >= 9.0) eta.cell(i) = 0.0;
      }
  return tighten_support(eta);
}

GridFunction truncate(const GridFunction& f, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw parameter_error("truncate: eps must lie in (0,1)");
  GridFunction g = f;
  const double scale = 1.0 / (1.0 - eps);
  for (double& v : g.samples()) v = std::max(v - eps, 0.0) * scale;
  return tighten_support(g);
}

GridFunction admissible_from_set(const DiscreteSet& K, double tau) {
  if (K.empty()) throw parameter_error("admissible_from_set: K must be nonempty");
  const Mollifier phi = standard_mollifier(K.dim(), tau, K.spacing());
  const DiscreteSet K_tau = K.dilated_by(2.0 * tau);
  GridFunction f = convolve(K_tau.indicator(), phi.kernel);
  clamp_unit_interval(f);
  return tighten_support(f);
}

GridFunction example_fa(double a, double spacing, double outer_radius_factor) {
  if (!(a > 0.0)) throw parameter_error("example_fa: a must be positive");
  if (!(outer_radius_factor > 1.0))
    throw parameter_error("example_fa: outer radius factor must exceed 1");
  const double R = outer_radius_factor * a;
  const auto r = static_cast<std::int64_t>(std::ceil(R / spacing));
  GridFunction f(1, {-r, 0, 0}, {2 * r, 1, 1}, spacing);
  for (std::int64_t i = 0; i < 2 * r; ++i) {
    const double x = center(i - r, spacing);
    const double ax = std::fabs(x);
    f.cell({i, 0, 0}) = (ax <= a) ? 1.0 : (a / x) * (a / x);
  }
  return f;
}

GridFunction example_oscillating(int nu, double spacing) {
  if (nu < 1) throw parameter_error("example_oscillating: nu must be >= 1");
  const double width = static_cast<double>(2 * nu + 1);
  const auto cells = static_cast<std::int64_t>(std::llround(width / spacing));
  GridFunction f(1, {0, 0, 0}, {cells, 1, 1}, spacing);
  for (std::int64_t i = 0; i < cells; ++i) {
    const double x = center(i, spacing);
    const auto k = static_cast<std::int64_t>(std::floor(x));
    if (k >= 0 && k <= 2 * nu) f.cell({i, 0, 0}) = (k % 2 == 0) ? 1.0 : -1.0;
  }
  return f;
}

GridFunction example_log(int dim, double spacing) {
  if (dim < 2) throw parameter_error("example_log: requires dim >= 2");
  const double sigma = (static_cast<double>(dim) - 1.0) / (2.0 * static_cast<double>(dim));
  const double cap = -std::log(spacing); // inner cutoff radius = spacing
  const auto r = static_cast<std::int64_t>(std::ceil(1.0 / spacing)) + 1;
  std::array<std::int64_t, 3> lo{}, ext{1, 1, 1};
  for (int a = 0; a < dim; ++a) {
    lo[a] = -r;
    ext[a] = 2 * r;
  }
  GridFunction f(dim, lo, ext, spacing);
  std::array<std::int64_t, 3> i{};
  for (i[0] = 0; i[0] < ext[0]; ++i[0])
    for (i[1] = 0; i[1] < ext[1]; ++i[1])
      for (i[2] = 0; i[2] < ext[2]; ++i[2]) {
        double r2 = 0.0;
        for (int a = 0; a < dim; ++a) {
          const double c = center(i[a] + lo[a], spacing);
          r2 += c * c;
        }
        const double rad = std::sqrt(r2);
        if (rad <= 1.0) f.cell(i) = std::pow(std::min(-std::log(rad), cap), sigma);
      }
  return tighten_support(f);
}

} // namespace besovcap
