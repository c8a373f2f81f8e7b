#pragma once

#include <cmath>
#include <random>
#include <string>

#include "besovcap/grid.hpp"
#include "besovcap/sets.hpp"

namespace testsupport {

using besovcap::GridFunction;

inline GridFunction indicator(const std::string& description, double h) {
  return besovcap::parse_set_description(description, h).indicator();
}

// hat over [0,1] peaking at 1, sampled at cell left edges so the forward
// difference recovers the slope exactly
inline GridFunction hat_unit(double h) {
  const auto n = static_cast<std::int64_t>(std::llround(1.0 / h));
  GridFunction f(1, {0, 0, 0}, {n, 1, 1}, h);
  for (std::int64_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) * h;
    f.cell({i, 0, 0}) = std::max(0.0, 1.0 - std::fabs(2.0 * x - 1.0));
  }
  return f;
}

inline GridFunction random_function(std::mt19937_64& rng, int dim, std::int64_t side, double h) {
  std::array<std::int64_t, 3> ext{side, dim > 1 ? side : 1, dim > 2 ? side : 1};
  GridFunction f(dim, {0, 0, 0}, ext, h);
  for (double& v : f.samples())
    v = -1.0 + 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return f;
}

// brute-force discrete convolution for small inputs
inline GridFunction convolve_oracle(const GridFunction& f, const GridFunction& g) {
  std::array<std::int64_t, 3> lo{}, ext{};
  for (int a = 0; a < 3; ++a) {
    lo[a] = f.lo(a) + g.lo(a);
    ext[a] = (a < f.dim()) ? f.extent(a) + g.extent(a) - 1 : 1;
  }
  GridFunction r(f.dim(), lo, ext, f.spacing());
  std::array<std::int64_t, 3> i{}, j{};
  for (i[0] = 0; i[0] < r.extent(0); ++i[0])
    for (i[1] = 0; i[1] < r.extent(1); ++i[1])
      for (i[2] = 0; i[2] < r.extent(2); ++i[2]) {
        double acc = 0.0;
        for (j[0] = 0; j[0] < f.extent(0); ++j[0])
          for (j[1] = 0; j[1] < f.extent(1); ++j[1])
            for (j[2] = 0; j[2] < f.extent(2); ++j[2]) {
              std::array<std::int64_t, 3> k{i[0] - j[0], i[1] - j[1], i[2] - j[2]};
              bool in = true;
              for (int a = 0; a < 3; ++a)
                if (k[a] < 0 || k[a] >= g.extent(a)) in = false;
              if (in) acc += f.cell(j) * g.cell(k);
            }
        r.cell(i) = acc * f.cell_volume();
      }
  return r;
}

} // namespace testsupport
