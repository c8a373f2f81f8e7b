#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "besovcap/errors.hpp"

namespace besovcap {

/// Exponent bundle (n, p, q, alpha) with the two derived critical exponents.
struct Exponents {
  int n = 1;
  double p = 1.0;
  double q = 1.0;
  double alpha = 0.5;

  /// Throws parameter_error unless n in {1,2,3}, p >= 1, q >= 1, 0 < alpha < 1.
  void validate() const;

  bool has_p_star() const { return p < static_cast<double>(n); }
  bool has_p_alpha() const { return alpha * p < static_cast<double>(n); }

  /// np/(n-p); defined only for p < n.
  double p_star() const;
  /// np/(n-alpha p); defined only for alpha p < n.
  double p_alpha() const;
};

/// Real-valued samples on a uniform box lattice in R^n (n <= 3), one value
/// per cell, implicitly zero outside the box.
///
/// The lattice is anchored at the origin: cell with multi-index i covers the
/// half-open box prod_a [ (lo_a + i_a) h, (lo_a + i_a + 1) h ). Anchoring all
/// functions to the same global lattice makes translation an exact isometry
/// and lets functions with equal spacing be combined without interpolation.
/// Samples are stored row-major with the last axis fastest.
class GridFunction {
public:
  GridFunction(int dim, std::array<std::int64_t, 3> lo, std::array<std::int64_t, 3> extents,
               double spacing);

  int dim() const { return dim_; }
  double spacing() const { return spacing_; }
  std::int64_t lo(int axis) const { return lo_[axis]; }
  std::int64_t extent(int axis) const { return ext_[axis]; }
  double origin(int axis) const { return static_cast<double>(lo_[axis]) * spacing_; }
  std::int64_t size() const { return static_cast<std::int64_t>(samples_.size()); }

  std::span<const double> samples() const { return samples_; }
  std::span<double> samples() { return samples_; }

  std::int64_t stride(int axis) const { return stride_[axis]; }
  std::int64_t flat(std::array<std::int64_t, 3> idx) const {
    return idx[0] * stride_[0] + idx[1] * stride_[1] + idx[2] * stride_[2];
  }
  double cell(std::array<std::int64_t, 3> idx) const { return samples_[flat(idx)]; }
  double& cell(std::array<std::int64_t, 3> idx) { return samples_[flat(idx)]; }

  /// Cell volume h^n.
  double cell_volume() const;

  /// Value of the piecewise-constant extension at a physical point
  /// (half-open cell convention; zero outside the box).
  double value_at(std::span<const double> point) const;

  bool is_zero() const;

  /// First and last nonzero slab along axis, as indices relative to lo(axis).
  /// Returns {0, -1} when the function vanishes identically.
  std::pair<std::int64_t, std::int64_t> support_range(int axis) const;

  /// Throws numerical_fault if any sample is not finite.
  void check_finite() const;

  /// Shifts the box by the given cell counts without touching samples.
  void shift_lo(std::array<std::int64_t, 3> delta);

private:
  int dim_;
  std::array<std::int64_t, 3> lo_;
  std::array<std::int64_t, 3> ext_;
  std::array<std::int64_t, 3> stride_;
  double spacing_;
  std::vector<double> samples_;
};

/// (sum_cells |f|^p h^n)^(1/p).  Requires p >= 1.
double lp_norm(const GridFunction& f, double p);

/// f(. + cells*h*e_axis): the box moves, samples are untouched, so the result
/// is an exact isometry of f.
GridFunction translate(const GridFunction& f, int axis, std::int64_t cells);

/// || f(. + m h e_axis) - f ||_p for m = shift_cells >= 0.
double difference_norm(const GridFunction& f, int axis, std::int64_t shift_cells, double p);

/// Forward difference quotient (f(. + h e_axis) - f)/h on the box grown by
/// one cell; exact for functions piecewise linear along the axis at lattice
/// scale.
GridFunction partial_derivative(const GridFunction& f, int axis);

/// Discrete convolution h^n * sum_j f[j] g[i-j]; requires equal dim and
/// spacing. Positions carry the usual half-cell ambiguity of cell-constant
/// sampling.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

/// a - b on the union box (equal dim and spacing required).
GridFunction subtract(const GridFunction& a, const GridFunction& b);

/// Copy with the box shrunk to the support (one zero cell if f == 0).
GridFunction tighten_support(const GridFunction& f);

void require_axis(const GridFunction& f, int axis);

} // namespace besovcap
