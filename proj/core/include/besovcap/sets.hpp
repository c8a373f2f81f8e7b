#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "besovcap/grid.hpp"

namespace besovcap {

/// Finite union of lattice cells on the global lattice with spacing h.
/// Cell i occupies prod_a [ i_a h, (i_a + 1) h ); geometry (distances,
/// dilation, erosion) is measured between cell centers.
class DiscreteSet {
public:
  DiscreteSet(int dim, double spacing);
  DiscreteSet(int dim, std::array<std::int64_t, 3> lo, std::array<std::int64_t, 3> extents,
              double spacing);

  int dim() const { return dim_; }
  double spacing() const { return spacing_; }
  std::int64_t lo(int axis) const { return lo_[axis]; }
  std::int64_t extent(int axis) const { return ext_[axis]; }
  std::int64_t cell_count() const { return count_; }
  bool empty() const { return count_ == 0; }

  /// |E| = #cells * h^n.
  double measure() const;

  bool contains(std::array<std::int64_t, 3> global) const;
  void insert(std::array<std::int64_t, 3> global);

  /// Drops empty margins of the bounding box.
  void tighten();

  GridFunction indicator() const;

  /// Cells whose center lies within `radius` of some cell center of *this.
  DiscreteSet dilated_by(double radius) const;

  /// Cells whose center is farther than `radius` from every complement
  /// cell center.
  DiscreteSet eroded_by(double radius) const;

  DiscreteSet unioned(const DiscreteSet& other) const;
  bool subset_of(const DiscreteSet& other) const;

  template <class F>
  void for_each_cell(F&& body) const {
    std::array<std::int64_t, 3> i{};
    for (i[0] = 0; i[0] < ext_[0]; ++i[0])
      for (i[1] = 0; i[1] < ext_[1]; ++i[1])
        for (i[2] = 0; i[2] < ext_[2]; ++i[2])
          if (mask_[flat(i)])
            body(std::array<std::int64_t, 3>{i[0] + lo_[0], i[1] + lo_[1], i[2] + lo_[2]});
  }

private:
  std::int64_t flat(std::array<std::int64_t, 3> local) const {
    return (local[0] * ext_[1] + local[1]) * ext_[2] + local[2];
  }
  void normalize_axes();

  int dim_;
  double spacing_;
  std::array<std::int64_t, 3> lo_{0, 0, 0};
  std::array<std::int64_t, 3> ext_{1, 1, 1};
  std::vector<std::uint8_t> mask_;
  std::int64_t count_ = 0;
};

double measure(const DiscreteSet& E);

/// mes_{n-1} of the orthogonal projection along axis; defined for n >= 2
/// only (the n = 1 counting-measure case is rejected).
double projection_measure(const DiscreteSet& E, int axis);

/// |{ x in E : x + shift_cells h e_axis in E }|.
double overlap(const DiscreteSet& E, int axis, std::int64_t shift_cells);

/// Smallest lattice shift h in (0, 2 mu^2 n / (lam eta)] with
/// sum_k overlap(E, k, h) < eta. Preconditions: |E| <= mu and every
/// projection measure >= lam. The averaging bound guarantees the scan
/// succeeds; an exhausted scan is reported as a fault.
double translation_search(const DiscreteSet& E, double mu, double lam, double eta);

/// Parses a set description: one shape per line, unioned.
///   box x0 x1 [y0 y1 [z0 z1]]
///   ball cx cy r
/// '#' starts a comment. Dimension is inferred and must agree across lines.
DiscreteSet parse_set_description(const std::string& text, double spacing);

} // namespace besovcap
