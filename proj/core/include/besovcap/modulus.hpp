#pragma once

#include <span>
#include <vector>

#include "besovcap/grid.hpp"

namespace besovcap {

/// Sampled nondecreasing curve delta -> omega(delta) on uniform knots
/// {0, h, 2h, ..., W}, linearly interpolated between knots and constant
/// (= plateau) beyond the last knot.
class ModulusCurve {
public:
  /// knots must be {0, h, ..., W} with values nondecreasing and values[0] = 0.
  ModulusCurve(std::vector<double> knots, std::vector<double> values);

  static ModulusCurve zero();

  double value(double delta) const;

  /// (1/t) int_0^t of the interpolant; exact piecewise integral.
  double averaged(double t) const;

  std::span<const double> knots() const { return knots_; }
  std::span<const double> values() const { return values_; }
  double plateau() const { return values_.empty() ? 0.0 : values_.back(); }
  double last_knot() const { return knots_.empty() ? 0.0 : knots_.back(); }
  double knot_spacing() const { return knots_.size() > 1 ? knots_[1] - knots_[0] : 0.0; }

private:
  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> cumulative_; // integral of interpolant up to each knot
};

/// omega_axis(f; delta)_p: sup over lattice shifts m h <= delta of
/// || f(. + m h e_axis) - f ||_p.
double partial_modulus(const GridFunction& f, int axis, double delta, double p);

/// Tabulates the partial modulus at every lattice shift up to the support
/// width along the axis; plateau is the value at the support width.
ModulusCurve curve_of(const GridFunction& f, int axis, double p);

double averaged_modulus(const ModulusCurve& w, double t);

/// Plateau value omega_axis(f; +infinity)_p; equals 2^(1/p) ||f||_p for f >= 0.
double modulus_at_infinity(const GridFunction& f, int axis, double p);

struct DerivativeViaModulus {
  double reported; ///< sup of omega(m h)/(m h) over the smallest five shifts
  double full_sup; ///< sup over all lattice shifts
};

/// || D_axis f ||_p recovered as sup_delta omega(f; delta)_p / delta.
DerivativeViaModulus derivative_norm_via_modulus(const GridFunction& f, int axis, double p);

} // namespace besovcap
