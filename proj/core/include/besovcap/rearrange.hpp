#pragma once

#include <span>
#include <vector>

#include "besovcap/grid.hpp"

namespace besovcap {

/// Nonincreasing rearrangement of a grid function as a step function on
/// (0, infinity): level levels[i] on (breakpoints[i-1], breakpoints[i]],
/// zero beyond the last breakpoint. Left-continuous by the step convention.
class RearrangementProfile {
public:
  RearrangementProfile(std::vector<double> breakpoints, std::vector<double> levels);

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> levels() const { return levels_; }
  bool empty() const { return breakpoints_.empty(); }

  /// f*(t) for t > 0 (left continuous).
  double star(double t) const;

  /// int_0^t f*(u) du.
  double integral_to(double t) const;

  /// f**(t) = (1/t) int_0^t f*.
  double double_star(double t) const;

  double total_integral() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }
  double support_measure() const { return breakpoints_.empty() ? 0.0 : breakpoints_.back(); }

private:
  std::vector<double> breakpoints_; // increasing measures
  std::vector<double> levels_;      // strictly decreasing positive values
  std::vector<double> cumulative_;  // integral up to each breakpoint
};

/// lambda_f(y) = |{ |f| > y }| for y > 0.
double distribution(const GridFunction& f, double y);

/// Sorts cell values (stably, descending) into the step profile.
RearrangementProfile rearrangement(const GridFunction& f);

double double_star(const RearrangementProfile& profile, double t);

/// | f**(t) - int_t^inf (f**(u) - f*(u))/u du |, the tail integral evaluated
/// in closed form on each step plus the analytic C/u tail beyond support.
double deriv_identity_gap(const RearrangementProfile& profile, double t);

struct OscillationBounds {
  double lhs;          ///< f**(t) - f*(t)
  double rhs_sobolev;  ///< n t^(1/n) sum_k (D_k f)**(t)
  double rhs_modulus;  ///< 2 t^(-1/p) sum_k omega_k(f; t^(1/n))_p
};

OscillationBounds oscillation_bounds(const GridFunction& f, double t, double p);

} // namespace besovcap
