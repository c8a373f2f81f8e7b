#pragma once

#include "besovcap/grid.hpp"
#include "besovcap/sets.hpp"

namespace besovcap {

struct MollifierSpec {
  int dim;
  double tau;
  double normalization; ///< the constant c making the kernel integrate to 1
};

struct Mollifier {
  MollifierSpec spec;
  GridFunction kernel;
};

/// The bump c exp(1/(|x/tau|^2 - 1))/tau^n supported in the radius-tau ball,
/// sampled at cell centers and renormalized so the discrete integral is 1.
/// Requires tau >= 3 * spacing.
Mollifier standard_mollifier(int dim, double tau, double spacing);

/// f * phi_tau on f's lattice.
GridFunction mollify(const GridFunction& f, double tau);

/// eta = phi * indicator(B_2): smooth, 1 on the unit ball (up to the lattice
/// boundary layer), 0 outside radius 3.
GridFunction cutoff(int dim, double spacing);

/// max(f - eps, 0)/(1 - eps) for eps in (0,1).
GridFunction truncate(const GridFunction& f, double eps);

/// f_tau = indicator(K dilated by 2 tau) * phi_tau: values in [0,1], equal
/// to 1 where dist(x, K) <= tau - spacing, supported in the 3 tau collar.
GridFunction admissible_from_set(const DiscreteSet& K, double tau);

/// 1 on [-a, a], (a/x)^2 outside, truncated at |x| = outer_radius_factor * a;
/// the L^1 tail dropped per side is a / outer_radius_factor.
GridFunction example_fa(double a, double spacing, double outer_radius_factor = 100.0);

/// sum_{k=0}^{2 nu} (-1)^k on the unit intervals [k, k+1).
GridFunction example_oscillating(int nu, double spacing);

/// |ln |x||^sigma on the unit ball with sigma = (n-1)/(2n), capped at the
/// value attained at radius = spacing; requires dim >= 2.
GridFunction example_log(int dim, double spacing);

} // namespace besovcap
