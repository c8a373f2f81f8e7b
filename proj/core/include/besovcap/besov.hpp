#pragma once

#include "besovcap/grid.hpp"
#include "besovcap/modulus.hpp"

namespace besovcap {

/// One per-axis seminorm evaluation, split into its three pieces:
/// value^q = head + body + tail, with
///   head  = model omega(t) = omega(h) t/h integrated over (0, h),
///   body  = quadrature of (t^-alpha omega(t))^q dt/t over [h, W],
///   tail  = plateau^q W^(-alpha q)/(alpha q) in closed form.
struct BesovEvaluation {
  int axis = 0;
  Exponents exponents;
  double value = 0.0;
  double head_part = 0.0;
  double body_part = 0.0;
  double tail_part = 0.0;
};

BesovEvaluation besov_from_curve(const ModulusCurve& curve, int axis, const Exponents& e,
                                 int nodes_per_decade = 64);

BesovEvaluation besov_seminorm_axis(const GridFunction& f, int axis, const Exponents& e,
                                    int nodes_per_decade = 64);

/// sum over axes of the per-axis seminorm values.
double besov_seminorm_sum(const GridFunction& f, const Exponents& e, int nodes_per_decade = 64);

/// sup_t t^-alpha omega_axis(f;t)_p; the sup is attained at a lattice knot.
double besov_sup_seminorm(const GridFunction& f, int axis, double alpha, double p);

double besov_sup_from_curve(const ModulusCurve& curve, double alpha);

struct BoundSides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// lhs = per-axis seminorm, rhs = q^(-1/q)[(1-a)^(-1/q) T^(1-a) ||D_j f||_p
/// + 2 a^(-1/q) T^-a ||f||_p].
BoundSides partition_bound_sides(const GridFunction& f, int axis, const Exponents& e, double T);

enum class EmbeddingRegime { small_alpha, large_alpha };

/// lhs = seminorm with secondary index theta (sup-seminorm for theta = inf);
/// rhs = the regime constant times the q-seminorm:
///   small_alpha: (alpha q)^(1/q - 1/theta)
///   large_alpha: ((1-alpha) q)^(1/q - 1/theta) (2/(1+alpha))^(1 - q/theta)
BoundSides embedding_sides(const GridFunction& f, int axis, const Exponents& e, double theta,
                           EmbeddingRegime regime);

/// f(lambda x) realized exactly by rescaling the lattice spacing to
/// spacing/lambda; lambda must be an integer or the reciprocal of one.
GridFunction dilate(const GridFunction& f, double lam);

/// | ||dilate(f)||^p - lambda^(alpha p - n) ||f||^p | / ||f||^p for the
/// p-th power of the summed seminorm.
double scaling_gap(const GridFunction& f, double lam, const Exponents& e);

} // namespace besovcap
