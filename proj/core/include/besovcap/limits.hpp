#pragma once

#include <string>
#include <vector>

#include "besovcap/capacity.hpp"

namespace besovcap {

enum class SweepDirection { to_one, to_zero };

struct SweepResult {
  SweepDirection direction = SweepDirection::to_one;
  int n = 1;
  double p = 1.0;
  double q = 1.0;
  std::vector<double> alphas;
  std::vector<double> J_values;
  std::vector<FamilyWitness> witnesses;
  double target = 0.0;
  double extrapolated = 0.0;
  double relative_error = 0.0;
  double model_residual = 0.0;
  std::string model;
};

/// J(alpha) = (1-alpha)^(p/q) cap(G; B^alpha_{p,q}) for an open set G
/// (inner compact exhaustion), against the target q^(-p/q) cap(G; W^1_p).
/// Requires at least 4 alphas, strictly increasing, all in [0.8, 1).
SweepResult sweep_alpha_to_one(const DiscreteSet& G, double p, double q,
                               const std::vector<double>& alphas, const AdmissibleFamily& fam);

/// J(alpha) = alpha^(p/q) cap(K; B^alpha_{p,q}) for a compact K, against the
/// target 2 n^p q^(-p/q) |K|. Requires at least 4 alphas, strictly
/// decreasing, all in (0, 0.2].
SweepResult sweep_alpha_to_zero(const DiscreteSet& K, double p, double q,
                                const std::vector<double>& alphas, const AdmissibleFamily& fam);

/// alpha^(1/q) ||f||_{b^alpha_{p,q}} against q^(-1/q) sum_j omega_j(f;inf)_p.
/// Requires at least 4 alphas, strictly decreasing.
SweepResult seminorm_zero_limit(const GridFunction& f, double p, double q,
                                const std::vector<double>& alphas);

/// The p = n = 2 degenerate sweep: J(alpha) = (1-alpha)^(n/q) times the
/// Besov upper bound for the ball of radius r, built from the capped-log
/// construction (scaled, dilated, mollified) over the eps family. The
/// normalization vanishes as alpha -> 1, so alphas increase toward 1.
/// Feasible eps values are limited below by the lattice: the flat region of
/// the capped log has radius exp(-eps^-4), so eps much below 0.75 is not
/// resolvable at desk scale.
SweepResult sweep_p_equals_n(double r, double q, const std::vector<double>& alphas,
                             const std::vector<double>& eps_grid = {0.9, 0.8, 0.75},
                             double spacing = 0.02);

} // namespace besovcap
