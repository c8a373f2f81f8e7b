#pragma once

#include <string>
#include <vector>

#include "besovcap/besov.hpp"
#include "besovcap/grid.hpp"
#include "besovcap/sets.hpp"

namespace besovcap {

enum class EstimateKind { upper, lower, exact };

struct CapacitySpace {
  enum class Type { sobolev, besov };
  Type type = Type::sobolev;
  double p = 1.0;
  double q = 0.0;
  double alpha = 0.0;

  static CapacitySpace sobolev(double p) { return {Type::sobolev, p, 0.0, 0.0}; }
  static CapacitySpace besov(const Exponents& e) { return {Type::besov, e.p, e.q, e.alpha}; }
};

/// Parameters of the admissible function that realized an upper bound.
/// tau/eps/gamma are zero when the corresponding dial was not used;
/// extra_index >= 0 marks an explicitly supplied candidate.
struct FamilyWitness {
  double tau = 0.0;
  double eps = 0.0;
  double gamma = 0.0;
  int extra_index = -1;
  int iterations = 0;
  int evaluations = 0;
};

struct CapacityEstimate {
  double value = 0.0;
  EstimateKind kind = EstimateKind::upper;
  CapacitySpace space;
  FamilyWitness witness;
  std::string derivation;
};

/// Search grids for the admissible family attached to a base set at call
/// time. tau is refined by golden section inside [min, max] of tau_grid,
/// nested in the coarse grids over eps (truncation levels) and gamma
/// (cutoff dilation scales, integer or reciprocal-integer). extras are
/// explicit candidates checked for admissibility (>= 1 on the base set).
struct AdmissibleFamily {
  std::vector<double> tau_grid;
  std::vector<double> eps_grid;
  std::vector<double> gamma_grid;
  std::vector<GridFunction> extras;
  int golden_iterations = 14;
  double cutoff_spacing = 0.0; ///< lattice for the cutoff template (0: base spacing)
};

/// (sum_k ||D_k f||_p)^p.
double sobolev_objective(const GridFunction& f, double p);

/// (sum_k ||f||_{b;k})^p.
double besov_objective(const GridFunction& f, const Exponents& e);

/// truncate(admissible_from_set(K, tau), eps); eps = 0 skips truncation.
GridFunction family_member(const DiscreteSet& K, double tau, double eps);

/// eta(gamma x) via exact lattice dilation of the cutoff template.
GridFunction cutoff_member(int dim, double gamma, double spacing);

/// f >= 1 (within 1e-9) at the centers of every cell of K.
bool admissible_on(const GridFunction& f, const DiscreteSet& K);

CapacityEstimate sobolev_capacity_upper(const DiscreteSet& K, double p,
                                        const AdmissibleFamily& fam,
                                        const FamilyWitness* warm = nullptr);
CapacityEstimate besov_capacity_upper(const DiscreteSet& K, const Exponents& e,
                                      const AdmissibleFamily& fam,
                                      const FamilyWitness* warm = nullptr);

/// Weak-type lower bound |K|^(p/p*) / ctilde^p from the layer-cake estimate;
/// requires 1 <= p < n. The instantiated constant is recorded in the
/// derivation and is not sharp.
CapacityEstimate sobolev_capacity_lower(const DiscreteSet& K, double p);

/// Weak-type lower bound [(alpha q)^(-1/q) |K|^(1/p_alpha) / (2 p_alpha)]^p;
/// requires alpha p < n.
CapacityEstimate besov_capacity_lower(const DiscreteSet& K, const Exponents& e);

/// In one dimension every nonempty bounded open set has W^1_1-capacity 2.
CapacityEstimate exact_1d_w11(const DiscreteSet& G);

/// Capacity of an open set as the supremum over an inner exhaustion by
/// eroded compacta; stops when two successive approximants agree within 1%.
CapacityEstimate sobolev_capacity_open(const DiscreteSet& G, double p,
                                       const AdmissibleFamily& fam);
CapacityEstimate besov_capacity_open(const DiscreteSet& G, const Exponents& e,
                                     const AdmissibleFamily& fam,
                                     const FamilyWitness* warm = nullptr);

} // namespace besovcap
