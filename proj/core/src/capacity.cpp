#include "besovcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "besovcap/mollify.hpp"

namespace besovcap {

double sobolev_objective(const GridFunction& f, double p) {
  double sum = 0.0;
  for (int k = 0; k < f.dim(); ++k) sum += lp_norm(partial_derivative(f, k), p);
  return std::pow(sum, p);
}

double besov_objective(const GridFunction& f, const Exponents& e) {
  return std::pow(besov_seminorm_sum(f, e), e.p);
}

GridFunction family_member(const DiscreteSet& K, double tau, double eps) {
  GridFunction f = admissible_from_set(K, tau);
  if (eps > 0.0) f = truncate(f, eps);
  return f;
}

GridFunction cutoff_member(int dim, double gamma, double spacing) {
  return dilate(cutoff(dim, spacing), gamma);
}

bool admissible_on(const GridFunction& f, const DiscreteSet& K) {
  bool ok = true;
  const double h = K.spacing();
  K.for_each_cell([&](std::array<std::int64_t, 3> g) {
    if (!ok) return;
    std::array<double, 3> c{};
    for (int a = 0; a < K.dim(); ++a) c[a] = (static_cast<double>(g[a]) + 0.5) * h;
    if (f.value_at(std::span<const double>(c.data(), static_cast<std::size_t>(K.dim()))) <
        1.0 - 1e-9)
      ok = false;
  });
  return ok;
}

namespace {

struct Candidate {
  double value = std::numeric_limits<double>::infinity();
  FamilyWitness witness;
};

// tie-break deterministically on (tau, eps, gamma, extra_index)
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.witness.tau != b.witness.tau) return a.witness.tau < b.witness.tau;
  if (a.witness.eps != b.witness.eps) return a.witness.eps < b.witness.eps;
  if (a.witness.gamma != b.witness.gamma) return a.witness.gamma < b.witness.gamma;
  return a.witness.extra_index < b.witness.extra_index;
}

using Objective = std::function<double(const GridFunction&)>;

Candidate minimize_family(const DiscreteSet& K, const AdmissibleFamily& fam,
                          const Objective& objective, const FamilyWitness* warm) {
  if (fam.tau_grid.empty() && fam.gamma_grid.empty() && fam.extras.empty())
    throw parameter_error("capacity: empty admissible family");
  Candidate best;
  int evaluations = 0;
  int iterations = 0;

  if (!fam.tau_grid.empty()) {
    const auto [tmin_it, tmax_it] = std::minmax_element(fam.tau_grid.begin(), fam.tau_grid.end());
    double tau_lo = *tmin_it, tau_hi = *tmax_it;
    if (tau_lo < 3.0 * K.spacing() * (1.0 - 1e-12))
      throw parameter_error("capacity: tau grid below 3 lattice cells");
    std::vector<double> eps_values = fam.eps_grid.empty() ? std::vector<double>{0.0} : fam.eps_grid;
    for (double eps : eps_values) {
      auto consider = [&](double tau) {
        const double v = objective(family_member(K, tau, eps));
        ++evaluations;
        Candidate c;
        c.value = v;
        c.witness.tau = tau;
        c.witness.eps = eps;
        if (better(c, best)) best = c;
        return v;
      };
      for (double tau : fam.tau_grid) consider(tau);
      double a = tau_lo, b = tau_hi;
      if (warm && warm->tau > 0.0) {
        a = std::max(tau_lo, warm->tau / 1.7);
        b = std::min(tau_hi, warm->tau * 1.7);
      }
      if (b > a * (1.0 + 1e-9)) {
        constexpr double kGolden = 0.6180339887498949;
        double x1 = b - kGolden * (b - a);
        double x2 = a + kGolden * (b - a);
        double f1 = consider(x1);
        double f2 = consider(x2);
        for (int it = 0; it < fam.golden_iterations; ++it) {
          ++iterations;
          if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = consider(x1);
          } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = consider(x2);
          }
        }
      }
    }
  }

  if (!fam.gamma_grid.empty()) {
    const double cs = fam.cutoff_spacing > 0.0 ? fam.cutoff_spacing : K.spacing();
    const GridFunction eta = cutoff(K.dim(), cs);
    for (double gamma : fam.gamma_grid) {
      GridFunction member = dilate(eta, gamma);
      if (!admissible_on(member, K)) {
        std::ostringstream msg;
        msg << "capacity: cutoff member gamma=" << gamma << " is not >= 1 on the set";
        throw parameter_error(msg.str());
      }
      Candidate c;
      c.value = objective(member);
      ++evaluations;
      c.witness.gamma = gamma;
      if (better(c, best)) best = c;
    }
  }

  for (std::size_t i = 0; i < fam.extras.size(); ++i) {
    if (!admissible_on(fam.extras[i], K))
      throw parameter_error("capacity: extra candidate " + std::to_string(i) +
                            " is not >= 1 on the set");
    Candidate c;
    c.value = objective(fam.extras[i]);
    ++evaluations;
    c.witness.extra_index = static_cast<int>(i);
    if (better(c, best)) best = c;
  }

  best.witness.evaluations = evaluations;
  best.witness.iterations = iterations;
  return best;
}

std::string upper_derivation(const char* objective_name, const FamilyWitness& w) {
  std::ostringstream os;
  os << "minimum of " << objective_name << " over the admissible family ("
     << w.evaluations << " evaluations, " << w.iterations << " golden-section iterations)";
  return os.str();
}

} // namespace

CapacityEstimate sobolev_capacity_upper(const DiscreteSet& K, double p,
                                        const AdmissibleFamily& fam, const FamilyWitness* warm) {
  if (!(p >= 1.0)) throw parameter_error("sobolev_capacity_upper: p must be >= 1");
  CapacityEstimate est;
  est.kind = EstimateKind::upper;
  est.space = CapacitySpace::sobolev(p);
  if (K.empty()) {
    est.derivation = "empty set: the zero function is admissible in the limit";
    return est;
  }
  Candidate best =
      minimize_family(K, fam, [&](const GridFunction& f) { return sobolev_objective(f, p); },
                      warm);
  est.value = best.value;
  est.witness = best.witness;
  est.derivation = upper_derivation("(sum_k ||D_k f||_p)^p", best.witness);
  return est;
}

CapacityEstimate besov_capacity_upper(const DiscreteSet& K, const Exponents& e,
                                      const AdmissibleFamily& fam, const FamilyWitness* warm) {
  e.validate();
  if (e.n != K.dim()) throw parameter_error("besov_capacity_upper: exponent n != set dimension");
  CapacityEstimate est;
  est.kind = EstimateKind::upper;
  est.space = CapacitySpace::besov(e);
  if (K.empty()) {
    est.derivation = "empty set: the zero function is admissible in the limit";
    return est;
  }
  Candidate best = minimize_family(
      K, fam, [&](const GridFunction& f) { return besov_objective(f, e); }, warm);
  est.value = best.value;
  est.witness = best.witness;
  est.derivation = upper_derivation("||f||_{b^alpha_{p,q}}^p", best.witness);
  return est;
}

CapacityEstimate sobolev_capacity_lower(const DiscreteSet& K, double p) {
  const int n = K.dim();
  if (!(p >= 1.0)) throw parameter_error("sobolev_capacity_lower: p must be >= 1");
  if (!(p < static_cast<double>(n)))
    throw parameter_error("sobolev_capacity_lower: requires p < n");
  const double nd = static_cast<double>(n);
  const double pstar = nd * p / (nd - p);
  const double nprime = nd / (nd - 1.0);
  double ctilde;
  if (p == 1.0) {
    ctilde = 2.0 * nd * nprime;
  } else {
    const double pprime = p / (p - 1.0);
    ctilde = nd * nprime * (1.0 + std::pow(pprime / nprime - 1.0, -1.0 / pprime));
  }
  CapacityEstimate est;
  est.kind = EstimateKind::lower;
  est.space = CapacitySpace::sobolev(p);
  est.value = std::pow(K.measure(), p / pstar) / std::pow(ctilde, p);
  std::ostringstream os;
  os << "non-sharp weak-type bound: any admissible f has |K| <= lambda_f(y), y < 1, and "
        "f*(t) <= ctilde t^(-1/p*) sum_k ||D_k f||_p with ctilde = n n' (1 + (p'/n' - 1)^(-1/p')) = "
     << ctilde << "; hence cap >= |K|^(p/p*) / ctilde^p";
  est.derivation = os.str();
  return est;
}

CapacityEstimate besov_capacity_lower(const DiscreteSet& K, const Exponents& e) {
  e.validate();
  if (e.n != K.dim()) throw parameter_error("besov_capacity_lower: exponent n != set dimension");
  if (!e.has_p_alpha()) throw parameter_error("besov_capacity_lower: requires alpha p < n");
  const double pa = e.p_alpha();
  CapacityEstimate est;
  est.kind = EstimateKind::lower;
  est.space = CapacitySpace::besov(e);
  est.value = std::pow(std::pow(e.alpha * e.q, -1.0 / e.q) * std::pow(K.measure(), 1.0 / pa) /
                           (2.0 * pa),
                       e.p);
  std::ostringstream os;
  os << "non-sharp weak-type bound: |K| <= (2 p_a)^(p_a) ||f||_{b_{p,inf}}^{p_a} with p_a = " << pa
     << ", chained with ||f||_{b_{p,inf}} <= (alpha q)^(1/q) ||f||_{b_{p,q}}; hence cap >= "
        "[(alpha q)^(-1/q) |K|^(1/p_a) / (2 p_a)]^p";
  est.derivation = os.str();
  return est;
}

CapacityEstimate exact_1d_w11(const DiscreteSet& G) {
  if (G.dim() != 1) throw parameter_error("exact_1d_w11: set must be one-dimensional");
  CapacityEstimate est;
  est.kind = EstimateKind::exact;
  est.space = CapacitySpace::sobolev(1.0);
  if (G.empty()) {
    est.derivation = "empty set";
    return est;
  }
  est.value = 2.0;
  est.derivation = "every admissible function rises to 1 and returns to 0, so ||f'||_1 = 2 "
                   "independently of the set";
  return est;
}

namespace {

using CompactEstimator =
    std::function<CapacityEstimate(const DiscreteSet&, const FamilyWitness*)>;

CapacityEstimate open_by_exhaustion(const DiscreteSet& G, const CompactEstimator& estimate,
                                    const FamilyWitness* warm) {
  const double h = G.spacing();
  std::int64_t min_ext = G.extent(0);
  for (int a = 1; a < G.dim(); ++a) min_ext = std::min(min_ext, G.extent(a));
  std::vector<double> radii;
  for (double r = static_cast<double>(min_ext) * h / 8.0; r > h * (1.0 + 1e-9); r /= 2.0)
    radii.push_back(r);
  radii.push_back(h);

  CapacityEstimate last;
  bool have = false;
  FamilyWitness chain;
  if (warm) chain = *warm;
  int steps = 0;
  for (double r : radii) {
    DiscreteSet K = G.eroded_by(r);
    if (K.empty()) continue;
    CapacityEstimate est = estimate(K, have || warm ? &chain : nullptr);
    chain = est.witness;
    ++steps;
    if (have && std::fabs(est.value - last.value) < 0.01 * std::max(est.value, 1e-300)) {
      last = est;
      break;
    }
    last = est;
    have = true;
  }
  if (!have) {
    // set too thin to erode at lattice scale; use its closure
    last = estimate(G, warm ? &chain : nullptr);
    last.derivation += "; open set at lattice scale, evaluated on its closure";
    return last;
  }
  std::ostringstream os;
  os << last.derivation << "; supremum over " << steps << " inner compact approximations";
  last.derivation = os.str();
  return last;
}

} // namespace

CapacityEstimate sobolev_capacity_open(const DiscreteSet& G, double p,
                                       const AdmissibleFamily& fam) {
  if (G.empty()) return sobolev_capacity_upper(G, p, fam);
  return open_by_exhaustion(
      G,
      [&](const DiscreteSet& K, const FamilyWitness* w) {
        return sobolev_capacity_upper(K, p, fam, w);
      },
      nullptr);
}

CapacityEstimate besov_capacity_open(const DiscreteSet& G, const Exponents& e,
                                     const AdmissibleFamily& fam, const FamilyWitness* warm) {
  if (G.empty()) return besov_capacity_upper(G, e, fam);
  return open_by_exhaustion(
      G,
      [&](const DiscreteSet& K, const FamilyWitness* w) {
        return besov_capacity_upper(K, e, fam, w);
      },
      warm);
}

} // namespace besovcap
