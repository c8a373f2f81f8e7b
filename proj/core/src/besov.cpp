#include "besovcap/besov.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "besovcap/parallel.hpp"

namespace besovcap {

namespace {

// nodes for the body quadrature: every curve knot in [h, W] plus log-spaced
// fill-in, so segments are short on both the lattice and the log scale
std::vector<double> body_nodes(const ModulusCurve& curve, int nodes_per_decade) {
  const double h = curve.knot_spacing();
  const double W = curve.last_knot();
  std::vector<double> nodes(curve.knots().begin() + 1, curve.knots().end());
  const double decades = std::log10(W / h);
  const int extra = static_cast<int>(std::ceil(decades * nodes_per_decade));
  for (int k = 1; k < extra; ++k)
    nodes.push_back(h * std::pow(W / h, static_cast<double>(k) / extra));
  std::sort(nodes.begin(), nodes.end());
  std::vector<double> out;
  out.reserve(nodes.size());
  for (double t : nodes)
    if (out.empty() || t > out.back() * (1.0 + 1e-12)) out.push_back(t);
  return out;
}

} // namespace

BesovEvaluation besov_from_curve(const ModulusCurve& curve, int axis, const Exponents& e,
                                 int nodes_per_decade) {
  e.validate();
  if (nodes_per_decade < 2) throw parameter_error("besov: nodes_per_decade must be >= 2");
  BesovEvaluation out;
  out.axis = axis;
  out.exponents = e;
  if (curve.plateau() == 0.0) return out;
  const double a = e.alpha, q = e.q;
  const double h = curve.knot_spacing();
  const double W = curve.last_knot();
  const double omega_h = curve.value(h);

  out.head_part = std::pow(omega_h, q) * std::pow(h, -a * q) / ((1.0 - a) * q);
  out.tail_part = std::pow(curve.plateau(), q) * std::pow(W, -a * q) / (a * q);

  // body: integrand modeled as a power law between consecutive nodes, which
  // is exact in both asymptotic regimes (omega ~ t and omega ~ const)
  if (W > h) {
    const auto nodes = body_nodes(curve, nodes_per_decade);
    auto integrand = [&](double t) {
      return std::pow(std::pow(t, -a) * curve.value(t), q) / t;
    };
    double sum = 0.0;
    double ta = nodes.front();
    double Ga = integrand(ta);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      const double tb = nodes[i];
      const double Gb = integrand(tb);
      const double L = std::log(tb / ta);
      const double m = std::log(Gb / Ga) / L;
      const double mp1 = m + 1.0;
      if (std::fabs(mp1 * L) > 1e-8)
        sum += Ga * ta * (std::exp(mp1 * L) - 1.0) / mp1;
      else
        sum += Ga * ta * L * (1.0 + 0.5 * mp1 * L);
      ta = tb;
      Ga = Gb;
    }
    out.body_part = sum;
  }
  out.value = std::pow(out.head_part + out.body_part + out.tail_part, 1.0 / q);
  if (!std::isfinite(out.value)) throw numerical_fault("besov seminorm is not finite");
  return out;
}

BesovEvaluation besov_seminorm_axis(const GridFunction& f, int axis, const Exponents& e,
                                    int nodes_per_decade) {
  require_axis(f, axis);
  return besov_from_curve(curve_of(f, axis, e.p), axis, e, nodes_per_decade);
}

double besov_seminorm_sum(const GridFunction& f, const Exponents& e, int nodes_per_decade) {
  std::vector<double> parts(static_cast<std::size_t>(f.dim()), 0.0);
  parallel_for(f.dim(), [&](std::ptrdiff_t axis) {
    parts[static_cast<std::size_t>(axis)] =
        besov_seminorm_axis(f, static_cast<int>(axis), e, nodes_per_decade).value;
  });
  double sum = 0.0;
  for (double v : parts) sum += v;
  return sum;
}

double besov_sup_from_curve(const ModulusCurve& curve, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error("besov_sup_seminorm: alpha must lie in (0,1)");
  if (curve.plateau() == 0.0) return 0.0;
  // on each linear segment t^-alpha omega(t) has no interior maximum, and the
  // two analytic regimes peak at the first and last knot
  const auto knots = curve.knots();
  const auto values = curve.values();
  double best = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i)
    best = std::max(best, std::pow(knots[i], -alpha) * values[i]);
  return best;
}

double besov_sup_seminorm(const GridFunction& f, int axis, double alpha, double p) {
  require_axis(f, axis);
  if (!(p >= 1.0)) throw parameter_error("besov_sup_seminorm: p must be >= 1");
  return besov_sup_from_curve(curve_of(f, axis, p), alpha);
}

BoundSides partition_bound_sides(const GridFunction& f, int axis, const Exponents& e, double T) {
  if (!(T > 0.0)) throw parameter_error("partition_bound_sides: T must be positive");
  BoundSides out;
  out.lhs = besov_seminorm_axis(f, axis, e).value;
  const double D = lp_norm(partial_derivative(f, axis), e.p);
  const double N = lp_norm(f, e.p);
  const double a = e.alpha, q = e.q;
  out.rhs = std::pow(q, -1.0 / q) *
            (std::pow(1.0 - a, -1.0 / q) * std::pow(T, 1.0 - a) * D +
             2.0 * std::pow(a, -1.0 / q) * std::pow(T, -a) * N);
  return out;
}

BoundSides embedding_sides(const GridFunction& f, int axis, const Exponents& e, double theta,
                           EmbeddingRegime regime) {
  e.validate();
  if (!(theta > e.q)) throw parameter_error("embedding_sides: theta must exceed q");
  BoundSides out;
  const bool theta_inf = std::isinf(theta);
  if (theta_inf) {
    out.lhs = besov_sup_seminorm(f, axis, e.alpha, e.p);
  } else {
    Exponents et = e;
    et.q = theta;
    out.lhs = besov_seminorm_axis(f, axis, et).value;
  }
  const double inv_theta = theta_inf ? 0.0 : 1.0 / theta;
  const double expo = 1.0 / e.q - inv_theta;
  double constant;
  if (regime == EmbeddingRegime::small_alpha) {
    constant = std::pow(e.alpha * e.q, expo);
  } else {
    constant = std::pow((1.0 - e.alpha) * e.q, expo) *
               std::pow(2.0 / (1.0 + e.alpha), 1.0 - e.q * inv_theta);
  }
  out.rhs = constant * besov_seminorm_axis(f, axis, e).value;
  return out;
}

GridFunction dilate(const GridFunction& f, double lam) {
  if (!(lam > 0.0)) throw parameter_error("dilate: lambda must be positive");
  double factor;
  if (lam >= 1.0) {
    const double r = std::round(lam);
    if (std::fabs(lam - r) > 1e-9 * lam)
      throw parameter_error("dilate: lambda must be an integer or a reciprocal integer");
    factor = r;
  } else {
    const double r = std::round(1.0 / lam);
    if (std::fabs(1.0 / lam - r) > 1e-9 / lam)
      throw parameter_error("dilate: lambda must be an integer or a reciprocal integer");
    factor = 1.0 / r;
  }
  // f(lambda x) on the lattice rescaled to h/lambda: cell j keeps its index
  GridFunction out(f.dim(), {f.lo(0), f.lo(1), f.lo(2)},
                   {f.extent(0), f.extent(1), f.extent(2)}, f.spacing() / factor);
  std::copy(f.samples().begin(), f.samples().end(), out.samples().begin());
  return out;
}

double scaling_gap(const GridFunction& f, double lam, const Exponents& e) {
  if (f.is_zero()) return 0.0;
  const double base = std::pow(besov_seminorm_sum(f, e), e.p);
  const double dilated = std::pow(besov_seminorm_sum(dilate(f, lam), e), e.p);
  const double predicted =
      std::pow(lam, e.alpha * e.p - static_cast<double>(f.dim())) * base;
  return std::fabs(dilated - predicted) / base;
}

} // namespace besovcap
