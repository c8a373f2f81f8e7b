#include "besovcap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "besovcap/besov.hpp"
#include "besovcap/capacity.hpp"
#include "besovcap/io.hpp"
#include "besovcap/modulus.hpp"
#include "besovcap/mollify.hpp"
#include "besovcap/rearrange.hpp"

namespace besovcap {

namespace {

double urand(std::mt19937_64& rng, double a, double b) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return a + (b - a) * u;
}

std::int64_t irand(std::mt19937_64& rng, std::int64_t a, std::int64_t b) {
  return a + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(b - a + 1));
}

std::string fmt_pair(double lhs, double rhs) {
  return "lhs=" + format_double(lhs) + " rhs=" + format_double(rhs);
}

class Check {
public:
  explicit Check(std::string tag) {
    result.tag = std::move(tag);
    result.min_slack = std::numeric_limits<double>::infinity();
  }

  void le(double lhs, double rhs, double tol, const std::string& context) {
    ++result.checks;
    const double slack = (rhs - lhs) / std::max(1.0, std::fabs(rhs));
    result.min_slack = std::min(result.min_slack, slack);
    if (!(lhs <= rhs + tol)) fail(context + ": " + fmt_pair(lhs, rhs));
  }

  void close(double got, double want, double rel_tol, const std::string& context) {
    ++result.checks;
    const double err = std::fabs(got - want) / std::max(1.0, std::fabs(want));
    result.min_slack = std::min(result.min_slack, rel_tol - err);
    if (err > rel_tol) fail(context + ": got=" + format_double(got) + " want=" + format_double(want));
  }

  void is_true(bool ok, const std::string& context) {
    ++result.checks;
    if (!ok) fail(context);
  }

  CheckResult result;

private:
  void fail(const std::string& what) {
    ++result.violations;
    if (result.first_violation.empty()) result.first_violation = what;
  }
};

GridFunction indicator_from(const std::string& description, double h) {
  return parse_set_description(description, h).indicator();
}

std::string num(double v) { return format_double(v); }

GridFunction hat_1d(double center, double halfwidth, double h) {
  const auto lo = static_cast<std::int64_t>(std::floor((center - halfwidth) / h)) - 1;
  const auto hi = static_cast<std::int64_t>(std::ceil((center + halfwidth) / h)) + 1;
  GridFunction f(1, {lo, 0, 0}, {hi - lo, 1, 1}, h);
  for (std::int64_t i = 0; i < hi - lo; ++i) {
    const double x = (static_cast<double>(i + lo) + 0.5) * h;
    f.cell({i, 0, 0}) = std::max(0.0, 1.0 - std::fabs(x - center) / halfwidth);
  }
  return tighten_support(f);
}

GridFunction random_step(std::mt19937_64& rng, int dim) {
  const double h = dim == 1 ? 0.02 : 0.05;
  const std::int64_t side = dim == 1 ? irand(rng, 16, 64) : irand(rng, 8, 24);
  std::array<std::int64_t, 3> lo{irand(rng, -10, 10), dim > 1 ? irand(rng, -10, 10) : 0, 0};
  std::array<std::int64_t, 3> ext{side, dim > 1 ? side : 1, 1};
  GridFunction f(dim, lo, ext, h);
  for (double& v : f.samples()) v = urand(rng, -1.0, 1.0);
  return f;
}

} // namespace

std::vector<GridFunction> make_function_corpus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GridFunction> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int kind = i % 8;
    switch (kind) {
      case 0: {
        const double h = (i % 3 == 0) ? 0.02 : (i % 3 == 1 ? 0.01 : 1.0 / 64.0);
        const double a = urand(rng, -1.0, 1.0);
        const double w = urand(rng, 0.2, 1.5);
        out.push_back(indicator_from("box " + num(a) + ' ' + num(a + w), h));
        break;
      }
      case 1: {
        const double h = (i % 2 == 0) ? 0.05 : 1.0 / 32.0;
        const double ax = urand(rng, -1.0, 0.5), ay = urand(rng, -1.0, 0.5);
        const double wx = urand(rng, 0.3, 1.0), wy = urand(rng, 0.3, 1.0);
        out.push_back(indicator_from(
            "box " + num(ax) + ' ' + num(ax + wx) + ' ' + num(ay) + ' ' + num(ay + wy), h));
        break;
      }
      case 2: {
        const double h = 0.01;
        const double a = urand(rng, -0.5, 0.5);
        const double w = urand(rng, 0.3, 1.0);
        const double tau = urand(rng, 3.0 * h, 10.0 * h);
        out.push_back(mollify(indicator_from("box " + num(a) + ' ' + num(a + w), h), tau));
        break;
      }
      case 3: {
        const double h = 1.0 / 32.0;
        const double ax = urand(rng, -0.5, 0.0), ay = urand(rng, -0.5, 0.0);
        const double wx = urand(rng, 0.3, 0.8), wy = urand(rng, 0.3, 0.8);
        const double tau = urand(rng, 3.0 * h, 6.0 * h);
        out.push_back(mollify(
            indicator_from("box " + num(ax) + ' ' + num(ax + wx) + ' ' + num(ay) + ' ' + num(ay + wy), h),
            tau));
        break;
      }
      case 4:
        out.push_back(hat_1d(urand(rng, -0.5, 0.5), urand(rng, 0.2, 0.8), 0.01));
        break;
      case 5:
        out.push_back(example_oscillating(1 + (i / 8) % 4, 1.0 / 64.0));
        break;
      case 6:
        out.push_back(random_step(rng, (i % 16 < 8) ? 1 : 2));
        break;
      default: {
        const double h = 0.25;
        const std::int64_t s = irand(rng, 2, 5);
        std::array<std::int64_t, 3> lo{irand(rng, -3, 1), irand(rng, -3, 1), irand(rng, -3, 1)};
        GridFunction f(3, lo, {s, s, s}, h);
        for (double& v : f.samples()) v = 1.0;
        out.push_back(std::move(f));
        break;
      }
    }
  }
  return out;
}

std::vector<DiscreteSet> make_set_corpus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DiscreteSet> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int kind = i % 4;
    std::ostringstream d;
    double h = 0.05;
    switch (kind) {
      case 0: {
        const double ax = urand(rng, -1.0, 0.5), ay = urand(rng, -1.0, 0.5);
        d << "box " << num(ax) << ' ' << num(ax + urand(rng, 0.3, 1.2)) << ' ' << num(ay) << ' '
          << num(ay + urand(rng, 0.3, 1.2));
        break;
      }
      case 1: {
        const int boxes = 2 + static_cast<int>(i / 4) % 2;
        for (int b = 0; b < boxes; ++b) {
          const double ax = urand(rng, -1.0, 0.6), ay = urand(rng, -1.0, 0.6);
          d << "box " << num(ax) << ' ' << num(ax + urand(rng, 0.25, 0.8)) << ' ' << num(ay) << ' '
            << num(ay + urand(rng, 0.25, 0.8)) << '\n';
        }
        break;
      }
      case 2: {
        const double ax = urand(rng, -1.0, 0.0);
        d << "box " << num(ax) << ' ' << num(ax + urand(rng, 0.3, 0.9)) << ' ' << num(-0.4) << ' '
          << num(0.4) << '\n';
        d << "ball " << num(urand(rng, -0.3, 0.6)) << ' ' << num(urand(rng, -0.3, 0.6)) << ' '
          << num(urand(rng, 0.2, 0.5));
        break;
      }
      default: {
        h = 0.2;
        const double ax = urand(rng, -1.0, 0.0), ay = urand(rng, -1.0, 0.0), az = urand(rng, -1.0, 0.0);
        d << "box " << num(ax) << ' ' << num(ax + urand(rng, 0.5, 1.2)) << ' ' << num(ay) << ' '
          << num(ay + urand(rng, 0.5, 1.2)) << ' ' << num(az) << ' ' << num(az + urand(rng, 0.5, 1.2));
        break;
      }
    }
    out.push_back(parse_set_description(d.str(), h));
  }
  return out;
}

namespace {

struct FunctionChecks {
  Check sandwich{"Lemma 2.1 sandwich"};
  Check monotone{"Lemma 2.1 monotonicity"};
  Check first{"(First)"};
  Check posit{"(posit)"};
  Check charact{"(charact)"};
  Check ocenka{"(ocenka)"};
  Check lemma22{"Lemma 2.2"};
  Check lemma23{"Lemma 2.3"};
  Check lemma24{"Lemma 2.4"};
  Check lemma25{"Lemma 2.5"};
  Check distrib{"(distrib)"};
  Check deriv{"(deriv)"};
  Check estim1{"(estim1)"};
  Check estim2{"(estim2)"};
  Check lemma28{"Lemma 2.8"};
  Check below{"(below)"};
  Check subadd{"modulus subadditivity"};
  Check isometry{"rearrangement equimeasurability"};
  Check young{"Young contraction (main5)/(main23)"};
  Check main17{"(main17) truncation"};
  Check open1{"(open1) dilation identity"};
  Check refine{"quadrature refinement"};
  Check shift{"translation invariance"};
  Check moll{"(moll3) mollifier mass"};
  Check cut{"(cutoff) properties"};
  Check second14{"(second14) admissible moduli"};
  Check gamma{"(gamma) cutoff product"};
  Check zamena{"(zamena) dilation scaling"};
};

void check_one_function(FunctionChecks& c, const GridFunction& f, int index) {
  const double pvals[3] = {1.0, 2.0, 1.5};
  const double p = pvals[index % 3];
  const int n = f.dim();
  const double h = f.spacing();
  const double norm = lp_norm(f, p);
  if (norm == 0.0) return;
  const std::string ctx = "function " + std::to_string(index) + " (p=" + num(p) + ")";

  bool nonneg = true, indicator = true;
  std::int64_t support_cells = 0;
  for (double v : f.samples()) {
    if (v < 0.0) nonneg = false;
    if (v != 0.0 && v != 1.0) indicator = false;
    if (v != 0.0) ++support_cells;
  }
  const double supp_measure = static_cast<double>(support_cells) * f.cell_volume();

  // exact isometry under lattice translation
  c.shift.is_true(lp_norm(translate(f, 0, 7), p) == norm, ctx + ": translate changed the norm");

  std::vector<ModulusCurve> curves;
  curves.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) curves.push_back(curve_of(f, k, p));

  for (int k = 0; k < n; ++k) {
    const auto& curve = curves[static_cast<std::size_t>(k)];
    const auto knots = curve.knots();
    const auto vals = curve.values();
    const std::size_t M = knots.size() - 1;
    if (M == 0) continue;
    const double plateau = curve.plateau();
    const double tol_exact = 1e-12 * std::max(1.0, plateau);
    const std::string actx = ctx + " axis " + std::to_string(k);

    const std::size_t stride = std::max<std::size_t>(1, M / 24);
    double prev_avg = 0.0, prev_ratio = std::numeric_limits<double>::infinity(), prev_t = 0.0;
    for (std::size_t m = 1; m <= M; m += stride) {
      const double t = knots[m];
      const double avg = curve.averaged(t);
      c.sandwich.le(avg, vals[m] + tol_exact, 0.0, actx + " avg<=omega");
      c.sandwich.le(vals[m], 2.0 * avg + tol_exact, 0.0, actx + " omega<=2avg");
      if (prev_t > 0.0) {
        c.monotone.le(prev_avg, avg + tol_exact, 0.0, actx + " avg increasing");
        c.monotone.le(avg / t, prev_ratio + tol_exact, 0.0, actx + " avg/t decreasing");
      }
      prev_avg = avg;
      prev_ratio = avg / t;
      prev_t = t;
    }

    c.first.le(plateau, 2.0 * norm, 1e-12 * norm, actx + " (First)");
    if (nonneg)
      c.posit.le(plateau, std::pow(2.0, 1.0 / p) * norm, 1e-12 * norm, actx + " (posit)");
    if (indicator)
      c.charact.le(plateau, std::pow(2.0 * supp_measure, 1.0 / p), 1e-12, actx + " (charact)");

    const GridFunction g = partial_derivative(f, k);
    const double gn = lp_norm(g, p);
    for (std::size_t m = 1; m <= M; m += stride)
      c.ocenka.le(vals[m], gn * knots[m], 1e-12 * std::max(1.0, gn * knots[m]),
                  actx + " (ocenka)");
    if (gn > 0.0) {
      const auto d = derivative_norm_via_modulus(f, k, p);
      c.lemma22.close(d.reported, gn, 0.02, actx + " Lemma 2.2");
    }

    // subadditivity at sampled knot pairs
    for (std::size_t frac = 1; frac <= 4; ++frac) {
      const std::size_t i = std::max<std::size_t>(1, M * frac / 9);
      const std::size_t j = std::max<std::size_t>(1, M / 3);
      if (i + j <= M)
        c.subadd.le(vals[i + j], vals[i] + vals[j] + tol_exact, 0.0, actx + " subadditive");
    }
  }

  // Lemma 2.3 from the axis-0 curve
  {
    const GridFunction g0 = partial_derivative(f, 0);
    const double D = lp_norm(g0, p);
    const double N = norm;
    for (double q : {1.0, 2.0}) {
      Exponents e{n, p, q, 0.5};
      const double lhs = besov_from_curve(curves[0], 0, e).value;
      for (double T : {0.5, 1.0, 2.0}) {
        const double rhs = std::pow(q, -1.0 / q) *
                           (std::pow(0.5, -1.0 / q) * std::pow(T, 0.5) * D +
                            2.0 * std::pow(0.5, -1.0 / q) * std::pow(T, -0.5) * N);
        c.lemma23.le(lhs, rhs, 1e-9 * std::max(1.0, rhs), ctx + " Lemma 2.3 T=" + num(T));
      }
    }
  }

  // Lemmas 2.4 and 2.5 across the (alpha, q, theta) sweep, axis 0
  for (double alpha : {0.1, 0.5, 0.9}) {
    for (double q : {1.0, 2.0}) {
      Exponents eq{n, p, q, alpha};
      const double base = besov_from_curve(curves[0], 0, eq).value;
      const double inf = std::numeric_limits<double>::infinity();
      for (double theta : {2.0, 4.0, inf}) {
        if (!(theta > q)) continue;
        double lhs;
        if (std::isinf(theta)) {
          lhs = besov_sup_from_curve(curves[0], alpha);
        } else {
          Exponents et{n, p, theta, alpha};
          lhs = besov_from_curve(curves[0], 0, et).value;
        }
        const double inv_theta = std::isinf(theta) ? 0.0 : 1.0 / theta;
        const double expo = 1.0 / q - inv_theta;
        const double rhs_small = std::pow(alpha * q, expo) * base;
        const double rhs_large = std::pow((1.0 - alpha) * q, expo) *
                                 std::pow(2.0 / (1.0 + alpha), 1.0 - q * inv_theta) * base;
        const std::string combo =
            " a=" + num(alpha) + " q=" + num(q) + " th=" + (std::isinf(theta) ? "inf" : num(theta));
        c.lemma24.le(lhs, rhs_small, 1e-9 * std::max(1.0, rhs_small), ctx + " Lemma 2.4" + combo);
        c.lemma25.le(lhs, rhs_large, 1e-9 * std::max(1.0, rhs_large), ctx + " Lemma 2.5" + combo);
      }
    }
  }

  // rearrangement block
  {
    const auto profile = rearrangement(f);
    double sum = 0.0, prev = 0.0;
    const auto breaks = profile.breakpoints();
    const auto levels = profile.levels();
    for (std::size_t i = 0; i < breaks.size(); ++i) {
      sum += (breaks[i] - prev) * std::pow(levels[i], p);
      prev = breaks[i];
    }
    const double npow = std::pow(norm, p);
    c.isometry.close(sum, npow, 1e-12, ctx + " equimeasurability");

    double maxabs = 0.0;
    for (double v : f.samples()) maxabs = std::max(maxabs, std::fabs(v));
    for (int j = 0; j < 8; ++j) {
      const double y = maxabs * (static_cast<double>(j) + 0.5) / 8.5;
      if (!(y > 0.0)) continue;
      const double lam = distribution(f, y);
      if (lam > 0.0)
        c.distrib.le(y, profile.star(lam) + 1e-12 * std::max(1.0, maxabs), 0.0,
                     ctx + " (distrib) y=" + num(y));
    }

    const double B = profile.support_measure();
    for (double frac : {0.3, 0.7, 1.7})
      c.deriv.le(deriv_identity_gap(profile, frac * B), 1e-8, 0.0, ctx + " (deriv)");

    // oscillation estimates with cached profiles and curves
    std::vector<RearrangementProfile> dprofiles;
    for (int k = 0; k < n; ++k) dprofiles.push_back(rearrangement(partial_derivative(f, k)));
    for (double frac : {0.25, 0.6, 1.2, 2.5}) {
      const double t = frac * supp_measure;
      const double lhs = profile.double_star(t) - profile.star(t);
      const double root = std::pow(t, 1.0 / n);
      double dsum = 0.0, msum = 0.0;
      for (int k = 0; k < n; ++k) {
        dsum += dprofiles[static_cast<std::size_t>(k)].double_star(t);
        msum += curves[static_cast<std::size_t>(k)].value(root);
      }
      const double tol = 1e-9 * std::max(1.0, lhs);
      c.estim1.le(lhs, static_cast<double>(n) * root * dsum, tol, ctx + " (estim1) t=" + num(t));
      c.estim2.le(lhs, 2.0 * std::pow(t, -1.0 / p) * msum, tol, ctx + " (estim2) t=" + num(t));
    }
  }

  // one-dimensional lower oscillation bound, p = 1
  if (n == 1) {
    const auto M = static_cast<std::size_t>(f.extent(0));
    for (std::size_t m : {std::size_t{1}, M / 3 + 1, M}) {
      double mass = 0.0; // of the cells covering [0, m h)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
        const std::int64_t r = i - f.lo(0);
        if (r >= 0 && r < f.extent(0)) mass += std::fabs(f.cell({r, 0, 0})) * h;
      }
      const double D1 = difference_norm(f, 0, static_cast<std::int64_t>(m), 1.0);
      c.below.le(2.0 * mass, D1, 1e-12 * std::max(1.0, D1),
                 ctx + " (below) m=" + std::to_string(m));
    }
  }

  // Young contraction under mollification
  if (index % 5 == 0) {
    const GridFunction fm = mollify(f, 4.0 * h);
    c.young.le(lp_norm(fm, p), norm, 1e-12 * std::max(1.0, norm), ctx + " Young norm");
    for (std::int64_t m : {1, 4})
      c.young.le(difference_norm(fm, 0, m, p), difference_norm(f, 0, m, p),
                 1e-12 * std::max(1.0, norm), ctx + " Young modulus m=" + std::to_string(m));
  }

  // truncation contracts moduli
  if (index % 5 == 1 && nonneg) {
    double maxv = 0.0;
    for (double v : f.samples()) maxv = std::max(maxv, v);
    if (maxv <= 1.0 + 1e-12) {
      const GridFunction ft = truncate(f, 0.25);
      const std::int64_t M = std::min<std::int64_t>(f.extent(0), 10);
      for (std::int64_t m = 1; m <= M; ++m)
        c.main17.le(difference_norm(ft, 0, m, p), difference_norm(f, 0, m, p) / 0.75,
                    1e-12 * std::max(1.0, norm), ctx + " (main17) m=" + std::to_string(m));
    }
  }

  // dilation identity
  if (index < 20) {
    Exponents e{n, p, p, 0.5};
    for (double lam : {2.0, 3.0, 0.5})
      c.open1.le(scaling_gap(f, lam, e), 0.02, 0.0, ctx + " (open1) lambda=" + num(lam));
  }

  // node-doubling stability of the quadrature
  if (index % 7 == 0) {
    Exponents e{n, p, 1.0, 0.3};
    const double v1 = besov_from_curve(curves[0], 0, e, 64).value;
    const double v2 = besov_from_curve(curves[0], 0, e, 128).value;
    if (v1 > 0.0) c.refine.le(std::fabs(v2 / v1 - 1.0), 0.005, 0.0, ctx + " refinement");
  }
}

void check_one_set(FunctionChecks& c, const DiscreteSet& E, int index) {
  if (E.dim() < 2) return;
  const std::string ctx = "set " + std::to_string(index);
  const double h = E.spacing();
  const double mu = E.measure();
  double lam = std::numeric_limits<double>::infinity();
  for (int k = 0; k < E.dim(); ++k) lam = std::min(lam, projection_measure(E, k));
  const double eta = mu / 10.0;
  const double H = 2.0 * mu * mu * E.dim() / (lam * eta);
  const double hstar = translation_search(E, mu, lam, eta);
  c.lemma28.le(hstar, H, 1e-12 * std::max(1.0, H), ctx + " h <= H");
  const auto m = static_cast<std::int64_t>(std::llround(hstar / h));
  double total = 0.0;
  for (int k = 0; k < E.dim(); ++k) total += overlap(E, k, m);
  c.lemma28.le(total, eta, 0.0, ctx + " overlap sum < eta");
  if (m > 1) {
    double before = 0.0;
    for (int k = 0; k < E.dim(); ++k) before += overlap(E, k, m - 1);
    c.lemma28.le(eta, before, 1e-12 * std::max(1.0, eta), ctx + " minimality");
  }
  // discrete averaging step behind the lemma
  for (int k = 0; k < E.dim(); ++k) {
    double sum = 0.0;
    for (std::int64_t s = 1; s <= E.extent(k) + 1; ++s) sum += overlap(E, k, s);
    c.lemma28.le(sum * h, mu * mu / projection_measure(E, k), 1e-9,
                 ctx + " averaging axis " + std::to_string(k));
  }
}

void check_fixed_cases(FunctionChecks& c) {
  // mollifier mass and support
  for (auto [dim, tau, h] : {std::tuple<int, double, double>{1, 0.5, 0.01},
                             {2, 0.3, 0.05},
                             {3, 0.9, 0.25}}) {
    const Mollifier m = standard_mollifier(dim, tau, h);
    double sum = 0.0;
    for (double v : m.kernel.samples()) sum += v;
    c.moll.close(sum * m.kernel.cell_volume(), 1.0, 1e-12,
                 "mollifier mass dim=" + std::to_string(dim));
    for (int a = 0; a < dim; ++a) {
      const double lo = m.kernel.origin(a);
      const double hi = (static_cast<double>(m.kernel.lo(a) + m.kernel.extent(a))) * h;
      c.moll.is_true(lo >= -tau - h && hi <= tau + h,
                     "mollifier support dim=" + std::to_string(dim));
    }
  }

  // cutoff properties in one and two dimensions
  for (int dim : {1, 2}) {
    const double h = dim == 1 ? 0.01 : 0.05;
    const GridFunction eta = cutoff(dim, h);
    std::array<double, 3> origin{0.0, 0.0, 0.0};
    c.cut.close(eta.value_at(std::span<const double>(origin.data(), static_cast<std::size_t>(dim))),
                1.0, 1e-9, "cutoff at origin");
    double mass = 0.0, mn = 1e300, mx = -1e300;
    for (double v : eta.samples()) {
      mass += v;
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    mass *= eta.cell_volume();
    const double ball2 = dim == 1 ? 4.0 : 4.0 * 3.14159265358979323846;
    c.cut.close(mass, ball2, 0.01, "cutoff mass dim=" + std::to_string(dim));
    c.cut.is_true(mn >= 0.0 && mx <= 1.0, "cutoff range dim=" + std::to_string(dim));
    // = 1 inside the shrunken unit ball
    std::array<double, 3> probe{1.0 - 2.5 * h, 0.0, 0.0};
    c.cut.close(eta.value_at(std::span<const double>(probe.data(), static_cast<std::size_t>(dim))),
                1.0, 1e-9, "cutoff plateau dim=" + std::to_string(dim));
  }

  // admissible construction: range, plateau, modulus cap
  {
    const double h = 0.02, tau = 0.1;
    const DiscreteSet K = parse_set_description("box 0 1 0 1", h);
    const GridFunction f = admissible_from_set(K, tau);
    double mn = 1e300, mx = -1e300;
    for (double v : f.samples()) {
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    c.second14.is_true(mn >= 0.0 && mx <= 1.0, "admissible range");
    const DiscreteSet K_tau = K.dilated_by(2.0 * tau);
    const DiscreteSet plateau_set = K.dilated_by(tau - h);
    bool plateau_ok = true;
    plateau_set.for_each_cell([&](std::array<std::int64_t, 3> g) {
      std::array<double, 3> x{(static_cast<double>(g[0]) + 0.5) * h,
                              (static_cast<double>(g[1]) + 0.5) * h, 0.0};
      if (f.value_at(std::span<const double>(x.data(), 2)) < 1.0 - 1e-9) plateau_ok = false;
    });
    c.second14.is_true(plateau_ok, "admissible plateau dist <= tau - h");
    for (int k = 0; k < 2; ++k)
      c.second14.le(modulus_at_infinity(f, k, 1.0), 2.0 * K_tau.measure(), 1e-9,
                    "(second14) axis " + std::to_string(k));
  }

  // product with a dilated cutoff barely changes derivative norms
  {
    const double h = 0.01;
    const GridFunction f = mollify(parse_set_description("box -0.4 0.4", h).indicator(), 0.05);
    const GridFunction eta = cutoff(1, h);
    const double base = lp_norm(partial_derivative(f, 0), 1.0);
    const double margin = 0.05 * std::max(1.0, base);
    auto product_ok = [&](double gammav) {
      GridFunction g = f;
      for (std::int64_t i = 0; i < g.extent(0); ++i) {
        const double x = (static_cast<double>(i + g.lo(0)) + 0.5) * h * gammav;
        std::array<double, 3> pt{x, 0.0, 0.0};
        g.cell({i, 0, 0}) *= eta.value_at(std::span<const double>(pt.data(), 1));
      }
      return lp_norm(partial_derivative(g, 0), 1.0) < base + margin;
    };
    double lo = 1e-3, hi = 1.0;
    c.gamma.is_true(product_ok(lo), "(gamma) small-scale predicate");
    for (int it = 0; it < 20; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (product_ok(mid))
        lo = mid;
      else
        hi = mid;
    }
    c.gamma.is_true(product_ok(lo), "(gamma) holds at the bisected scale");
  }

  // exact dilation scaling of cutoff derivative norms, n = 3, p = 4
  {
    const double h = 0.1, p = 4.0;
    const GridFunction eta = cutoff(3, h);
    std::array<double, 3> base{};
    for (int k = 0; k < 3; ++k) base[static_cast<std::size_t>(k)] = lp_norm(partial_derivative(eta, k), p);
    for (double gammav : {0.5, 0.1, 0.01}) {
      const GridFunction fg = dilate(eta, gammav);
      const double factor = std::pow(gammav, 1.0 - 3.0 / p);
      for (int k = 0; k < 3; ++k)
        c.zamena.close(lp_norm(partial_derivative(fg, k), p),
                       factor * base[static_cast<std::size_t>(k)], 0.02,
                       "(zamena) gamma=" + num(gammav));
    }
  }
}

void check_smooth_fine(FunctionChecks& c) {
  const double h = 1e-3;
  for (double tau : {0.01, 0.02}) {
    const GridFunction f = mollify(parse_set_description("box 0 1", h).indicator(), tau);
    const double gn = lp_norm(partial_derivative(f, 0), 1.0);
    const auto d = derivative_norm_via_modulus(f, 0, 1.0);
    c.lemma22.close(d.reported, gn, 0.02, "fine smooth member tau=" + num(tau));
    c.lemma22.close(gn, 2.0, 0.02, "fine smooth member |f'|_1 tau=" + num(tau));
  }
}

} // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  FunctionChecks c;
  const auto fns = make_function_corpus(options.function_count, options.seed);
  const auto sets = make_set_corpus(options.set_count, options.seed + 1);
  for (std::size_t i = 0; i < fns.size(); ++i)
    check_one_function(c, fns[i], static_cast<int>(i));
  for (std::size_t i = 0; i < sets.size(); ++i) check_one_set(c, sets[i], static_cast<int>(i));
  check_fixed_cases(c);
  if (options.smooth_fine_members) check_smooth_fine(c);

  VerifyReport rep;
  for (Check* ch : {&c.sandwich, &c.monotone, &c.first, &c.posit, &c.charact, &c.ocenka,
                    &c.lemma22, &c.lemma23, &c.lemma24, &c.lemma25, &c.distrib, &c.deriv,
                    &c.estim1, &c.estim2, &c.lemma28, &c.below, &c.subadd, &c.isometry, &c.young,
                    &c.main17, &c.open1, &c.refine, &c.shift, &c.moll, &c.cut, &c.second14,
                    &c.gamma, &c.zamena})
    rep.checks.push_back(ch->result);
  return rep;
}

} // namespace besovcap
