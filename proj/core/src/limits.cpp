#include "besovcap/limits.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "besovcap/mollify.hpp"

namespace besovcap {

namespace {

constexpr const char* kModel = "least-squares linear fit in the small parameter, last 4 points";

void require_alphas(const std::vector<double>& alphas, std::size_t min_count, bool increasing) {
  if (alphas.size() < min_count)
    throw parameter_error("sweep: needs at least " + std::to_string(min_count) + " alphas");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0 && alphas[i] < 1.0))
      throw parameter_error("sweep: alphas must lie in (0,1)");
    if (i > 0) {
      if (increasing && !(alphas[i] > alphas[i - 1]))
        throw parameter_error("sweep: alphas must increase strictly toward 1");
      if (!increasing && !(alphas[i] < alphas[i - 1]))
        throw parameter_error("sweep: alphas must decrease strictly toward 0");
    }
  }
}

// least-squares line through (x_i, y_i); returns {intercept, rms residual}
std::pair<double, double> fit_intercept(const std::vector<double>& x,
                                        const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  double a, b; // y = a + b x
  if (std::fabs(det) < 1e-300) {
    a = sy / n;
    b = 0.0;
  } else {
    a = (sy * sxx - sx * sxy) / det;
    b = (n * sxy - sx * sy) / det;
  }
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (a + b * x[i]);
    rss += r * r;
  }
  return {a, std::sqrt(rss / n)};
}

void extrapolate(SweepResult& s, const std::vector<double>& small_param) {
  const std::size_t count = std::min<std::size_t>(4, small_param.size());
  const std::size_t from = small_param.size() - count;
  std::vector<double> x(small_param.begin() + from, small_param.end());
  std::vector<double> y(s.J_values.begin() + from, s.J_values.end());
  auto [intercept, residual] = fit_intercept(x, y);
  s.extrapolated = intercept;
  s.model_residual = residual;
  s.relative_error = std::fabs(s.extrapolated - s.target) / std::max(std::fabs(s.target), 1e-30);
  s.model = kModel;
}

} // namespace

SweepResult sweep_alpha_to_one(const DiscreteSet& G, double p, double q,
                               const std::vector<double>& alphas, const AdmissibleFamily& fam) {
  require_alphas(alphas, 4, /*increasing=*/true);
  for (double a : alphas)
    if (a < 0.8) throw parameter_error("sweep_alpha_to_one: alphas must lie in [0.8, 1)");
  SweepResult s;
  s.direction = SweepDirection::to_one;
  s.n = G.dim();
  s.p = p;
  s.q = q;
  s.alphas = alphas;
  const double pq = p / q;

  FamilyWitness warm;
  bool have_warm = false;
  std::vector<double> small;
  for (double a : alphas) {
    Exponents e{G.dim(), p, q, a};
    CapacityEstimate cap = besov_capacity_open(G, e, fam, have_warm ? &warm : nullptr);
    warm = cap.witness;
    have_warm = true;
    s.J_values.push_back(std::pow(1.0 - a, pq) * cap.value);
    s.witnesses.push_back(cap.witness);
    small.push_back(1.0 - a);
  }
  s.target = std::pow(q, -pq) * sobolev_capacity_open(G, p, fam).value;
  extrapolate(s, small);
  return s;
}

SweepResult sweep_alpha_to_zero(const DiscreteSet& K, double p, double q,
                                const std::vector<double>& alphas, const AdmissibleFamily& fam) {
  require_alphas(alphas, 4, /*increasing=*/false);
  for (double a : alphas)
    if (a > 0.2) throw parameter_error("sweep_alpha_to_zero: alphas must lie in (0, 0.2]");
  SweepResult s;
  s.direction = SweepDirection::to_zero;
  s.n = K.dim();
  s.p = p;
  s.q = q;
  s.alphas = alphas;
  const double pq = p / q;

  FamilyWitness warm;
  bool have_warm = false;
  for (double a : alphas) {
    Exponents e{K.dim(), p, q, a};
    CapacityEstimate cap = besov_capacity_upper(K, e, fam, have_warm ? &warm : nullptr);
    warm = cap.witness;
    have_warm = true;
    s.J_values.push_back(std::pow(a, pq) * cap.value);
    s.witnesses.push_back(cap.witness);
  }
  s.target = 2.0 * std::pow(static_cast<double>(K.dim()), p) * std::pow(q, -pq) * K.measure();
  extrapolate(s, alphas);
  return s;
}

SweepResult seminorm_zero_limit(const GridFunction& f, double p, double q,
                                const std::vector<double>& alphas) {
  require_alphas(alphas, 4, /*increasing=*/false);
  SweepResult s;
  s.direction = SweepDirection::to_zero;
  s.n = f.dim();
  s.p = p;
  s.q = q;
  s.alphas = alphas;

  std::vector<ModulusCurve> curves;
  curves.reserve(static_cast<std::size_t>(f.dim()));
  for (int k = 0; k < f.dim(); ++k) curves.push_back(curve_of(f, k, p));

  for (double a : alphas) {
    Exponents e{f.dim(), p, q, a};
    double sum = 0.0;
    for (int k = 0; k < f.dim(); ++k) sum += besov_from_curve(curves[static_cast<std::size_t>(k)], k, e).value;
    s.J_values.push_back(std::pow(a, 1.0 / q) * sum);
  }
  double plateau_sum = 0.0;
  for (const auto& c : curves) plateau_sum += c.plateau();
  s.target = std::pow(q, -1.0 / q) * plateau_sum;
  extrapolate(s, alphas);
  return s;
}

SweepResult sweep_p_equals_n(double r, double q, const std::vector<double>& alphas,
                             const std::vector<double>& eps_grid, double spacing) {
  if (!(r > 0.0)) throw parameter_error("sweep_p_equals_n: r must be positive");
  if (eps_grid.empty()) throw parameter_error("sweep_p_equals_n: eps grid must be nonempty");
  require_alphas(alphas, 2, /*increasing=*/true);
  const int n = 2;
  const double sigma = (static_cast<double>(n) - 1.0) / (2.0 * n);
  const double moll_tau = 0.5;

  SweepResult s;
  s.direction = SweepDirection::to_one;
  s.n = n;
  s.p = static_cast<double>(n);
  s.q = q;
  s.alphas = alphas;
  s.target = 0.0;

  // one member per eps, independent of alpha
  std::vector<GridFunction> members;
  for (double eps : eps_grid) {
    if (!(eps > 0.0 && eps < 1.0))
      throw parameter_error("sweep_p_equals_n: eps must lie in (0,1)");
    const double flat_radius = std::exp(-std::pow(eps, -1.0 / sigma));
    const double gamma_needed = flat_radius / (r + 1.0);
    const double denom = std::ceil(1.0 / gamma_needed);
    if (denom > 1e7)
      throw resolution_error("sweep_p_equals_n: eps too small, flat region not resolvable");
    const double gamma = 1.0 / denom;
    // the mollifier scale must stay resolvable after the dilation
    const double h1 = std::min(spacing, gamma * moll_tau / 3.5);
    GridFunction f0 = example_log(n, h1);
    for (double& v : f0.samples()) v = std::min(eps * v, 1.0);
    GridFunction f2 = dilate(f0, gamma);
    GridFunction f = mollify(f2, moll_tau);
    for (double& v : f.samples()) v = std::clamp(v, 0.0, 1.0);
    members.push_back(std::move(f));
  }
  // the member must cover the ball: 1 on a neighborhood of radius r
  {
    DiscreteSet ball(2, {-4, -4, 0}, {8, 8, 1}, r / 4.0);
    std::array<std::int64_t, 3> i{};
    for (i[0] = -4; i[0] < 4; ++i[0])
      for (i[1] = -4; i[1] < 4; ++i[1]) {
        const double cx = (static_cast<double>(i[0]) + 0.5) * r / 4.0;
        const double cy = (static_cast<double>(i[1]) + 0.5) * r / 4.0;
        if (cx * cx + cy * cy <= r * r) ball.insert({i[0], i[1], 0});
      }
    for (const auto& m : members)
      if (!admissible_on(m, ball))
        throw numerical_fault("sweep_p_equals_n: constructed member is not 1 on the ball");
  }

  std::vector<std::vector<ModulusCurve>> curves(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int k = 0; k < n; ++k) curves[i].push_back(curve_of(members[i], k, static_cast<double>(n)));

  for (double a : alphas) {
    Exponents e{n, static_cast<double>(n), q, a};
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < members.size(); ++i) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += besov_from_curve(curves[i][static_cast<std::size_t>(k)], k, e).value;
      best = std::min(best, std::pow(sum, static_cast<double>(n)));
    }
    s.J_values.push_back(std::pow(1.0 - a, static_cast<double>(n) / q) * best);
  }
  std::vector<double> small;
  for (double a : alphas) small.push_back(1.0 - a);
  if (alphas.size() >= 4) {
    extrapolate(s, small);
  } else {
    s.extrapolated = s.J_values.back();
    s.model = "last sweep value (fewer than 4 points)";
    s.relative_error = std::fabs(s.extrapolated - s.target) / std::max(std::fabs(s.target), 1e-30);
  }
  return s;
}

} // namespace besovcap
