#include <doctest.h>

#include <cmath>

#include "besovcap/mollify.hpp"
#include "besovcap/rearrange.hpp"
#include "support.hpp"

using namespace besovcap;
using testsupport::indicator;

namespace {

GridFunction two_level(double h) {
  // 2 on [0, 0.5), 1 on [1, 1.8)
  GridFunction f(1, {0, 0, 0}, {static_cast<std::int64_t>(std::llround(2.0 / h)), 1, 1}, h);
  for (std::int64_t i = 0; i < f.extent(0); ++i) {
    const double x = (static_cast<double>(i) + 0.5) * h;
    if (x < 0.5)
      f.cell({i, 0, 0}) = 2.0;
    else if (x > 1.0 && x < 1.8)
      f.cell({i, 0, 0}) = 1.0;
  }
  return f;
}

// integral of (f**(u) - f*(u))/u on [t, B] by fine midpoint sums, plus the
// analytic tail; independent of the closed-form route
double tail_integral_oracle(const RearrangementProfile& pr, double t) {
  const double B = pr.support_measure();
  double acc = 0.0;
  if (t < B) {
    const int steps = 2'000'000;
    const double w = (B - t) / steps;
    for (int i = 0; i < steps; ++i) {
      const double u = t + (i + 0.5) * w;
      acc += (pr.double_star(u) - pr.star(u)) / u * w;
    }
  }
  acc += pr.total_integral() / std::max(t, B);
  return acc;
}

} // namespace

TEST_CASE("distribution function on step data") {
  const GridFunction chi = indicator("box 0 1 0 0.5", 0.05);
  CHECK(distribution(chi, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(distribution(chi, 1.0) == 0.0); // strict inequality
  const GridFunction f = two_level(0.01);
  CHECK(distribution(f, 1.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(distribution(f, 0.5) == doctest::Approx(1.3).epsilon(1e-12));
  CHECK_THROWS_AS(distribution(f, 0.0), parameter_error);
}

TEST_CASE("rearrangement of indicators and two-level functions") {
  const GridFunction chi = indicator("box 0 1 0 0.5", 0.05);
  const auto pr = rearrangement(chi);
  REQUIRE(pr.levels().size() == 1);
  CHECK(pr.levels()[0] == 1.0);
  CHECK(pr.breakpoints()[0] == doctest::Approx(0.5).epsilon(1e-12));

  const auto p2 = rearrangement(two_level(0.01));
  REQUIRE(p2.levels().size() == 2);
  CHECK(p2.levels()[0] == 2.0);
  CHECK(p2.levels()[1] == 1.0);
  CHECK(p2.breakpoints()[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p2.breakpoints()[1] == doctest::Approx(1.3).epsilon(1e-12));

  // left continuity: a breakpoint belongs to the left step
  CHECK(p2.star(p2.breakpoints()[0]) == 2.0);
  CHECK(p2.star(p2.breakpoints()[0] + 1e-9) == 1.0);
}

TEST_CASE("rearrangement preserves every lp norm") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const GridFunction f = testsupport::random_function(rng, 1 + trial % 2, 20, 0.05);
    const double p = 1.0 + 0.5 * (trial % 3);
    const auto pr = rearrangement(f);
    double sum = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < pr.breakpoints().size(); ++i) {
      sum += (pr.breakpoints()[i] - prev) * std::pow(pr.levels()[i], p);
      prev = pr.breakpoints()[i];
    }
    CHECK(sum == doctest::Approx(std::pow(lp_norm(f, p), p)).epsilon(1e-12));

    double maxabs = 0.0;
    for (double v : f.samples()) maxabs = std::max(maxabs, std::fabs(v));
    for (int j = 1; j <= 6; ++j) {
      const double y = maxabs * j / 7.0;
      const double lam = distribution(f, y);
      if (lam > 0.0) CHECK(pr.star(lam) >= y - 1e-12);
    }
  }
}

TEST_CASE("double star averages the rearrangement") {
  const GridFunction chi = indicator("box 0 1 0 0.5", 0.05); // |E| = 0.5
  const auto pr = rearrangement(chi);
  CHECK(double_star(pr, 0.25) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(double_star(pr, 1.0) == doctest::Approx(0.5).epsilon(1e-12));

  const RearrangementProfile steps({1.0, 2.0}, {2.0, 1.0});
  CHECK(double_star(steps, 2.0) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK_THROWS_AS(double_star(steps, 0.0), parameter_error);
}

TEST_CASE("the oscillation identity holds in closed form") {
  const auto chi = rearrangement(indicator("box 0 1", 0.01));
  CHECK(deriv_identity_gap(chi, 0.5) < 1e-10);
  CHECK(deriv_identity_gap(chi, 10.0) < 1e-10);

  // random 10-step profile, cross-checked against a fine numeric integral
  std::vector<double> breaks, levels;
  std::mt19937_64 rng(41);
  double b = 0.0, l = 8.0;
  for (int i = 0; i < 10; ++i) {
    b += 0.05 + 0.3 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    l *= 0.5 + 0.45 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    breaks.push_back(b);
    levels.push_back(l);
  }
  const RearrangementProfile pr(breaks, levels);
  CHECK(deriv_identity_gap(pr, 0.3) < 1e-8);
  const double numeric = tail_integral_oracle(pr, 0.3);
  CHECK(pr.double_star(0.3) == doctest::Approx(numeric).epsilon(1e-5));
}

TEST_CASE("oscillation bounds against gradient and modulus") {
  const GridFunction chi = indicator("box 0 1 0 1", 0.05);
  const auto b1 = oscillation_bounds(chi, 0.5, 1.0);
  CHECK(b1.lhs == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(b1.lhs <= b1.rhs_sobolev + 1e-9);
  CHECK(b1.lhs <= b1.rhs_modulus + 1e-9);

  const GridFunction smooth = mollify(indicator("box 0 1 0 1", 1.0 / 32.0), 0.125);
  const auto b2 = oscillation_bounds(smooth, 0.5, 1.0);
  CHECK(b2.lhs <= b2.rhs_sobolev + 1e-9 * std::max(1.0, b2.lhs));
  CHECK(b2.lhs <= b2.rhs_modulus + 1e-9 * std::max(1.0, b2.lhs));

  const auto b3 = oscillation_bounds(testsupport::hat_unit(0.01), 0.25, 1.0);
  CHECK(b3.lhs <= b3.rhs_sobolev + 1e-9 * std::max(1.0, b3.lhs));
  CHECK(b3.lhs <= b3.rhs_modulus + 1e-9 * std::max(1.0, b3.lhs));

  CHECK_THROWS_AS(oscillation_bounds(chi, 0.0, 1.0), parameter_error);
}
