#include <doctest.h>

#include <cmath>

#include "besovcap/modulus.hpp"
#include "besovcap/mollify.hpp"
#include "support.hpp"

using namespace besovcap;
using testsupport::hat_unit;
using testsupport::indicator;

TEST_CASE("partial modulus of an interval indicator") {
  const GridFunction chi = indicator("box 0 1", 0.01);
  CHECK(partial_modulus(chi, 0, 0.25, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(partial_modulus(chi, 0, 5.0, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(partial_modulus(chi, 0, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(partial_modulus(chi, 0, -0.1, 1.0), parameter_error);
}

TEST_CASE("oscillating example nearly saturates the constant 2") {
  const GridFunction f = example_oscillating(2, 1.0 / 64.0);
  const double norm1 = lp_norm(f, 1.0);
  CHECK(norm1 == doctest::Approx(5.0).epsilon(1e-12));
  const double omega = partial_modulus(f, 0, 1.0, 1.0);
  CHECK(omega >= 2.0 * (4.0 / 5.0) * norm1 - 1e-12); // = 8
  CHECK(omega <= 2.0 * norm1 + 1e-12);
}

TEST_CASE("curve of an interval indicator is 2 min(delta, 1)") {
  const GridFunction chi = indicator("box 0 1", 0.01);
  const ModulusCurve curve = curve_of(chi, 0, 1.0);
  CHECK(curve.plateau() == doctest::Approx(2.0).epsilon(1e-12));
  for (double d : {0.13, 0.5, 0.777, 1.0, 3.0})
    CHECK(curve.value(d) == doctest::Approx(2.0 * std::min(d, 1.0)).epsilon(1e-9));

  GridFunction zero(1, {0, 0, 0}, {10, 1, 1}, 0.1);
  const ModulusCurve zc = curve_of(zero, 0, 1.0);
  CHECK(zc.plateau() == 0.0);
  CHECK(zc.value(1.0) == 0.0);
}

TEST_CASE("plateau of a nonnegative function is 2^(1/p) times its norm") {
  std::mt19937_64 rng(23);
  for (double p : {1.0, 2.0, 1.5}) {
    GridFunction f = testsupport::random_function(rng, 1, 48, 0.02);
    for (double& v : f.samples()) v = std::fabs(v);
    const double expected = std::pow(2.0, 1.0 / p) * lp_norm(f, p);
    CHECK(curve_of(f, 0, p).plateau() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(modulus_at_infinity(f, 0, p) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("averaged modulus closed forms") {
  // omega(u) = u on [0, 1]
  std::vector<double> knots, values;
  for (int i = 0; i <= 100; ++i) {
    knots.push_back(i / 100.0);
    values.push_back(i / 100.0);
  }
  const ModulusCurve linear(knots, values);
  CHECK(averaged_modulus(linear, 1.0) == doctest::Approx(0.5).epsilon(1e-12));

  // near-jump to the constant c
  const ModulusCurve constant({0.0, 1e-9}, {0.0, 3.0});
  CHECK(averaged_modulus(constant, 1.0) == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(averaged_modulus(constant, 0.5) == doctest::Approx(3.0).epsilon(1e-8));

  const GridFunction chi = indicator("box 0 1", 0.01);
  const ModulusCurve curve = curve_of(chi, 0, 1.0);
  CHECK(averaged_modulus(curve, 2.0) == doctest::Approx(1.5).epsilon(1e-9));
  CHECK_THROWS_AS(averaged_modulus(curve, 0.0), parameter_error);
}

TEST_CASE("sandwich and monotonicity along computed curves") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    GridFunction f = testsupport::random_function(rng, 1, 64, 0.02);
    const ModulusCurve curve = curve_of(f, 0, 1.0);
    const auto knots = curve.knots();
    const auto vals = curve.values();
    const double tol = 1e-12 * curve.plateau();
    double prev_avg = 0.0, prev_ratio = 1e300;
    for (std::size_t m = 1; m < knots.size(); ++m) {
      const double avg = curve.averaged(knots[m]);
      CHECK(avg <= vals[m] + tol);
      CHECK(vals[m] <= 2.0 * avg + tol);
      CHECK(prev_avg <= avg + tol);
      CHECK(avg / knots[m] <= prev_ratio + tol);
      prev_avg = avg;
      prev_ratio = avg / knots[m];
    }
  }
}

TEST_CASE("modulus at infinity on reference inputs") {
  const GridFunction chi = indicator("box 0 1", 0.01);
  CHECK(modulus_at_infinity(chi, 0, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  const GridFunction f = example_oscillating(2, 1.0 / 64.0);
  const double v = modulus_at_infinity(f, 0, 1.0);
  CHECK(v >= 8.0 - 1e-12);
  CHECK(v <= 10.0 + 1e-12);

  GridFunction zero(1, {0, 0, 0}, {10, 1, 1}, 0.1);
  CHECK(modulus_at_infinity(zero, 0, 1.0) == 0.0);
}

TEST_CASE("derivative norm recovered from the difference quotient sup") {
  const GridFunction hat = hat_unit(0.01);
  const auto dh = derivative_norm_via_modulus(hat, 0, 1.0);
  CHECK(dh.reported == doctest::Approx(2.0).epsilon(0.02));

  // smooth function: both routes agree, and the sup sits at the smallest shift
  const GridFunction smooth = mollify(indicator("box 0 1", 0.01), 0.1);
  const auto ds = derivative_norm_via_modulus(smooth, 0, 1.0);
  const double fd = lp_norm(partial_derivative(smooth, 0), 1.0);
  CHECK(ds.reported == doctest::Approx(fd).epsilon(0.02));
  CHECK(ds.full_sup == doctest::Approx(ds.reported).epsilon(1e-12));
  CHECK(fd == doctest::Approx(2.0).epsilon(0.02));

  // ramp of slope s supported on a width-1 interval: total variation 2|s|
  const double h = 0.01, s = 3.0;
  GridFunction ramp(1, {0, 0, 0}, {100, 1, 1}, h);
  for (std::int64_t i = 0; i < 100; ++i) ramp.cell({i, 0, 0}) = s * static_cast<double>(i) * h;
  const auto dr = derivative_norm_via_modulus(ramp, 0, 1.0);
  const double fdr = lp_norm(partial_derivative(ramp, 0), 1.0);
  CHECK(dr.reported == doctest::Approx(fdr).epsilon(1e-12));
  CHECK(dr.reported == doctest::Approx(2.0 * s * (1.0 - h) + s * h).epsilon(0.02));
}

TEST_CASE("lattice bound omega(m h) <= ||D f||_p m h holds exactly") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    GridFunction f = testsupport::random_function(rng, 2, 16, 0.05);
    const double p = 1.0 + trial % 2;
    const GridFunction g = partial_derivative(f, 0);
    const double gn = lp_norm(g, p);
    const ModulusCurve curve = curve_of(f, 0, p);
    const auto knots = curve.knots();
    const auto vals = curve.values();
    for (std::size_t m = 1; m < knots.size(); ++m)
      CHECK(vals[m] <= gn * knots[m] * (1.0 + 1e-12));
  }
}
