#include <doctest.h>

#include <cstring>

#include "besovcap/grid.hpp"
#include "besovcap/mollify.hpp"
#include "support.hpp"

using namespace besovcap;
using testsupport::hat_unit;
using testsupport::indicator;

TEST_CASE("lp_norm on reference inputs") {
  const GridFunction chi = indicator("box 0 1", 0.01);
  CHECK(lp_norm(chi, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lp_norm(chi, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

  GridFunction zero(1, {0, 0, 0}, {50, 1, 1}, 0.02);
  CHECK(lp_norm(zero, 1.0) == 0.0);
  CHECK(lp_norm(zero, 2.7) == 0.0);

  CHECK(lp_norm(hat_unit(0.01), 1.0) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(lp_norm(chi, 0.5), parameter_error);
}

TEST_CASE("translate is an exact isometry") {
  const GridFunction chi = indicator("box 0 1", 0.01);

  const GridFunction same = translate(chi, 0, 0);
  CHECK(same.lo(0) == chi.lo(0));
  CHECK(std::memcmp(same.samples().data(), chi.samples().data(),
                    sizeof(double) * static_cast<std::size_t>(chi.size())) == 0);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const GridFunction f = testsupport::random_function(rng, 1 + trial % 3, 8, 0.1);
    const auto cells = static_cast<std::int64_t>(rng() % 41) - 20;
    const GridFunction g = translate(f, trial % f.dim(), cells);
    CHECK(lp_norm(g, 1.5) == lp_norm(f, 1.5)); // bit-exact
  }

  const GridFunction shifted = translate(chi, 0, 100);
  CHECK(shifted.lo(0) == -100);
  CHECK(shifted.origin(0) == doctest::Approx(-1.0).epsilon(1e-12));
  std::array<double, 1> pt{-0.5};
  CHECK(shifted.value_at(pt) == 1.0);
}

TEST_CASE("difference_norm on interval indicators") {
  const GridFunction chi = indicator("box 0 1", 0.01);
  CHECK(difference_norm(chi, 0, 25, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(difference_norm(chi, 0, 0, 1.0) == 0.0);
  CHECK(difference_norm(chi, 0, 200, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(difference_norm(chi, 0, -1, 1.0), parameter_error);
}

TEST_CASE("difference bounds (First) and (posit) hold exactly") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const double p = 1.0 + (trial % 3) * 0.5;
    GridFunction f = testsupport::random_function(rng, 1 + trial % 2, 24, 0.05);
    const double norm = lp_norm(f, p);
    for (std::int64_t m : {1, 5, 11, 40}) {
      CHECK(difference_norm(f, 0, m, p) <= 2.0 * norm + 1e-12 * norm);
    }
    for (double& v : f.samples()) v = std::fabs(v);
    const double pn = lp_norm(f, p);
    for (std::int64_t m : {1, 5, 11, 40})
      CHECK(difference_norm(f, 0, m, p) <= std::pow(2.0, 1.0 / p) * pn + 1e-12 * pn);
  }
}

TEST_CASE("difference_norm is constant beyond the slab width") {
  const GridFunction chi = indicator("box 0 0.4 0 1", 0.02); // 20 cells wide along x
  const double disjoint = difference_norm(chi, 0, 20, 1.0);
  for (std::int64_t m : {21, 30, 64})
    CHECK(difference_norm(chi, 0, m, 1.0) == doctest::Approx(disjoint).epsilon(1e-14));
}

TEST_CASE("partial_derivative is exact on lattice-scale piecewise linear functions") {
  const GridFunction hat = hat_unit(0.01);
  CHECK(lp_norm(partial_derivative(hat, 0), 1.0) == doctest::Approx(2.0).epsilon(1e-12));

  GridFunction zero(2, {0, 0, 0}, {8, 8, 1}, 0.1);
  CHECK(lp_norm(partial_derivative(zero, 1), 1.0) == 0.0);

  // ramp x on [0,1], zero outside: slope 1 inside, unit jump at the right edge
  const double h = 0.01;
  GridFunction ramp(1, {0, 0, 0}, {100, 1, 1}, h);
  for (std::int64_t i = 0; i < 100; ++i) ramp.cell({i, 0, 0}) = static_cast<double>(i) * h;
  const GridFunction d = partial_derivative(ramp, 0);
  for (std::int64_t i = 1; i < 98; ++i)
    CHECK(d.cell({i + 1, 0, 0}) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(lp_norm(d, 1.0) == doctest::Approx(2.0 * (1.0 - h)).epsilon(1e-9));
}

TEST_CASE("convolution matches the direct summation oracle") {
  const GridFunction chi = indicator("box 0 1", 0.05);
  const GridFunction conv = convolve(chi, chi);
  const GridFunction oracle = testsupport::convolve_oracle(chi, chi);
  REQUIRE(conv.size() == oracle.size());
  for (std::int64_t i = 0; i < conv.size(); ++i)
    CHECK(conv.samples()[static_cast<std::size_t>(i)] ==
          doctest::Approx(oracle.samples()[static_cast<std::size_t>(i)]).epsilon(1e-12));

  // tent apex near x = 1 with value 1
  double apex = 0.0;
  for (double v : conv.samples()) apex = std::max(apex, v);
  CHECK(apex == doctest::Approx(1.0).epsilon(2.0 * 0.05));

  std::mt19937_64 rng(3);
  const GridFunction f = testsupport::random_function(rng, 2, 6, 0.1);
  const GridFunction g = testsupport::random_function(rng, 2, 4, 0.1);
  const GridFunction c2 = convolve(f, g);
  const GridFunction o2 = testsupport::convolve_oracle(f, g);
  for (std::int64_t i = 0; i < c2.size(); ++i)
    CHECK(c2.samples()[static_cast<std::size_t>(i)] ==
          doctest::Approx(o2.samples()[static_cast<std::size_t>(i)]).epsilon(1e-12));
}

TEST_CASE("convolution with a normalized spike is the identity up to a shift") {
  const GridFunction chi = indicator("box 0 1", 0.02);
  GridFunction spike(1, {4, 0, 0}, {1, 1, 1}, 0.02);
  spike.cell({0, 0, 0}) = 1.0 / 0.02;
  const GridFunction out = convolve(chi, spike);
  CHECK(out.lo(0) == chi.lo(0) + 4);
  for (std::int64_t i = 0; i < chi.size(); ++i)
    CHECK(out.samples()[static_cast<std::size_t>(i)] ==
          doctest::Approx(chi.samples()[static_cast<std::size_t>(i)]).epsilon(1e-12));
}

TEST_CASE("convolution requires matching lattices") {
  const GridFunction a = indicator("box 0 1", 0.02);
  const GridFunction b = indicator("box 0 1", 0.04);
  CHECK_THROWS_AS(convolve(a, b), parameter_error);
}

TEST_CASE("mollification does not increase lp norms") {
  const GridFunction chi = indicator("box 0 1 0 1", 0.05);
  const GridFunction smooth = mollify(chi, 0.2);
  for (double p : {1.0, 2.0, 3.0})
    CHECK(lp_norm(smooth, p) <= lp_norm(chi, p) * (1.0 + 1e-12));
}

TEST_CASE("value_at uses half-open cells") {
  const GridFunction chi = indicator("box 0 1", 0.01);
  std::array<double, 1> left{0.0}, inside{0.999}, right{1.0};
  CHECK(chi.value_at(left) == 1.0);
  CHECK(chi.value_at(inside) == 1.0);
  CHECK(chi.value_at(right) == 0.0);
}

TEST_CASE("tighten_support shrinks the box") {
  GridFunction f(2, {-5, -5, 0}, {20, 20, 1}, 0.1);
  f.cell({7, 8, 0}) = 3.0;
  f.cell({9, 8, 0}) = -1.0;
  const GridFunction t = tighten_support(f);
  CHECK(t.extent(0) == 3);
  CHECK(t.extent(1) == 1);
  CHECK(t.lo(0) == 2);
  CHECK(t.lo(1) == 3);
  CHECK(lp_norm(t, 2.0) == doctest::Approx(lp_norm(f, 2.0)).epsilon(1e-15));
}

TEST_CASE("Exponents derived values and guards") {
  Exponents e{3, 2.0, 1.0, 0.5};
  e.validate();
  CHECK(e.p_star() == doctest::Approx(6.0));
  CHECK(e.p_alpha() == doctest::Approx(3.0));

  Exponents bad{2, 2.0, 1.0, 0.5};
  CHECK(!bad.has_p_star());
  CHECK_THROWS_AS(bad.p_star(), parameter_error);

  for (double alpha : {0.1, 0.5, 0.9}) {
    Exponents x{3, 1.5, 1.0, alpha};
    if (x.has_p_star() && x.has_p_alpha()) CHECK(x.p_alpha() < x.p_star());
  }

  CHECK_THROWS_AS(Exponents{1, 0.5, 1.0, 0.5}.validate(), parameter_error);
  CHECK_THROWS_AS((Exponents{1, 1.0, 1.0, 1.5}).validate(), parameter_error);
}
