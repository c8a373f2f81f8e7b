#include <doctest.h>

#include <cmath>

#include "besovcap/sets.hpp"
#include "support.hpp"

using namespace besovcap;

TEST_CASE("measure of cell unions") {
  const DiscreteSet square = parse_set_description("box 0 1 0 1", 0.1);
  CHECK(square.cell_count() == 100);
  CHECK(square.measure() == doctest::Approx(1.0).epsilon(1e-12));

  DiscreteSet empty(2, 0.1);
  CHECK(empty.measure() == 0.0);
  CHECK(empty.empty());

  const DiscreteSet two = parse_set_description("box 0 1 0 1\nbox 2 3 0 1", 0.1);
  CHECK(two.measure() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("projection measures") {
  const DiscreteSet square = parse_set_description("box 0 1 0 1", 0.1);
  CHECK(projection_measure(square, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(projection_measure(square, 1) == doctest::Approx(1.0).epsilon(1e-12));

  const DiscreteSet slab = parse_set_description("box 0 1 0 0.1", 0.1);
  CHECK(projection_measure(slab, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(projection_measure(slab, 0) == doctest::Approx(0.1).epsilon(1e-12));

  const DiscreteSet stacked = parse_set_description("box 0 1 0 1\nbox 0 1 2 3", 0.1);
  CHECK(projection_measure(stacked, 1) == doctest::Approx(1.0).epsilon(1e-12));

  const DiscreteSet line = parse_set_description("box 0 1", 0.1);
  CHECK_THROWS_AS(projection_measure(line, 0), parameter_error);
}

TEST_CASE("translation overlaps") {
  const DiscreteSet square = parse_set_description("box 0 1 0 1", 0.05);
  CHECK(overlap(square, 0, 10) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(overlap(square, 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(overlap(square, 0, 40) == 0.0);
  CHECK_THROWS_AS(overlap(square, 0, -1), parameter_error);
}

TEST_CASE("translation search meets the averaging bound") {
  const DiscreteSet square = parse_set_description("box 0 1 0 1", 0.01);
  const double h = translation_search(square, 1.0, 1.0, 0.1);
  CHECK(h <= 40.0);
  CHECK(h == doctest::Approx(0.96).epsilon(1e-9)); // 2(1-h) < 0.1 first holds here
  CHECK(translation_search(square, 1.0, 1.0, 3.0) == doctest::Approx(0.01).epsilon(1e-9));

  CHECK_THROWS_AS(translation_search(square, 0.5, 1.0, 0.1), parameter_error);
  CHECK_THROWS_AS(translation_search(square, 1.0, 2.0, 0.1), parameter_error);
}

TEST_CASE("translation search on random sets, with an exhaustive oracle") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 12; ++trial) {
    DiscreteSet e(2, {0, 0, 0}, {12, 12, 1}, 0.1);
    std::int64_t placed = 0;
    while (placed < 50) {
      std::array<std::int64_t, 3> g{static_cast<std::int64_t>(rng() % 12),
                                    static_cast<std::int64_t>(rng() % 12), 0};
      if (!e.contains(g)) {
        e.insert(g);
        ++placed;
      }
    }
    const double mu = e.measure();
    const double lam = std::min(projection_measure(e, 0), projection_measure(e, 1));
    const double eta = mu / 10.0;
    const double H = 2.0 * mu * mu * 2.0 / (lam * eta);
    const double found = translation_search(e, mu, lam, eta);
    CHECK(found <= H * (1.0 + 1e-12));
    const auto m = static_cast<std::int64_t>(std::llround(found / 0.1));
    CHECK(overlap(e, 0, m) + overlap(e, 1, m) < eta);
    for (std::int64_t s = 1; s < m; ++s)
      CHECK(overlap(e, 0, s) + overlap(e, 1, s) >= eta);

    // the averaging step behind the search
    for (int k = 0; k < 2; ++k) {
      double sum = 0.0;
      for (std::int64_t s = 1; s <= e.extent(k); ++s) sum += overlap(e, k, s);
      CHECK(sum * 0.1 <= mu * mu / projection_measure(e, k) + 1e-9);
    }
  }
}

TEST_CASE("set description parser accepts the documented forms") {
  const DiscreteSet ball = parse_set_description("ball 0 0 0.5", 0.01);
  CHECK(ball.measure() == doctest::Approx(3.14159265 * 0.25).epsilon(0.02));

  const DiscreteSet mixed = parse_set_description("# a comment\nbox 0 1 0 1\nball 2 0 0.3\n", 0.02);
  CHECK(mixed.measure() > 1.0);

  const DiscreteSet interval = parse_set_description("box -1 1", 0.001);
  CHECK(interval.dim() == 1);
  CHECK(interval.measure() == doctest::Approx(2.0).epsilon(1e-9));

  CHECK_THROWS_AS(parse_set_description("box 0 1\nbox 0 1 0 1", 0.1), parameter_error);
  CHECK_THROWS_AS(parse_set_description("box 1 0", 0.1), parameter_error);
  CHECK_THROWS_AS(parse_set_description("cube 0 1", 0.1), parameter_error);
  CHECK_THROWS_AS(parse_set_description("box 0 x", 0.1), parameter_error);
  CHECK_THROWS_AS(parse_set_description("", 0.1), parameter_error);
  CHECK_THROWS_AS(parse_set_description("box 0 1", -0.1), parameter_error);
}

TEST_CASE("dilation and erosion by center distance") {
  const DiscreteSet square = parse_set_description("box 0 1 0 1", 0.05);
  const DiscreteSet grown = square.dilated_by(0.2);
  CHECK(square.subset_of(grown));
  CHECK(grown.measure() == doctest::Approx(1.4 * 1.4).epsilon(0.08));

  const DiscreteSet shrunk = square.eroded_by(0.2);
  CHECK(shrunk.subset_of(square));
  CHECK(shrunk.measure() == doctest::Approx(0.6 * 0.6).epsilon(0.10));

  CHECK(square.subset_of(shrunk.dilated_by(0.2 + 0.1)));

  DiscreteSet empty(2, 0.1);
  CHECK(empty.dilated_by(1.0).empty());
}

TEST_CASE("indicator round trip") {
  const DiscreteSet square = parse_set_description("box 0 1 0 1", 0.1);
  const GridFunction chi = square.indicator();
  CHECK(lp_norm(chi, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  std::array<double, 2> inside{0.5, 0.5}, outside{1.5, 0.5};
  CHECK(chi.value_at(inside) == 1.0);
  CHECK(chi.value_at(outside) == 0.0);
}
