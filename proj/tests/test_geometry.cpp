#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdk/geometry.hpp"

#include <random>

using namespace pdk;

namespace {

Polydisc ball(std::int64_t p, std::vector<Rational> center, std::int64_t alpha) {
  return Polydisc(PAdicPoint(p, std::move(center)), alpha);
}

Polydisc random_ball(std::mt19937_64& rng, std::int64_t p, std::int64_t dim) {
  std::vector<Rational> coords;
  for (std::int64_t j = 0; j < dim; ++j) {
    coords.push_back(make_rational(static_cast<std::int64_t>(rng() % 27), 3));
  }
  const std::int64_t alpha = static_cast<std::int64_t>(rng() % 5) - 2;
  return Polydisc(PAdicPoint(p, std::move(coords)), alpha);
}

}  // namespace

TEST_CASE("membership basics") {
  CHECK(Polydisc::unit(3, 1).contains(PAdicPoint::zero(3, 1)));
  CHECK(!ball(3, {Rational(0)}, 1).contains(PAdicPoint(3, {Rational(1)})));
  CHECK(ball(3, {Rational(1)}, 1).contains(PAdicPoint(3, {Rational(4)})));
}

TEST_CASE("comparison trichotomy examples") {
  const auto b = ball(3, {Rational(1)}, 1);
  CHECK(compare(b, b) == BallRelation::Equal);
  CHECK(compare(ball(2, {Rational(0)}, 1), ball(2, {Rational(0)}, 0)) ==
        BallRelation::FirstInsideSecond);
  CHECK(compare(ball(3, {Rational(0)}, 1), ball(3, {Rational(1)}, 1)) ==
        BallRelation::Disjoint);
}

TEST_CASE("comparison agrees with exhaustive membership") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const auto a = random_ball(rng, 3, 1);
    const auto b = random_ball(rng, 3, 1);
    const auto rel = compare(a, b);
    const std::int64_t depth = std::max(a.alpha(), b.alpha()) + 1;
    bool meets = false;
    for (const auto& x : a.representatives(depth)) {
      if (b.contains(x)) {
        meets = true;
        break;
      }
    }
    CHECK(meets == (rel != BallRelation::Disjoint));
  }
}

TEST_CASE("split counts and partitions") {
  const auto unit = Polydisc::unit(2, 1);
  CHECK(unit.split(0) == std::vector<Polydisc>{unit});
  const auto halves = unit.split(1);
  REQUIRE(halves.size() == 2);
  CHECK(halves[0] == ball(2, {Rational(0)}, 1));
  CHECK(halves[1] == ball(2, {Rational(1)}, 1));

  const auto grid = Polydisc::unit(3, 2).split(1);
  CHECK(grid.size() == 9);

  CHECK_THROWS_AS(unit.split(-1), std::invalid_argument);
}

TEST_CASE("split cells tile the ball exactly") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 25; ++i) {
    const auto b = random_ball(rng, 3, 1);
    const std::int64_t gamma = b.alpha() + 1 + static_cast<std::int64_t>(rng() % 2);
    const auto children = b.split(gamma);
    for (const auto& x : b.representatives(gamma + 1)) {
      int hits = 0;
      for (const auto& child : children) {
        if (child.contains(x)) ++hits;
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("disjointify leaves disjoint families alone") {
  const std::vector<Polydisc> already{ball(3, {Rational(0)}, 1), ball(3, {Rational(1)}, 1),
                                      ball(3, {Rational(2)}, 1)};
  CHECK(disjointify(already) == already);
}

TEST_CASE("disjointify keeps the larger ball") {
  const auto big = ball(2, {Rational(0)}, 0);
  const auto small = ball(2, {Rational(0)}, 1);
  const auto kept = disjointify({big, small});
  CHECK(kept == std::vector<Polydisc>{big});

  const auto out = disjointify({ball(2, {Rational(0)}, 2), ball(2, {Rational(0)}, 1),
                                ball(2, {Rational(1)}, 1)});
  CHECK(out == std::vector<Polydisc>{ball(2, {Rational(0)}, 1), ball(2, {Rational(1)}, 1)});
}

TEST_CASE("disjointify preserves the union and is pairwise disjoint") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    std::vector<Polydisc> balls;
    std::int64_t depth = -2;
    for (int k = 0; k < 5; ++k) {
      balls.push_back(random_ball(rng, 3, 1));
      depth = std::max(depth, balls.back().alpha());
    }
    const auto kept = disjointify(balls);
    for (std::size_t a = 0; a < kept.size(); ++a) {
      for (std::size_t b = a + 1; b < kept.size(); ++b) {
        CHECK(compare(kept[a], kept[b]) == BallRelation::Disjoint);
      }
    }
    const Polydisc ambient = ball(3, {Rational(0)}, -3);
    for (const auto& x : ambient.representatives(depth + 1)) {
      bool in_original = false;
      for (const auto& b : balls) in_original = in_original || b.contains(x);
      bool in_kept = false;
      for (const auto& b : kept) in_kept = in_kept || b.contains(x);
      CHECK(in_original == in_kept);
    }
  }
}

TEST_CASE("product split round-trips") {
  const auto box = ball(3, {Rational(1), make_rational(1, 3)}, 2);
  const auto [left, right] = box.product_split(1);
  CHECK(left == ball(3, {Rational(1)}, 2));
  CHECK(right == ball(3, {make_rational(1, 3)}, 2));
  CHECK(Polydisc::product(left, right) == box);

  const auto zero2 = Polydisc::unit(5, 2);
  const auto [l0, r0] = zero2.product_split(1);
  CHECK(l0 == Polydisc::unit(5, 1));
  CHECK(r0 == Polydisc::unit(5, 1));
}

TEST_CASE("min valuation examples") {
  CHECK(ball(3, {Rational(0)}, 2).min_valuation() == 2);
  CHECK(ball(3, {Rational(1)}, 2).min_valuation() == 0);
  CHECK(ball(3, {make_rational(1, 3)}, 1).min_valuation() == -1);
}

TEST_CASE("centers are stored canonically") {
  const auto b = ball(3, {Rational(4)}, 1);
  CHECK(b.center() == PAdicPoint(3, {Rational(1)}));
  const auto c = ball(3, {Rational(10)}, -1);
  CHECK(c.center().is_zero());
}

TEST_CASE("split output is sorted and deterministic") {
  const auto children = Polydisc::unit(3, 1).split(2);
  REQUIRE(children.size() == 9);
  for (std::size_t i = 0; i + 1 < children.size(); ++i) {
    CHECK(children[i] < children[i + 1]);
  }
}
