#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdk/verify.hpp"

#include <random>

using namespace pdk;

namespace {

Polydisc ball(std::int64_t p, std::vector<Rational> center, std::int64_t alpha) {
  return Polydisc(PAdicPoint(p, std::move(center)), alpha);
}

}  // namespace

TEST_CASE("density pairing is the integral over the ball") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto f = verify::random_sb(rng, 3, 1, 4, -1, 2);
    const auto u = Distribution::density(f);
    for (const auto& b : basis_balls(3, 1, 2)) {
      const auto phi = SBFunction::indicator(b);
      // dual route: closed-form ball pairing vs multiply-then-integrate
      CHECK(u.pair(phi) == f.mul_pointwise(phi).integrate());
    }
  }
}

TEST_CASE("dirac pairing evaluates the test function") {
  const auto u = Distribution::dirac(PAdicPoint::zero(3, 1));
  CHECK(u.pair(SBFunction::indicator(Polydisc::unit(3, 1))) == CycScalar::one(3));
  CHECK(u.pair(SBFunction::indicator(ball(3, {Rational(1)}, 1))).is_zero());
}

TEST_CASE("diagonal pairing misses off-diagonal boxes") {
  const auto u = Distribution::diagonal(3, 1);
  CHECK(u.pair(SBFunction::indicator(ball(3, {Rational(0), Rational(1)}, 1))).is_zero());
  CHECK(u.pair(SBFunction::indicator(ball(3, {Rational(1), Rational(1)}, 1))) ==
        CycScalar::from_rational(3, make_rational(1, 3)));
  // <u_D, phi tensor psi> = integral of phi psi
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto phi = verify::random_sb(rng, 3, 1, 3, 0, 2);
    const auto psi = verify::random_sb(rng, 3, 1, 3, 0, 2);
    CHECK(u.pair(phi.tensor(psi)) == phi.mul_pointwise(psi).integrate());
  }
}

TEST_CASE("pairing is linear in the test function") {
  std::mt19937_64 rng(7);
  const std::vector<Distribution> us{
      Distribution::density(verify::random_sb(rng, 3, 2, 4, 0, 2)),
      Distribution::dirac(PAdicPoint(3, {Rational(1), make_rational(1, 3)})),
      Distribution::diagonal(3, 1)};
  for (const auto& u : us) {
    for (int i = 0; i < 10; ++i) {
      const auto phi = verify::random_sb(rng, 3, 2, 3, 0, 2);
      const auto chi = verify::random_sb(rng, 3, 2, 3, 0, 2);
      const auto a = verify::random_coef(rng, 3);
      const auto b = verify::random_coef(rng, 3);
      CHECK(u.pair(phi.scale(a) + chi.scale(b)) ==
            a * u.pair(phi) + b * u.pair(chi));
    }
  }
}

TEST_CASE("pairing is decomposition independent") {
  std::mt19937_64 rng(11);
  const auto u = Distribution::diagonal(3, 1);
  for (int i = 0; i < 15; ++i) {
    const auto phi = verify::random_sb(rng, 3, 2, 3, 0, 2);
    std::vector<SBTerm> resplit;
    for (const auto& t : phi.terms()) {
      for (const auto& child : t.ball.split(t.ball.alpha() + 1)) {
        resplit.push_back({t.coef, child});
      }
    }
    CHECK(pair_raw_terms(u, phi.terms()) == pair_raw_terms(u, resplit));
  }
}

TEST_CASE("modulated pairing agrees with materialized modulation") {
  std::mt19937_64 rng(13);
  const std::vector<Distribution> us{
      Distribution::density(verify::random_sb(rng, 3, 1, 4, -1, 2)),
      Distribution::dirac(PAdicPoint(3, {Rational(2)}))};
  for (const auto& u : us) {
    for (int i = 0; i < 10; ++i) {
      const auto phi = verify::random_sb(rng, 3, 1, 3, -1, 2);
      const PAdicPoint eta(3, {make_rational(static_cast<std::int64_t>(rng() % 27), 9)});
      CHECK(u.modulated_pair(phi, eta) == u.pair(phi.modulate(eta)));
      CHECK(u.modulated_pair(phi, PAdicPoint::zero(3, 1)) == u.pair(phi));
    }
  }
}

TEST_CASE("dirac modulated pairing has the closed form") {
  const PAdicPoint a(3, {Rational(2)});
  const auto u = Distribution::dirac(a);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    const auto phi = verify::random_sb(rng, 3, 1, 3, 0, 2);
    const PAdicPoint eta(3, {make_rational(static_cast<std::int64_t>(rng() % 27), 3)});
    CHECK(u.modulated_pair(phi, eta) == phi.eval(a) * psi(3, a.inner(eta)));
  }
}

TEST_CASE("density modulated pairing is the Fourier transform of f phi") {
  std::mt19937_64 rng(19);
  for (std::int64_t p : {2, 3}) {
    const auto f = verify::random_sb(rng, p, 1, 3, -1, 2);
    const auto u = Distribution::density(f);
    for (int i = 0; i < 8; ++i) {
      const auto phi = verify::random_sb(rng, p, 1, 3, -1, 2);
      for (const auto& eta : verify::digit_points(p, 1, -2, 1)) {
        CHECK(u.modulated_pair(phi, eta) == f.mul_pointwise(phi).fourier().eval(eta));
      }
    }
  }
}

TEST_CASE("density_is_zero probes") {
  CHECK(density_is_zero(SBFunction::zero(3, 1), 2));
  const auto unit = SBFunction::indicator(Polydisc::unit(3, 1));
  CHECK(!density_is_zero(unit, 2));
  CHECK(density_is_zero(unit - unit, 3));
}

TEST_CASE("basis comparison finds witnesses") {
  const auto u = Distribution::density(SBFunction::indicator(Polydisc::unit(2, 1)));
  const auto v = Distribution::dirac(PAdicPoint::zero(2, 1));
  CHECK(dist_equal_on_basis(u, u, 2, Polydisc::unit(2, 1)).equal);
  const auto cmp = dist_equal_on_basis(u, v, 1, Polydisc::unit(2, 1));
  REQUIRE(!cmp.equal);
  REQUIRE(cmp.witness.has_value());
  // the witness replays to genuinely different values
  CHECK(u.pair_indicator(*cmp.witness) == cmp.lhs);
  CHECK(v.pair_indicator(*cmp.witness) == cmp.rhs);
  CHECK(cmp.lhs != cmp.rhs);
}

TEST_CASE("custom table atom reproduces the diagonal closed form") {
  const std::int64_t p = 2;
  std::vector<CustomAtom::TableEntry> entries;
  for (const auto& b : Polydisc::unit(p, 2).split(2)) {
    const auto v = Distribution::diagonal(p, 1).pair_indicator(b);
    if (!v.is_zero()) entries.push_back({b, v});
  }
  const auto table = Distribution::custom(p, 2, CustomAtom::from_table(p, 2, entries, 2));
  const auto diag = Distribution::diagonal(p, 1);
  const auto cmp = dist_equal_on_basis(table, diag, 2, Polydisc::unit(p, 2));
  CHECK(cmp.equal);
  CHECK(finitely_additive_on(table, Polydisc::unit(p, 2), 2));
}

TEST_CASE("built-in atoms are finitely additive to depth 3") {
  std::mt19937_64 rng(23);
  const std::vector<Distribution> us{
      Distribution::density(verify::random_sb(rng, 2, 2, 4, -1, 2)),
      Distribution::dirac(PAdicPoint(2, {make_rational(1, 2), Rational(1)})),
      Distribution::diagonal(2, 1)};
  for (const auto& u : us) {
    CHECK(finitely_additive_on(u, Polydisc::unit(2, 2), 3));
    CHECK(finitely_additive_on(u, ball(2, {Rational(0), Rational(0)}, -1), 2));
  }
}

TEST_CASE("custom atoms reject probes beyond their depth limit") {
  const auto atom = CustomAtom([](const Polydisc& b) {
    return CycScalar::from_rational(b.prime(), make_rational(1, 4));
  }, 1);
  const auto u = Distribution::custom(2, 1, atom);
  CHECK_NOTHROW(u.pair_indicator(ball(2, {Rational(0)}, 1)));
  CHECK_THROWS_AS(u.pair_indicator(ball(2, {Rational(0)}, 2)), std::domain_error);
  CHECK_THROWS_AS(u.pair(SBFunction::indicator(ball(2, {Rational(1)}, 2))),
                  std::domain_error);
}

TEST_CASE("custom tables must be disjoint and within depth") {
  std::vector<CustomAtom::TableEntry> overlapping{
      {Polydisc::unit(2, 1), CycScalar::one(2)},
      {ball(2, {Rational(0)}, 1), CycScalar::one(2)}};
  CHECK_THROWS_AS(CustomAtom::from_table(2, 1, overlapping, 2), std::invalid_argument);
  std::vector<CustomAtom::TableEntry> deep{{ball(2, {Rational(0)}, 3), CycScalar::one(2)}};
  CHECK_THROWS_AS(CustomAtom::from_table(2, 1, deep, 2), std::invalid_argument);
}

TEST_CASE("distribution shape validation") {
  CHECK_THROWS_AS(Distribution::diagonal(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(
      Distribution(3, 3, {{CycScalar::one(3), DiagonalAtom{1}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      Distribution(3, 1, {{CycScalar::one(2), DiracAtom{PAdicPoint::zero(3, 1),
                                                        CycScalar::one(3)}}}),
      std::invalid_argument);
}
