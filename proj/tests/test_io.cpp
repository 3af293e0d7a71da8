#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdk/io.hpp"
#include "pdk/verify.hpp"

#include <random>

using namespace pdk;

TEST_CASE("minimal file parses to the zero function") {
  const auto file = io::parse_expr_file(
      R"({"format_version":1,"p":2,"payload":{"kind":"sb","dim":1,"terms":[]}})");
  CHECK(file.p == 2);
  const auto* f = std::get_if<SBFunction>(&file.payload);
  REQUIRE(f != nullptr);
  CHECK(f->is_zero());
  CHECK(f->dim() == 1);
}

TEST_CASE("non p-power denominators are rejected with context") {
  const std::string text = R"({"format_version":1,"p":2,"payload":{"kind":"sb","dim":1,
    "terms":[{"coef":{"level":0,"coeffs":["1"]},
              "ball":{"alpha":0,"center":["1/6"]}}]}})";
  try {
    io::parse_expr_file(text);
    FAIL("expected a parse error");
  } catch (const io::ParseError& e) {
    CHECK(std::string(e.what()).find("non p-power denominator") != std::string::npos);
    CHECK(std::string(e.what()).find("terms[0]") != std::string::npos);
  }
}

TEST_CASE("schema violations carry paths") {
  CHECK_THROWS_AS(io::parse_expr_file("{"), io::ParseError);
  CHECK_THROWS_AS(io::parse_expr_file(R"({"format_version":2,"p":2,"payload":{}})"),
                  io::ParseError);
  CHECK_THROWS_AS(io::parse_expr_file(R"({"format_version":1,"p":4,"payload":{}})"),
                  io::ParseError);
  CHECK_THROWS_AS(
      io::parse_expr_file(R"({"format_version":1,"p":2,"payload":{"kind":"nope"}})"),
      io::ParseError);
  CHECK_THROWS_AS(
      io::parse_expr_file(
          R"({"format_version":1,"p":2,"payload":{"kind":"sb","dim":1}})"),
      io::ParseError);
}

TEST_CASE("emit then parse is the identity on canonical functions") {
  std::mt19937_64 rng(3);
  for (std::int64_t p : {2, 3}) {
    for (int i = 0; i < 20; ++i) {
      const auto f = verify::random_sb(rng, p, 1 + static_cast<std::int64_t>(i % 2), 4, -1, 2);
      const auto file = io::parse_expr_file(io::emit(f));
      const auto* g = std::get_if<SBFunction>(&file.payload);
      REQUIRE(g != nullptr);
      CHECK(*g == f);
      // emission is canonical, hence stable
      CHECK(io::emit(*g) == io::emit(f));
    }
  }
}

TEST_CASE("functions are canonicalized on load") {
  const std::string text = R"({"format_version":1,"p":2,"payload":{"kind":"sb","dim":1,
    "terms":[{"coef":{"level":0,"coeffs":["1"]},"ball":{"alpha":1,"center":["0"]}},
             {"coef":{"level":0,"coeffs":["1"]},"ball":{"alpha":1,"center":["1"]}}]}})";
  const auto file = io::parse_expr_file(text);
  const auto* f = std::get_if<SBFunction>(&file.payload);
  REQUIRE(f != nullptr);
  CHECK(*f == SBFunction::indicator(Polydisc::unit(2, 1)));
  CHECK(f->terms().size() == 1);
}

TEST_CASE("distributions round-trip through JSON") {
  std::mt19937_64 rng(7);
  std::vector<CustomAtom::TableEntry> entries;
  for (const auto& b : Polydisc::unit(2, 2).split(1)) {
    entries.push_back({b, CycScalar::from_rational(2, make_rational(1, 4))});
  }
  const Distribution u =
      Distribution::density(verify::random_sb(rng, 2, 2, 3, 0, 2)) +
      Distribution::dirac(PAdicPoint(2, {make_rational(1, 2), Rational(1)}),
                          CycScalar::root_of_unity(2, 2, 1)) +
      Distribution::diagonal(2, 1) +
      Distribution::custom(2, 2, CustomAtom::from_table(2, 2, entries, 3));
  const auto file = io::parse_expr_file(io::emit(u));
  const auto* v = std::get_if<Distribution>(&file.payload);
  REQUIRE(v != nullptr);
  REQUIRE(v->atoms().size() == u.atoms().size());
  const auto cmp = dist_equal_on_basis(u, *v, 2, Polydisc::unit(2, 2));
  CHECK(cmp.equal);
  CHECK(io::emit(*v) == io::emit(u));
}

TEST_CASE("kernels round-trip with their split") {
  const Kernel k(Distribution::diagonal(3, 1), 1, 1);
  const auto file = io::parse_expr_file(io::emit(k));
  const auto* k2 = std::get_if<Kernel>(&file.payload);
  REQUIRE(k2 != nullptr);
  CHECK(k2->n1() == 1);
  CHECK(k2->n2() == 1);
  CHECK(dist_equal_on_basis(k2->distribution(), k.distribution(), 2,
                            Polydisc::unit(3, 2))
            .equal);
}

TEST_CASE("queries and grids parse") {
  const std::string query_text = R"({"format_version":1,"p":3,"payload":{
    "kind":"query",
    "distribution":{"dim":1,"atoms":[{"weight":{"level":0,"coeffs":["1"]},
                                      "kind":"dirac","point":["0"]}]},
    "x0":["0"],"xi0":["1"],
    "lambda":{"ord_modulus":1,"ac_depth":0,"unit_residues":[]},
    "nbhd_radius":1,"probe_depth":2,"ord_floor":-3}})";
  const auto qfile = io::parse_expr_file(query_text);
  const auto* q = std::get_if<MicrolocalQuery>(&qfile.payload);
  REQUIRE(q != nullptr);
  CHECK(std::holds_alternative<NotSmoothWitness>(is_smooth_at(*q)));

  const std::string grid_text = R"({"format_version":1,"p":3,"payload":{
    "kind":"grid",
    "points":[{"x0":["0"],"xi0":["1"]},{"x0":["1"],"xi0":["1/3"]}],
    "lambda":{"ord_modulus":2,"ac_depth":1,"unit_residues":[1]},
    "nbhd_radius":1,"probe_depth":2,"ord_floor":-4}})";
  const auto gfile = io::parse_expr_file(grid_text);
  const auto* g = std::get_if<io::GridSpec>(&gfile.payload);
  REQUIRE(g != nullptr);
  CHECK(g->points.size() == 2);
  CHECK(g->lambda.ord_modulus() == 2);
}

TEST_CASE("mixed primes are rejected through the denominator rule") {
  // a coordinate with denominator 3 cannot live in a p = 2 file
  const std::string text = R"({"format_version":1,"p":2,"payload":{"kind":"sb","dim":1,
    "terms":[{"coef":{"level":0,"coeffs":["1"]},"ball":{"alpha":0,"center":["1/3"]}}]}})";
  CHECK_THROWS_AS(io::parse_expr_file(text), io::ParseError);
}

TEST_CASE("scalar rendering with approximation") {
  const auto s = CycScalar::root_of_unity(3, 1, 1);
  const auto plain = io::scalar_repr(s, false);
  CHECK(plain == "z3");
  const auto approx = io::scalar_repr(s, true);
  CHECK(approx.find("~") != std::string::npos);
  CHECK(approx.find("-0.5") != std::string::npos);
}
