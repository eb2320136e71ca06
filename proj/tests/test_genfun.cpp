#include <doctest.h>

#include <set>

#include "coxlen/errors.hpp"
#include "coxlen/genfun.hpp"
#include "coxlen/parse.hpp"
#include "support.hpp"

using namespace coxlen;

namespace {

using BP = BivariatePolynomial;

BP s_plus(long e) { return BP::monomial(1, 0) + BP::monomial(0, 1, e); }
BP one_plus(long e) { return BP::monomial(0, 0) + BP::monomial(0, 1, e); }

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  CHECK(Polynomial::shephard_todd({1, 2}).to_string() == "1 + 3*t + 2*t^2");
  CHECK((s_plus(1) * s_plus(2)).to_string() == "2*t^2 + 3*s*t + s^2");
  BP p = BP::monomial(0, 1, -2) + BP::monomial(1, 0);
  CHECK(p.to_string() == "-2*t + s");
  CHECK(BP().to_string() == "0");
  for (const char* text : {"1 + 3*t + 2*t^2", "2*t^2 + 6*t^3 + 4*s*t + 9*s*t^2 + s^2 + 2*s^2*t", "-2*t + s", "0", "7"}) {
    CHECK(BP::parse(text).to_string() == text);
  }
  CHECK(BP::parse("s + t") == s_plus(1));
  CHECK_THROWS_AS(BP::parse("1 + x"), ParseError);
}

TEST_CASE("specialisation s = t^2") {
  CHECK(s_plus(1).specialize() == Polynomial::monomial(1) + Polynomial::monomial(2));
  Polynomial expect;
  expect.add_term(3, 6);
  expect.add_term(4, 11);
  expect.add_term(5, 6);
  expect.add_term(6, 1);
  CHECK(BP::linear_product({1, 2, 3}, true).specialize() == expect);
}

TEST_CASE("spherical generating function factors over the exponents") {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) {
    CAPTURE(t);
    RootSystem rs(parse_type(t));
    SphericalGroup g = enumerate_w0(rs);
    CHECK(static_cast<long>(g.size()) == rs.w0_order());
    CHECK(spherical_genfun(g) == Polynomial::shephard_todd(rs.exponents()));
  }
  CHECK_THROWS_AS(enumerate_w0(RootSystem(parse_type("B3")), 10), BudgetExceeded);
}

TEST_CASE("rank two table") {
  struct Row {
    const char* type;
    int e;
  };
  for (auto r : {Row{"A2", 2}, Row{"B2", 3}, Row{"G2", 5}}) {
    CAPTURE(r.type);
    RootSystem rs(parse_type(r.type));
    GenfunEngine engine(rs);
    CHECK(engine.local_genfun(zero_vector(rs.ambient_dim())) == one_plus(1) * one_plus(r.e));
    for (const auto& c : rs.simple_coroots()) CHECK(engine.local_genfun(c) == s_plus(1) * one_plus(r.e));
    const Vector generic = rs.from_coroot_coordinates({1, 4});
    REQUIRE(engine.is_generic(generic));
    CHECK(engine.local_genfun(generic) == s_plus(1) * s_plus(r.e));
  }
}

TEST_CASE("A3 classes") {
  RootSystem a3(parse_type("A3"));
  auto classes = classify_coroots(a3, 2);
  std::set<BP> got;
  for (const auto& c : classes) got.insert(c.polynomial);
  std::set<BP> expected{
      one_plus(1) * one_plus(2) * one_plus(3),
      s_plus(1) * one_plus(2) * one_plus(3),
      BP::parse("2*t^2 + 6*t^3 + 4*s*t + 9*s*t^2 + s^2 + 2*s^2*t"),
      s_plus(1) * s_plus(2) * one_plus(3),
      s_plus(1) * BP::parse("t + 6*t^2 + s + 4*s*t"),
      s_plus(1) * s_plus(2) * s_plus(3),
  };
  CHECK(classes.size() == 6);
  CHECK(got == expected);
  CHECK(classes.front().points.front() == std::vector<long>{0, 0, 0});
  CHECK(classes.front().polynomial == one_plus(1) * one_plus(2) * one_plus(3));
  CHECK(local_genfun(a3, a3.from_coroot_coordinates({1, 0, 1})) ==
        BP::parse("2*t^2 + 6*t^3 + 4*s*t + 9*s*t^2 + s^2 + 2*s^2*t"));
}

TEST_CASE("local generating function properties") {
  auto g = testsupport::make_rng(20);
  for (const char* t : {"A2", "B2", "G2", "A3", "B3"}) {
    CAPTURE(t);
    RootSystem rs(parse_type(t));
    GenfunEngine engine(rs);
    const BP f0 = engine.local_genfun(zero_vector(rs.ambient_dim()));
    CHECK_FALSE(f0.depends_on_s());
    CHECK(f0.specialize() == spherical_genfun(engine.group()));
    const BP generic = BP::linear_product(rs.exponents(), true);
    for (int k = 0; k < 12; ++k) {
      std::vector<long> c(static_cast<std::size_t>(rs.rank()));
      for (auto& x : c) x = testsupport::uniform(g, -3, 3);
      const Vector lambda = rs.from_coroot_coordinates(c);
      const BP f = engine.local_genfun(lambda);
      CHECK(f.evaluate_sum() == rs.w0_order());
      CHECK(f.specialize().degree() <= 2 * rs.rank());
      if (engine.is_generic(lambda)) CHECK(f == generic);
      const auto& u = engine.group().elements[static_cast<std::size_t>(
          testsupport::uniform(g, 0, static_cast<long>(engine.group().size()) - 1))];
      CHECK(engine.local_genfun(u * lambda) == f);
      CHECK(engine.local_genfun(engine.dominant(lambda)) == f);
      // lambda and 2 lambda lie in the same root subspaces.
      CHECK(engine.local_genfun(Rational(2) * lambda) == f);
    }
  }
  RootSystem b2(parse_type("B2"));
  CHECK_THROWS_AS(local_genfun(b2, from_longs({1, 0})), DomainError);
}
