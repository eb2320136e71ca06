#include <doctest.h>

#include "coxlen/errors.hpp"
#include "coxlen/oracle.hpp"
#include "coxlen/parse.hpp"
#include "coxlen/reflen.hpp"
#include "support.hpp"

using namespace coxlen;

TEST_CASE("oracle on small elements") {
  RootSystem b2(parse_type("B2"));
  ReflectionOracle oracle(b2);
  struct Row {
    const char* element;
    int length;
  };
  for (auto r : {Row{"identity", 0}, Row{"refl(2,1)", 1}, Row{"lambda=2,0", 2}, Row{"word=s1 s2; lambda=2,0", 2},
                 Row{"lambda=-2,-2; word=s1", 3}, Row{"lambda=4,2", 4}}) {
    CAPTURE(r.element);
    CertifiedLength c = oracle.length(parse_element(b2, r.element));
    CHECK(c.found());
    CHECK(c.certified);
    CHECK(c.length == r.length);
  }

  RootSystem a2(parse_type("A2"));
  CertifiedLength t = brute_reflection_length(a2, parse_element(a2, "lambda=1,-1,0"));
  CHECK(t.length == 2);
  CHECK(t.certified);
  CHECK(t.method == "lower-bound");
}

TEST_CASE("oracle search is monotone in the level bound") {
  RootSystem a2(parse_type("A2"));
  ReflectionOracle oracle(a2);
  AffineElement w = parse_element(a2, "coroot=3,-2; word=s1");
  std::optional<int> prev;
  for (long J = 0; J <= 5; ++J) {
    auto k = oracle.search(w, J, 4);
    if (prev) {
      REQUIRE(k.has_value());
      CHECK(*k <= *prev);
    }
    if (k) prev = k;
  }
  REQUIRE(prev.has_value());
  CHECK(*prev == dimension_report(a2, w).length);
  CHECK_FALSE(oracle.search(parse_element(a2, "coroot=2,2"), 5, 1).has_value());
}

TEST_CASE("oracle reports an unreachable bound honestly") {
  RootSystem b2(parse_type("B2"));
  CertifiedLength c = brute_reflection_length(b2, parse_element(b2, "lambda=4,2"), 3, 2);
  CHECK_FALSE(c.found());
  CHECK_FALSE(c.certified);
}

TEST_CASE("brute nullity") {
  CHECK(brute_nullity({-3, -2, -2, -1, 1, 2, 5}) == 3);
  CHECK(brute_nullity({0, 0, 0}) == 3);
  CHECK(brute_nullity({1, 2, -3}) == 1);
  CHECK(brute_nullity({}) == 0);
  CHECK_THROWS_AS(brute_nullity({1, 2}), ParseError);
  CHECK_THROWS_AS(brute_nullity(IntVector(13, 0)), BudgetExceeded);
  auto g = testsupport::make_rng(30);
  for (int k = 0; k < 60; ++k) {
    IntVector v(static_cast<std::size_t>(testsupport::uniform(g, 1, 8)));
    long s = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) s += (v[i] = testsupport::uniform(g, -5, 5));
    v.back() = -s;
    CHECK(brute_nullity(v) == testsupport::partition_nullity(v));
  }
}

TEST_CASE("brute root dimension") {
  RootSystem a2(parse_type("A2"));
  CHECK(brute_root_dimension(a2, AffineSubspace(zero_vector(3), {})) == 0);
  CHECK(brute_root_dimension(a2, AffineSubspace(from_longs({1, -1, 0}), {})) == 1);
  CHECK(brute_root_dimension(a2, AffineSubspace(from_longs({1, 1, -2}), {})) == 2);

  RootSystem b2(parse_type("B2"));
  AffineSubspace mov = move_set(parse_element(b2, "lambda=-2,-2; word=s1"));
  CHECK(brute_root_dimension(b2, mov) == 2);
  CHECK(brute_root_dimension(b2, move_set(parse_element(b2, "lambda=2,0"))) == 1);
}
