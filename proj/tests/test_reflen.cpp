#include <doctest.h>

#include "coxlen/errors.hpp"
#include "coxlen/genfun.hpp"
#include "coxlen/parse.hpp"
#include "coxlen/reflen.hpp"
#include "support.hpp"

using namespace coxlen;

namespace {

Vector vec(std::initializer_list<long> xs) { return from_longs(std::vector<long>(xs)); }

}  // namespace

TEST_CASE("five kinds of plane isometries") {
  RootSystem b2(parse_type("B2"));
  struct Row {
    const char* element;
    int d, e, length;
  };
  for (auto r : {Row{"identity", 0, 0, 0}, Row{"refl(1,3)", 0, 1, 1}, Row{"word=s1 s2; lambda=2,0", 0, 2, 2},
                 Row{"lambda=2,0", 1, 0, 2}, Row{"lambda=2,2", 1, 0, 2}, Row{"lambda=4,2", 2, 0, 4},
                 Row{"lambda=-2,-2; word=s1", 1, 1, 3}, Row{"lambda=-2,-2; word=s1 s2 s1", 1, 1, 3}}) {
    CAPTURE(r.element);
    DimensionReport rep = dimension_report(b2, parse_element(b2, r.element));
    CHECK(rep.d == r.d);
    CHECK(rep.e == r.e);
    CHECK(rep.length == r.length);
    CHECK(rep.dim == r.d + r.e);
  }
}

TEST_CASE("translations along a coroot line have length two") {
  RootSystem a2(parse_type("A2"));
  DimensionReport rep = dimension_report(a2, AffineElement::translation_by(vec({1, -1, 0})));
  CHECK(rep.d == 1);
  CHECK(rep.e == 0);
  CHECK(rep.length == 2);
  CHECK(rep.witness_roots.size() == 1);
}

TEST_CASE("witness roots span a root subspace containing the move set") {
  auto g = testsupport::make_rng(1);
  for (const char* t : {"A3", "B3", "G2"}) {
    RootSystem rs(parse_type(t));
    SphericalGroup w0 = enumerate_w0(rs);
    for (int k = 0; k < 40; ++k) {
      AffineElement w = testsupport::random_element(rs, w0, 2, g);
      DimensionReport rep = dimension_report(rs, w);
      LinearSpan span(rs.ambient_dim());
      for (auto i : rep.witness_roots) span.add(rs.root(i));
      CHECK(static_cast<int>(span.dim()) == rep.dim);
      AffineSubspace mov = move_set(w);
      CHECK(span.contains(mov.base()));
      for (const auto& d : mov.directions()) CHECK(span.contains(d));
    }
  }
}

TEST_CASE("elliptic factorizations") {
  RootSystem b2(parse_type("B2"));
  AffineElement rot = parse_element(b2, "word=s1 s2; lambda=2,0");
  ReflectionFactorization f = factor_elliptic(b2, rot);
  CHECK(f.size() == 2);
  CHECK(f.product(2) == rot);
  CHECK_THROWS_AS(factor_elliptic(b2, parse_element(b2, "lambda=2,0")), DomainError);
}

TEST_CASE("minimum factorizations have length 2d + e") {
  auto g = testsupport::make_rng(2);
  for (const char* t : {"A2", "B2", "C3", "G2", "D4"}) {
    RootSystem rs(parse_type(t));
    SphericalGroup w0 = enumerate_w0(rs);
    for (int k = 0; k < 25; ++k) {
      AffineElement w = testsupport::random_element(rs, w0, 3, g);
      ReflectionFactorization f = min_factorization(rs, w);
      CHECK(static_cast<int>(f.size()) == dimension_report(rs, w).length);
      CHECK(f.product(rs.ambient_dim()) == w);
    }
  }
}

TEST_CASE("Hurwitz moves preserve the product") {
  RootSystem g2(parse_type("G2"));
  auto g = testsupport::make_rng(3);
  ReflectionFactorization f;
  for (int i = 0; i < 4; ++i) f.factors.push_back(testsupport::random_reflection(g2, 3, g));
  const AffineElement p = f.product(3);
  for (std::size_t i = 1; i < f.size(); ++i) {
    CHECK(hurwitz_move(g2, f, i, HurwitzDirection::Left).product(3) == p);
    CHECK(hurwitz_move(g2, f, i, HurwitzDirection::Right).product(3) == p);
  }
  CHECK_THROWS_AS(hurwitz_move(g2, f, 0, HurwitzDirection::Left), DomainError);
  CHECK_THROWS_AS(hurwitz_move(g2, f, 4, HurwitzDirection::Left), DomainError);
}

TEST_CASE("translation-elliptic splits") {
  RootSystem b2(parse_type("B2"));
  AffineElement glide = parse_element(b2, "lambda=-2,-2; word=s1");
  TranslationEllipticSplit s = translation_elliptic_split(b2, glide);
  CHECK(is_translation(s.translation));
  CHECK(is_elliptic(s.elliptic));
  CHECK(s.translation * s.elliptic == glide);
  CHECK(dimension_report(b2, s.translation).length == 2);
  CHECK(dimension_report(b2, s.elliptic).length == 1);

  ReflenConfig tiny;
  tiny.hurwitz_budget = 1;
  RootSystem a3(parse_type("A3"));
  SphericalGroup w0 = enumerate_w0(a3);
  auto g = testsupport::make_rng(4);
  bool hit = false;
  for (int k = 0; k < 30 && !hit; ++k) {
    try {
      translation_elliptic_split(a3, testsupport::random_element(a3, w0, 2, g), tiny);
    } catch (const BudgetExceeded&) {
      hit = true;
    }
  }
  CHECK(hit);
}

TEST_CASE("rescaled roots give the same lengths") {
  RootSystemSpec spec{Family::B, 2};
  RootSystem standard(spec);
  // Same root lines, different lengths.
  RootSystem doubled(spec, {vec({2, -2}), vec({0, 2})});
  RootSystem swapped(spec, {vec({1, -1}), vec({0, 2})});
  SphericalGroup w0 = enumerate_w0(standard);
  auto g = testsupport::make_rng(5);
  for (int k = 0; k < 50; ++k) {
    AffineElement w = testsupport::random_element(standard, w0, 2, g);
    const DimensionReport rep = dimension_report(standard, w);
    CHECK(dimension_report(doubled, w).length == rep.length);
    CHECK(dimension_report(swapped, w).d == rep.d);
    CHECK(dimension_report(swapped, w).length == rep.length);
  }
}

TEST_CASE("flat cap is enforced") {
  RootSystem a4(parse_type("A4"));
  ReflenConfig cfg;
  cfg.flat_cap = 2;
  CHECK_THROWS_AS(dimension_report(a4, AffineElement::translation_by(a4.from_coroot_coordinates({1, 3, -2, 5})), cfg),
                  BudgetExceeded);
}
