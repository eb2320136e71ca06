#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxlen/affsym.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/oracle.hpp"
#include "support.hpp"

using namespace coxlen;

namespace {

const IntVector kV0{-3, -2, -2, -1, 1, 2, 5};

std::set<Block> as_set(const std::vector<BlockMask>& masks) {
  std::set<Block> out;
  for (auto m : masks) out.insert(to_block(m));
  return out;
}

}  // namespace

TEST_CASE("window normal form") {
  CHECK(window_to_normal_form(Window{{1, 2, 3}}) == WindowNormalForm{{0, 0, 0}, {1, 2, 3}});
  CHECK(window_to_normal_form(Window{{4, 2, 0}}) == WindowNormalForm{{1, 0, -1}, {1, 2, 3}});
  CHECK(window_to_normal_form(Window{{3, 5, -2}}) == WindowNormalForm{{0, 1, -1}, {3, 2, 1}});
  auto g = testsupport::make_rng(10);
  for (int k = 0; k < 200; ++k) {
    Window w = testsupport::random_window(5, -25, 25, g);
    CHECK(normal_form_to_window(window_to_normal_form(w)).values == w.values);
  }
  CHECK_THROWS_AS(window_to_normal_form(Window{{1, 4, 1}}), ParseError);
  CHECK_THROWS_AS(window_to_normal_form(Window{{2, 3, 4}}), ParseError);
}

TEST_CASE("cycles and block sums") {
  CHECK(cycles({4, 5, 1, 3, 2, 6}).blocks == std::vector<Block>{{1, 3, 4}, {2, 5}, {6}});
  CHECK(cycles({1, 2, 3}).size() == 3);
  CHECK(cycles({2, 3, 4, 1}).size() == 1);
  SetPartition p = make_partition({{1, 3}, {2, 4, 6}, {5}}, 6);
  CHECK(l_map(p, {-5, 2, 1, 0, 4, -2}) == IntVector{-4, 0, 4});
  CHECK(l_map(make_partition({{1}, {2}, {3}}, 3), {1, 2, -3}) == IntVector{1, 2, -3});
  CHECK_THROWS_AS(make_partition({{1, 2}, {2, 3}}, 3), ParseError);
  CHECK_THROWS_AS(make_partition({{1, 2}}, 3), ParseError);
}

TEST_CASE("embedding of a pure translation") {
  RootSystem a2 = affine_symmetric_root_system(3);
  AffineElement t = embed(window_to_normal_form(Window{{4, 2, 0}}));
  CHECK(t.linear == Matrix::identity(3));
  CHECK(t.translation == from_longs({1, 0, -1}));
  CHECK(a2.in_coroot_lattice(t.translation));
}

TEST_CASE("profiles of v0") {
  Profile pr = profiles(kV0);
  CHECK(pr.positive == std::vector<int>{5, 6, 7});
  CHECK(pr.negative == std::vector<int>{1, 2, 3, 4});
  CHECK(pr.positive_weight == 8);
  std::vector<std::size_t> diagonal;
  auto basic = basic_null_blocks(kV0);
  for (long i = 1; i < pr.positive_weight; ++i) diagonal.push_back(basic.count(i) ? basic.at(i).size() : 0);
  CHECK(diagonal == std::vector<std::size_t>{1, 2, 3, 0, 3, 2, 1});
  CHECK_THROWS_AS(profiles({1, 1}), ParseError);

  Profile small = profiles({1, -1});
  CHECK(small.pos.at(1) == std::vector<BlockMask>{0b01});
  CHECK(small.neg.at(1) == std::vector<BlockMask>{0b10});
}

TEST_CASE("proper basic null blocks of v0 agree with a subset scan") {
  std::size_t proper = 0;
  for (const auto& [w, blocks] : basic_null_blocks(kV0)) {
    if (w < 8) proper += blocks.size();
  }
  std::size_t scanned = 0;
  for (auto m : testsupport::exhaustive_null_blocks(kV0)) scanned += m != 0b1111111;
  CHECK(scanned == 12);
  CHECK(proper == scanned);
  auto basic = basic_null_blocks(kV0);
  std::set<Block> all;
  for (const auto& [w, blocks] : basic) {
    for (auto b : blocks) all.insert(to_block(b));
  }
  for (Block b : {Block{4, 5}, Block{2, 6}, Block{3, 6}, Block{1, 5, 6}, Block{1, 2, 7}}) CHECK(all.count(b) == 1);
}

TEST_CASE("complement of a proper null block is null") {
  auto g = testsupport::make_rng(11);
  for (int k = 0; k < 100; ++k) {
    IntVector v(7);
    long s = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) s += (v[i] = testsupport::uniform(g, -5, 5));
    v.back() = -s;
    const BlockMask full = (BlockMask{1} << v.size()) - 1;
    auto blocks = testsupport::exhaustive_null_blocks(v);
    std::set<BlockMask> set(blocks.begin(), blocks.end());
    for (auto b : blocks) {
      if (b != full) CHECK(set.count(full ^ b) == 1);
    }
  }
}

TEST_CASE("minimal null blocks") {
  std::set<Block> expected{{4, 5}, {2, 6}, {3, 6}, {1, 5, 6}, {1, 2, 7}, {1, 3, 7}, {2, 3, 4, 7}};
  CHECK(as_set(minimal_null_blocks(kV0)) == expected);
  CHECK(as_set(minimal_null_blocks({1, -1})) == std::set<Block>{{1, 2}});
  CHECK(as_set(minimal_null_blocks({1, 1, -1, -1})) == std::set<Block>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});

  // Against the definition: null blocks with no proper nonempty null subset.
  auto g = testsupport::make_rng(12);
  for (int k = 0; k < 100; ++k) {
    IntVector v(8);
    long s = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) s += (v[i] = testsupport::uniform(g, -4, 4));
    v.back() = -s;
    BlockMask zero = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) zero |= BlockMask{1} << i;
    }
    auto blocks = testsupport::exhaustive_null_blocks(v);
    std::set<Block> reference;
    for (auto b : blocks) {
      if (b & zero) continue;
      bool minimal = std::none_of(blocks.begin(), blocks.end(), [b](BlockMask c) { return c != b && (c & b) == c; });
      if (minimal) reference.insert(to_block(b));
    }
    CHECK(as_set(minimal_null_blocks(v)) == reference);
  }
}

TEST_CASE("null complex of v0") {
  NullComplex cx = null_complex(kV0);
  CHECK(cx.vertices.size() == 7);
  CHECK(cx.edges.size() == 7);
  CHECK(cx.triangle_count() == 2);
  CHECK(cx.nullity == 3);
  std::set<std::set<Block>> maximal;
  for (const auto& p : cx.maximal_partitions(7)) maximal.insert(std::set<Block>(p.blocks.begin(), p.blocks.end()));
  std::set<std::set<Block>> expected{{{1, 2, 7}, {3, 6}, {4, 5}}, {{1, 3, 7}, {2, 6}, {4, 5}}, {{1, 5, 6}, {2, 3, 4, 7}}};
  CHECK(maximal == expected);

  NullComplex one = null_complex({1, -1});
  CHECK(one.vertices.size() == 1);
  CHECK(one.nullity == 1);
  CHECK_THROWS_AS(null_complex(kV0, 3), BudgetExceeded);
}

TEST_CASE("nullity examples") {
  CHECK(nullity(kV0) == 3);
  CHECK(nullity({0, 0, 0, 0}) == 4);
  CHECK(nullity({1, 1, -1, -1}) == 2);
  CHECK(nullity({1, 2, -3}) == 1);
  CHECK(nullity({1, 0, -1}) == 2);
  CHECK(nullity({}) == 0);
}

TEST_CASE("nullity agrees with partition enumeration") {
  auto g = testsupport::make_rng(13);
  for (int k = 0; k < 150; ++k) {
    const auto n = static_cast<std::size_t>(testsupport::uniform(g, 1, 9));
    IntVector v(n);
    long s = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) s += (v[i] = testsupport::uniform(g, -6, 6));
    v.back() = -s;
    CAPTURE(v);
    CHECK(nullity(v) == testsupport::partition_nullity(v));
  }
}

TEST_CASE("relative nullity") {
  CHECK(relative_nullity({1, -1, 2, -2}, {2, 1, 4, 3}) == 2);
  CHECK(relative_nullity({1, 1, -1, -1}, {2, 1, 4, 3}) == 1);
  CHECK(relative_nullity(kV0, {1, 2, 3, 4, 5, 6, 7}) == 3);
  auto g = testsupport::make_rng(14);
  for (int k = 0; k < 100; ++k) {
    Window w = testsupport::random_window(6, -30, 30, g);
    WindowNormalForm nf = window_to_normal_form(w);
    CHECK(relative_nullity(nf.lambda, nf.pi) == testsupport::coarsening_nullity(nf.lambda, cycles(nf.pi)));
  }
}

TEST_CASE("cycle and nullity formula") {
  CHECK(reflection_length_affsym(Window{{1, 2, 3}}) == 0);
  // lambda = (1,0,-1) is the highest coroot, so t_lambda has length 2.
  CHECK(reflection_length_affsym(Window{{4, 2, 0}}) == 2);
  WindowNormalForm t0{kV0, {1, 2, 3, 4, 5, 6, 7}};
  CHECK(reflection_length_affsym(normal_form_to_window(t0)) == 8);
  WindowNormalForm ell{{1, -1, 2, -2}, {2, 1, 4, 3}};
  Window we = normal_form_to_window(ell);
  CHECK(reflection_length_affsym(we) == 2);
  RootSystem a3 = affine_symmetric_root_system(4);
  DimensionReport rep = dimension_report(a3, embed(ell));
  CHECK(rep.d == 0);
  CHECK(rep.length == 2);
}

TEST_CASE("M-space membership: ker L_P is the span of block-supported zero-sum vectors") {
  auto g = testsupport::make_rng(15);
  for (int k = 0; k < 200; ++k) {
    Window w = testsupport::random_window(5, -10, 10, g);
    SetPartition p = cycles(window_to_normal_form(w).pi);
    IntVector v(5);
    long s = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) s += (v[i] = testsupport::uniform(g, -3, 3));
    v.back() = -s;
    IntVector sums = l_map(p, v);
    bool in_m = true;
    for (const auto& b : p.blocks) {
      long t = 0;
      for (int i : b) t += v[static_cast<std::size_t>(i - 1)];
      in_m = in_m && t == 0;
    }
    CHECK(in_m == std::all_of(sums.begin(), sums.end(), [](long x) { return x == 0; }));
  }
}

TEST_CASE("good origin split") {
  GoodOriginSplit id = good_origin_split(Window{{1, 2, 3}});
  CHECK(is_zero(id.origin));
  CHECK(id.length == 0);
  GoodOriginSplit t = good_origin_split(Window{{4, 2, 0}});
  CHECK(t.elliptic == AffineElement::identity(3));
  CHECK(t.translation_length == 2);
  WindowNormalForm ell{{1, -1, 2, -2}, {2, 1, 4, 3}};
  GoodOriginSplit e = good_origin_split(normal_form_to_window(ell));
  CHECK(e.translation == AffineElement::identity(4));
  CHECK(e.elliptic_length == 2);
  CHECK(e.elliptic.apply(e.origin) == e.origin);

  auto g = testsupport::make_rng(16);
  for (int k = 0; k < 30; ++k) {
    Window w = testsupport::random_window(4, -12, 12, g);
    GoodOriginSplit s = good_origin_split(w);
    CHECK(s.length == reflection_length_affsym(w));
    CHECK(s.translation_length + s.elliptic_length == s.length);
    CHECK(s.elliptic.apply(s.origin) == s.origin);
  }
}

TEST_CASE("zero-sum subset detector") {
  CHECK(has_zero_sum_subset({3, -1, -2, 7}));
  CHECK_FALSE(has_zero_sum_subset({1, 2, 4}));
  CHECK(has_zero_sum_subset({0}));
  CHECK_FALSE(has_zero_sum_subset({}));
}
