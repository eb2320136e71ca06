#pragma once

// Combinatorics of the affine symmetric group: window notation, cycle
// partitions, block-sum maps, null blocks and the nullity of integer vectors,
// and the cycle/nullity formula for reflection length.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxlen/affgroup.hpp"
#include "coxlen/reflen.hpp"

namespace coxlen {

using IntVector = std::vector<long>;
/// One-line notation of a permutation of [n], values 1..n.
using Permutation = std::vector<int>;
/// A subset of [n] as a sorted list of 1-based indices.
using Block = std::vector<int>;
/// A subset of [n] as a bit mask, bit i standing for index i+1.
using BlockMask = std::uint64_t;

Block to_block(BlockMask mask);
BlockMask to_mask(const Block& block);
std::string to_string(const Block& block);

/// Partition of [n]; blocks sorted internally and ordered by minimum element.
struct SetPartition {
  std::vector<Block> blocks;

  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Canonicalises and validates (disjoint, nonempty, covering [n]).
SetPartition make_partition(std::vector<Block> blocks, int n);

struct Window {
  IntVector values;
};

struct WindowNormalForm {
  IntVector lambda;  // zero-sum integer vector
  Permutation pi;

  friend bool operator==(const WindowNormalForm&, const WindowNormalForm&) = default;
};

/// Throws ParseError naming the violated condition.
void validate_window(const Window& w);
/// values = one-line(pi) + n * lambda.
WindowNormalForm window_to_normal_form(const Window& w);
Window normal_form_to_window(const WindowNormalForm& nf);
/// t_lambda u_pi acting on Q^n, where u_pi(v)_i = v_{pi(i)}.
AffineElement embed(const WindowNormalForm& nf);

SetPartition cycles(const Permutation& pi);
/// Block sums of v, blocks in canonical order.
IntVector l_map(const SetPartition& p, const IntVector& v);

/// Positive and negative profiles: subsets of the positive (negative) support
/// bucketed by the absolute value of their coordinate sum.
struct Profile {
  std::vector<int> positive;  // X
  std::vector<int> negative;  // Y
  std::vector<int> zero;      // Z
  long positive_weight = 0;   // v_X
  std::map<long, std::vector<BlockMask>> pos;
  std::map<long, std::vector<BlockMask>> neg;

  std::size_t pos_count(long i) const;
  std::size_t neg_count(long i) const;
};

/// Throws ParseError when v does not sum to zero.
Profile profiles(const IntVector& v);

/// Null blocks avoiding the zero coordinates, keyed by positive weight 1..v_X.
std::map<long, std::vector<BlockMask>> basic_null_blocks(const IntVector& v);

/// Minimal null blocks avoiding the zero coordinates (the zero coordinates are
/// the remaining minimal null blocks, as singletons). Found by the
/// weight-ordered sweep: confirm a bucket, drop every later superset.
std::vector<BlockMask> minimal_null_blocks(const IntVector& v);

/// Flag complex on the minimal null blocks, edges joining disjoint blocks.
struct NullComplex {
  std::vector<Block> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> maximal_cliques;
  std::vector<Block> zero_blocks;
  int nullity = 0;

  std::size_t triangle_count() const;
  /// Maximal cliques completed by the zero singletons, as set partitions.
  std::vector<SetPartition> maximal_partitions(int n) const;
};

NullComplex null_complex(const IntVector& v, std::size_t clique_cap = 64);
int nullity(const IntVector& v);
/// Nullity of the block sums of lambda over the cycles of pi.
int relative_nullity(const IntVector& lambda, const Permutation& pi);
/// n - 2 nu(lambda/pi) + |cyc(pi)|.
int reflection_length_affsym(const Window& w);

/// Whether some nonempty sub-multiset sums to zero, decided as nu(a, -sum a) >= 2.
bool has_zero_sum_subset(const IntVector& values);

struct GoodOriginSplit {
  Vector origin;                 // vertex fixed by the elliptic factor
  AffineElement translation;     // t_mu
  AffineElement elliptic;        // u, fixing origin
  int translation_length = 0;
  int elliptic_length = 0;
  int length = 0;
};

/// Translation-elliptic split of the embedded window together with a vertex
/// fixed by the elliptic factor, usable as origin of a normal form whose two
/// parts have lengths 2d and e.
GoodOriginSplit good_origin_split(const Window& w, const ReflenConfig& config = {});

/// Root system A_{n-1} realised in Q^n.
RootSystem affine_symmetric_root_system(int n);

}  // namespace coxlen
