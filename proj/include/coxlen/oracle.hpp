#pragma once

// Brute-force verifiers that share no code path with the dimension formulas:
// reflection length by a bounded search over products of reflections,
// nullity by exhaustive partition search, root dimension by subset spans.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxlen/affgroup.hpp"
#include "coxlen/affsym.hpp"
#include "coxlen/rootsys.hpp"

namespace coxlen {

struct CertifiedLength {
  int length = -1;  // -1: no product of at most depth_bound reflections found
  bool certified = false;
  long level_bound = 0;
  int depth_bound = 0;
  int lower_bound = 0;   // dim(Mov w), raised by one when the parity disagrees
  std::string method;    // "lower-bound", "level-stable" or "uncertified"

  bool found() const { return length >= 0; }
};

/// Products of reflections (alpha, j) with |j| <= J, searched by meeting in
/// the middle: a ball of radius ceil(K/2) around the identity is built once
/// per (J, radius) and reused for every query.
class ReflectionOracle {
 public:
  explicit ReflectionOracle(const RootSystem& rs, std::size_t ball_cap = 4'000'000);
  ~ReflectionOracle();
  ReflectionOracle(const ReflectionOracle&) = delete;
  ReflectionOracle& operator=(const ReflectionOracle&) = delete;

  /// 1 + max |simple-coroot coordinate of the translation| * rank.
  long default_level_bound(const AffineElement& w) const;
  int default_depth_bound() const { return 2 * rs_.rank(); }

  /// Least k <= K such that w is a product of k reflections of level at most J.
  std::optional<int> search(const AffineElement& w, long J, int K);

  /// search() plus certification: the result is certified when it meets the
  /// dimension/parity lower bound, or when a rerun with J + 1 agrees.
  CertifiedLength length(const AffineElement& w, std::optional<long> J = {}, std::optional<int> K = {});

 private:
  struct Ball;
  using State = std::vector<std::int64_t>;

  State encode(const AffineElement& w) const;
  State multiply(const State& a, const State& b) const;
  State invert(const State& a) const;
  std::vector<std::int64_t> act(std::size_t u, const std::int64_t* coords) const;
  const Ball& ball(long J, int radius);

  const RootSystem& rs_;
  std::size_t ball_cap_;
  std::vector<std::vector<std::uint16_t>> perms_;  // W_0 as permutations of roots
  std::map<std::vector<std::uint16_t>, std::size_t> perm_index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::int64_t>> coroot_coords_;  // per root
  std::map<std::pair<long, int>, std::unique_ptr<Ball>> balls_;
};

CertifiedLength brute_reflection_length(const RootSystem& rs, const AffineElement& w, std::optional<long> J = {},
                                        std::optional<int> K = {});

/// Least dimension of a span of roots containing the affine subspace, by
/// trying every set of independent positive roots. Throws BudgetExceeded when
/// more than `cap` subsets would be examined.
int brute_root_dimension(const RootSystem& rs, const AffineSubspace& a, std::size_t cap = 5'000'000);

/// Largest number of blocks in a partition of [n] into zero-sum blocks, by
/// dynamic programming over all subsets. Needs n <= 12.
int brute_nullity(const IntVector& v);

}  // namespace coxlen
