#pragma once

// Helpers shared by the test programs: seeded random elements and windows,
// and small exhaustive reference computations written independently of the
// library code they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "coxlen/affsym.hpp"
#include "coxlen/genfun.hpp"
#include "coxlen/reflen.hpp"
#include "coxlen/rootsys.hpp"

namespace testsupport {

using namespace coxlen;

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed2026ULL + salt); }

inline long uniform(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

/// t_lambda u with lambda's simple-coroot coordinates in [-r, r].
inline AffineElement random_element(const RootSystem& rs, const SphericalGroup& w0, long r, std::mt19937_64& g) {
  std::vector<long> c(static_cast<std::size_t>(rs.rank()));
  for (auto& x : c) x = uniform(g, -r, r);
  const auto& u = w0.elements[static_cast<std::size_t>(uniform(g, 0, static_cast<long>(w0.size()) - 1))];
  return {u, rs.from_coroot_coordinates(c)};
}

inline AffineReflection random_reflection(const RootSystem& rs, long J, std::mt19937_64& g) {
  const auto& pos = rs.positive_roots();
  auto i = pos[static_cast<std::size_t>(uniform(g, 0, static_cast<long>(pos.size()) - 1))];
  return {rs.root(i), uniform(g, -J, J)};
}

/// A valid window of size n with every value in [lo, hi].
inline Window random_window(int n, long lo, long hi, std::mt19937_64& g) {
  Permutation pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  while (true) {
    std::shuffle(pi.begin(), pi.end(), g);
    Window w;
    long sum = 0;
    for (int i = 0; i < n; ++i) {
      const long p = pi[static_cast<std::size_t>(i)];
      long lmn = (lo - p) / n - 1;
      while (p + n * lmn < lo) ++lmn;
      long lmx = lmn;
      while (p + n * (lmx + 1) <= hi) ++lmx;
      const long l = uniform(g, lmn, lmx);
      sum += l;
      w.values.push_back(p + n * l);
    }
    if (sum == 0) return w;
  }
}

/// Calls f(labels, block_count) for every set partition of {0..n-1}, given
/// as a restricted growth string.
template <class F>
void for_each_set_partition(int n, F&& f) {
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      f(labels, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      labels[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    f(labels, 0);
    return;
  }
  rec(rec, 0, 0);
}

/// Largest number of zero-sum blocks over all set partitions.
inline int partition_nullity(const IntVector& v) {
  const int n = static_cast<int>(v.size());
  int best = 0;
  for_each_set_partition(n, [&](const std::vector<int>& labels, int blocks) {
    std::vector<long> sums(static_cast<std::size_t>(blocks), 0);
    for (int i = 0; i < n; ++i) sums[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])] += v[static_cast<std::size_t>(i)];
    if (std::all_of(sums.begin(), sums.end(), [](long s) { return s == 0; })) best = std::max(best, blocks);
  });
  return best;
}

/// Same, restricted to partitions that coarsen the given one.
inline int coarsening_nullity(const IntVector& v, const SetPartition& p) {
  const int k = static_cast<int>(p.size());
  int best = 0;
  for_each_set_partition(k, [&](const std::vector<int>& labels, int blocks) {
    std::vector<long> sums(static_cast<std::size_t>(blocks), 0);
    for (int b = 0; b < k; ++b) {
      for (int i : p.blocks[static_cast<std::size_t>(b)]) {
        sums[static_cast<std::size_t>(labels[static_cast<std::size_t>(b)])] += v[static_cast<std::size_t>(i - 1)];
      }
    }
    if (std::all_of(sums.begin(), sums.end(), [](long s) { return s == 0; })) best = std::max(best, blocks);
  });
  return best;
}

inline bool exhaustive_zero_subset(const IntVector& a) {
  const std::size_t n = a.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) s += a[i];
    }
    if (s == 0) return true;
  }
  return false;
}

/// Every subset of [n] with zero coordinate sum, as masks.
inline std::vector<BlockMask> exhaustive_null_blocks(const IntVector& v) {
  std::vector<BlockMask> out;
  const std::size_t n = v.size();
  for (BlockMask mask = 1; mask < (BlockMask{1} << n); ++mask) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) s += v[i];
    }
    if (s == 0) out.push_back(mask);
  }
  return out;
}

}  // namespace testsupport
