#include "coxlen/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <boost/functional/hash.hpp>

#include "coxlen/errors.hpp"

namespace coxlen {

namespace {

struct StateHash {
  std::size_t operator()(const std::vector<std::int64_t>& s) const { return boost::hash_range(s.begin(), s.end()); }
};

}  // namespace

struct ReflectionOracle::Ball {
  std::unordered_map<State, int, StateHash> dist;
  std::vector<State> order;  // nondecreasing distance
};

ReflectionOracle::ReflectionOracle(const RootSystem& rs, std::size_t ball_cap) : rs_(rs), ball_cap_(ball_cap) {
  const std::size_t m = rs.size();
  std::vector<std::vector<std::uint16_t>> gens;
  for (auto s : rs.simple_indices()) {
    std::vector<std::uint16_t> p(m);
    for (std::size_t j = 0; j < m; ++j) p[j] = static_cast<std::uint16_t>(rs.reflect(s, j));
    gens.push_back(std::move(p));
  }
  std::vector<std::uint16_t> id(m);
  std::iota(id.begin(), id.end(), 0);
  perms_.push_back(id);
  perm_index_[id] = 0;
  for (std::size_t head = 0; head < perms_.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<std::uint16_t> p(m);
      for (std::size_t j = 0; j < m; ++j) p[j] = perms_[head][g[j]];
      if (perm_index_.emplace(p, perms_.size()).second) perms_.push_back(std::move(p));
    }
  }
  inverse_.resize(perms_.size());
  for (std::size_t u = 0; u < perms_.size(); ++u) {
    std::vector<std::uint16_t> inv(m);
    for (std::size_t j = 0; j < m; ++j) inv[perms_[u][j]] = static_cast<std::uint16_t>(j);
    inverse_[u] = perm_index_.at(inv);
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto c = rs.coroot_coordinates(rs.coroot(i));
    if (!c) throw InternalError("coroot outside the coroot lattice");
    coroot_coords_.emplace_back(c->begin(), c->end());
  }
}

ReflectionOracle::~ReflectionOracle() = default;

std::vector<std::int64_t> ReflectionOracle::act(std::size_t u, const std::int64_t* coords) const {
  const auto n = static_cast<std::size_t>(rs_.rank());
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (coords[j] == 0) continue;
    const auto& img = coroot_coords_[perms_[u][rs_.simple_indices()[j]]];
    for (std::size_t k = 0; k < n; ++k) out[k] += coords[j] * img[k];
  }
  return out;
}

ReflectionOracle::State ReflectionOracle::multiply(const State& a, const State& b) const {
  const auto u = static_cast<std::size_t>(a[0]);
  const auto v = static_cast<std::size_t>(b[0]);
  const std::size_t m = rs_.size();
  std::vector<std::uint16_t> p(m);
  for (std::size_t j = 0; j < m; ++j) p[j] = perms_[u][perms_[v][j]];
  State out{static_cast<std::int64_t>(perm_index_.at(p))};
  auto moved = act(u, b.data() + 1);
  for (std::size_t k = 0; k < moved.size(); ++k) out.push_back(a[k + 1] + moved[k]);
  return out;
}

ReflectionOracle::State ReflectionOracle::invert(const State& a) const {
  const std::size_t ui = inverse_[static_cast<std::size_t>(a[0])];
  auto moved = act(ui, a.data() + 1);
  State out{static_cast<std::int64_t>(ui)};
  for (auto x : moved) out.push_back(-x);
  return out;
}

ReflectionOracle::State ReflectionOracle::encode(const AffineElement& w) const {
  validate_element(rs_, w);
  const std::size_t m = rs_.size();
  std::vector<std::uint16_t> p(m);
  for (std::size_t j = 0; j < m; ++j) {
    auto idx = rs_.index_of(w.linear * rs_.root(j));
    if (!idx) throw ParseError("linear part does not permute the roots");
    p[j] = static_cast<std::uint16_t>(*idx);
  }
  auto c = rs_.coroot_coordinates(w.translation);
  if (!c) throw ParseError("translation is not in the coroot lattice");
  State s{static_cast<std::int64_t>(perm_index_.at(p))};
  s.insert(s.end(), c->begin(), c->end());
  return s;
}

const ReflectionOracle::Ball& ReflectionOracle::ball(long J, int radius) {
  auto& slot = balls_[{J, radius}];
  if (slot) return *slot;
  const auto n = static_cast<std::size_t>(rs_.rank());

  std::vector<State> reflections;
  for (auto i : rs_.positive_roots()) {
    const std::size_t s = perm_index_.at([&] {
      std::vector<std::uint16_t> p(rs_.size());
      for (std::size_t j = 0; j < rs_.size(); ++j) p[j] = static_cast<std::uint16_t>(rs_.reflect(i, j));
      return p;
    }());
    for (long j = -J; j <= J; ++j) {
      State r{static_cast<std::int64_t>(s)};
      for (std::size_t k = 0; k < n; ++k) r.push_back(j * coroot_coords_[i][k]);
      reflections.push_back(std::move(r));
    }
  }

  auto b = std::make_unique<Ball>();
  State id(n + 1, 0);
  b->dist[id] = 0;
  b->order.push_back(id);
  std::size_t layer_begin = 0;
  for (int d = 1; d <= radius; ++d) {
    const std::size_t layer_end = b->order.size();
    for (std::size_t at = layer_begin; at < layer_end; ++at) {
      for (const auto& r : reflections) {
        State next = multiply(b->order[at], r);
        if (!b->dist.emplace(next, d).second) continue;
        b->order.push_back(std::move(next));
        if (b->order.size() > ball_cap_) {
          throw BudgetExceeded("reflection ball exceeded the cap of " + std::to_string(ball_cap_) + " elements");
        }
      }
    }
    layer_begin = layer_end;
  }
  slot = std::move(b);
  return *slot;
}

long ReflectionOracle::default_level_bound(const AffineElement& w) const {
  auto c = rs_.coroot_coordinates(w.translation);
  if (!c) throw ParseError("translation is not in the coroot lattice");
  long m = 0;
  for (long x : *c) m = std::max(m, std::labs(x));
  return 1 + m * rs_.rank();
}

std::optional<int> ReflectionOracle::search(const AffineElement& w, long J, int K) {
  if (J < 0 || K < 0) throw ParseError("level and depth bounds must be non-negative");
  const State target = encode(w);
  const Ball& b = ball(J, (K + 1) / 2);
  std::optional<int> best;
  for (const auto& a : b.order) {
    const int i = b.dist.at(a);
    if (best && i >= *best) break;
    auto it = b.dist.find(multiply(invert(a), target));
    if (it == b.dist.end()) continue;
    const int k = i + it->second;
    if (k <= K && (!best || k < *best)) best = k;
  }
  return best;
}

CertifiedLength ReflectionOracle::length(const AffineElement& w, std::optional<long> J, std::optional<int> K) {
  CertifiedLength out;
  out.level_bound = J.value_or(default_level_bound(w));
  out.depth_bound = K.value_or(default_depth_bound());
  out.method = "uncertified";

  const int dim = brute_root_dimension(rs_, move_set(w));
  const int parity = sgn(determinant(w.linear)) < 0 ? 1 : 0;
  out.lower_bound = dim % 2 == parity ? dim : dim + 1;

  auto k = search(w, out.level_bound, out.depth_bound);
  if (!k) return out;
  out.length = *k;
  if (*k == out.lower_bound) {
    out.certified = true;
    out.method = "lower-bound";
    return out;
  }
  auto again = search(w, out.level_bound + 1, out.depth_bound);
  if (again && *again == *k) {
    out.certified = true;
    out.method = "level-stable";
  }
  return out;
}

CertifiedLength brute_reflection_length(const RootSystem& rs, const AffineElement& w, std::optional<long> J,
                                        std::optional<int> K) {
  return ReflectionOracle(rs).length(w, J, K);
}

int brute_root_dimension(const RootSystem& rs, const AffineSubspace& a, std::size_t cap) {
  if (a.empty()) throw DomainError("empty affine subspace");
  std::vector<Vector> targets = a.directions();
  if (!is_zero(a.base())) targets.push_back(a.base());
  auto inside = [&targets](const LinearSpan& s) {
    return std::all_of(targets.begin(), targets.end(), [&s](const Vector& t) { return s.contains(t); });
  };
  const std::size_t n = rs.ambient_dim();
  if (inside(LinearSpan(n))) return 0;

  const auto& pos = rs.positive_roots();
  const std::size_t m = pos.size();
  std::size_t examined = 0;
  for (int k = 1; k <= rs.rank(); ++k) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (++examined > cap) throw BudgetExceeded("root dimension search exceeded " + std::to_string(cap) + " subsets");
      LinearSpan s(n);
      bool independent = true;
      for (auto p : pick) independent = s.add(rs.root(pos[p])) && independent;
      if (independent && inside(s)) return k;
      int j = k - 1;
      while (j >= 0 && pick[static_cast<std::size_t>(j)] == m - static_cast<std::size_t>(k - j)) --j;
      if (j < 0) break;
      ++pick[static_cast<std::size_t>(j)];
      for (auto t = static_cast<std::size_t>(j) + 1; t < pick.size(); ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  throw DomainError("affine subspace is not contained in the span of the roots");
}

int brute_nullity(const IntVector& v) {
  const std::size_t n = v.size();
  if (n > 12) throw BudgetExceeded("exhaustive nullity needs at most 12 coordinates");
  if (std::accumulate(v.begin(), v.end(), 0L) != 0) throw ParseError("vector does not sum to zero");
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<long> sum(full + 1, 0);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    sum[mask] = sum[mask & (mask - 1)] + v[low];
  }
  std::vector<int> best(full + 1, -1);
  best[0] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const std::size_t rest = mask ^ low;
    // Every block structure on mask puts its lowest element in some block.
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t block = sub | low;
      if (sum[block] == 0 && best[mask ^ block] >= 0) best[mask] = std::max(best[mask], best[mask ^ block] + 1);
      if (sub == 0) break;
    }
  }
  return best[full];
}

}  // namespace coxlen
