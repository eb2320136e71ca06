#include "coxlen/affsym.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "coxlen/errors.hpp"

namespace coxlen {

namespace {

constexpr int kMaxCoordinates = 62;
constexpr std::size_t kMaxSupport = 24;

using Bits = boost::dynamic_bitset<>;

bool block_less(const Block& a, const Block& b) { return a < b; }

// Bron-Kerbosch with Tomita pivoting.
class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<Bits>& adj) : adj_(adj) {}

  std::vector<std::vector<std::size_t>> all_maximal() {
    collect_ = true;
    run();
    return std::move(found_);
  }

  std::size_t maximum() {
    collect_ = false;
    run();
    return best_;
  }

 private:
  void run() {
    const std::size_t n = adj_.size();
    Bits p(n);
    p.set();
    Bits x(n);
    std::vector<std::size_t> r;
    expand(r, p, x);
  }

  void expand(std::vector<std::size_t>& r, Bits p, Bits x) {
    if (p.none()) {
      if (x.none()) {
        best_ = std::max(best_, r.size());
        if (collect_) found_.push_back(r);
      }
      return;
    }
    if (!collect_ && r.size() + p.count() <= best_) return;
    std::size_t pivot = 0;
    std::size_t pivot_deg = 0;
    bool have_pivot = false;
    Bits px = p | x;
    for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
      std::size_t deg = (p & adj_[u]).count();
      if (!have_pivot || deg > pivot_deg) {
        pivot = u;
        pivot_deg = deg;
        have_pivot = true;
      }
    }
    Bits candidates = p - adj_[pivot];
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      r.push_back(v);
      expand(r, p & adj_[v], x & adj_[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  const std::vector<Bits>& adj_;
  bool collect_ = false;
  std::size_t best_ = 0;
  std::vector<std::vector<std::size_t>> found_;
};

std::vector<Bits> disjointness_graph(const std::vector<BlockMask>& blocks) {
  std::vector<Bits> adj(blocks.size(), Bits(blocks.size()));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if ((blocks[i] & blocks[j]) == 0) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  return adj;
}

void check_length(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxCoordinates)) {
    throw UnsupportedError("vectors longer than " + std::to_string(kMaxCoordinates) + " are not supported");
  }
}

}  // namespace

Block to_block(BlockMask mask) {
  Block b;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1U) b.push_back(i + 1);
  }
  return b;
}

BlockMask to_mask(const Block& block) {
  BlockMask m = 0;
  for (int i : block) m |= BlockMask{1} << (i - 1);
  return m;
}

std::string to_string(const Block& block) {
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(block[i]);
  }
  return s + "}";
}

SetPartition make_partition(std::vector<Block> blocks, int n) {
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw ParseError("partition has an empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n) throw ParseError("block element " + std::to_string(x) + " outside [n]");
      if (seen[static_cast<std::size_t>(x)]++) throw ParseError("blocks are not disjoint");
    }
  }
  for (int x = 1; x <= n; ++x) {
    if (!seen[static_cast<std::size_t>(x)]) throw ParseError("blocks do not cover " + std::to_string(x));
  }
  std::sort(blocks.begin(), blocks.end(), block_less);
  return {std::move(blocks)};
}

void validate_window(const Window& w) {
  const auto n = static_cast<long>(w.values.size());
  if (n == 0) throw ParseError("window is empty");
  std::vector<bool> residue(static_cast<std::size_t>(n), false);
  for (long v : w.values) {
    auto r = static_cast<std::size_t>(((v % n) + n) % n);
    if (residue[r]) throw ParseError("window values are not distinct mod n (condition 2)");
    residue[r] = true;
  }
  long sum = std::accumulate(w.values.begin(), w.values.end(), 0L);
  if (sum != n * (n + 1) / 2) {
    throw ParseError("window values sum to " + std::to_string(sum) + ", expected " + std::to_string(n * (n + 1) / 2) +
                     " (condition 3)");
  }
}

WindowNormalForm window_to_normal_form(const Window& w) {
  validate_window(w);
  const auto n = static_cast<long>(w.values.size());
  WindowNormalForm nf;
  for (long v : w.values) {
    long p = ((v - 1) % n + n) % n + 1;
    nf.pi.push_back(static_cast<int>(p));
    nf.lambda.push_back((v - p) / n);
  }
  return nf;
}

Window normal_form_to_window(const WindowNormalForm& nf) {
  const auto n = static_cast<long>(nf.pi.size());
  Window w;
  for (std::size_t i = 0; i < nf.pi.size(); ++i) w.values.push_back(nf.pi[i] + n * nf.lambda[i]);
  return w;
}

AffineElement embed(const WindowNormalForm& nf) {
  const std::size_t n = nf.pi.size();
  AffineElement e{Matrix(n, n), zero_vector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    e.linear(i, static_cast<std::size_t>(nf.pi[i] - 1)) = 1;
    e.translation[i] = nf.lambda[i];
  }
  return e;
}

SetPartition cycles(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<bool> done(n, false);
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    Block b;
    for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(pi[j] - 1)) {
      done[j] = true;
      b.push_back(static_cast<int>(j + 1));
    }
    blocks.push_back(std::move(b));
  }
  return make_partition(std::move(blocks), static_cast<int>(n));
}

IntVector l_map(const SetPartition& p, const IntVector& v) {
  IntVector out;
  for (const auto& b : p.blocks) {
    long s = 0;
    for (int i : b) s += v.at(static_cast<std::size_t>(i - 1));
    out.push_back(s);
  }
  return out;
}

std::size_t Profile::pos_count(long i) const {
  auto it = pos.find(i);
  return it == pos.end() ? 0 : it->second.size();
}

std::size_t Profile::neg_count(long i) const {
  auto it = neg.find(i);
  return it == neg.end() ? 0 : it->second.size();
}

Profile profiles(const IntVector& v) {
  check_length(v.size());
  if (std::accumulate(v.begin(), v.end(), 0L) != 0) throw ParseError("vector does not sum to zero");
  Profile pr;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int idx = static_cast<int>(i + 1);
    if (v[i] > 0) {
      pr.positive.push_back(idx);
      pr.positive_weight += v[i];
    } else if (v[i] < 0) {
      pr.negative.push_back(idx);
    } else {
      pr.zero.push_back(idx);
    }
  }
  if (pr.positive.size() > kMaxSupport || pr.negative.size() > kMaxSupport) {
    throw BudgetExceeded("sign class larger than " + std::to_string(kMaxSupport) + " coordinates");
  }
  auto fill = [&v](const std::vector<int>& support, std::map<long, std::vector<BlockMask>>& out) {
    const std::size_t k = support.size();
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << k); ++sub) {
      long weight = 0;
      BlockMask mask = 0;
      for (std::size_t b = 0; b < k; ++b) {
        if (!(sub >> b & 1U)) continue;
        const int idx = support[b];
        weight += v[static_cast<std::size_t>(idx - 1)];
        mask |= BlockMask{1} << (idx - 1);
      }
      out[std::labs(weight)].push_back(mask);
    }
    for (auto& [w, list] : out) std::sort(list.begin(), list.end());
  };
  fill(pr.positive, pr.pos);
  fill(pr.negative, pr.neg);
  return pr;
}

std::map<long, std::vector<BlockMask>> basic_null_blocks(const IntVector& v) {
  Profile pr = profiles(v);
  std::map<long, std::vector<BlockMask>> out;
  for (const auto& [w, plus] : pr.pos) {
    auto it = pr.neg.find(w);
    if (it == pr.neg.end()) continue;
    auto& bucket = out[w];
    for (auto a : plus) {
      for (auto b : it->second) bucket.push_back(a | b);
    }
    std::sort(bucket.begin(), bucket.end());
  }
  return out;
}

std::vector<BlockMask> minimal_null_blocks(const IntVector& v) {
  std::vector<BlockMask> confirmed;
  for (const auto& [w, bucket] : basic_null_blocks(v)) {
    std::vector<BlockMask> fresh;
    for (auto b : bucket) {
      bool superset = std::any_of(confirmed.begin(), confirmed.end(),
                                  [b](BlockMask c) { return (c & b) == c; });
      if (!superset) fresh.push_back(b);
    }
    confirmed.insert(confirmed.end(), fresh.begin(), fresh.end());
  }
  std::sort(confirmed.begin(), confirmed.end(),
            [](BlockMask a, BlockMask b) { return to_block(a) < to_block(b); });
  return confirmed;
}

std::size_t NullComplex::triangle_count() const {
  std::size_t n = vertices.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      for (std::size_t k = j + 1; k < n; ++k) count += adj[i][k] && adj[j][k];
    }
  }
  return count;
}

std::vector<SetPartition> NullComplex::maximal_partitions(int n) const {
  std::vector<SetPartition> out;
  for (const auto& clique : maximal_cliques) {
    std::vector<Block> blocks = zero_blocks;
    for (auto i : clique) blocks.push_back(vertices[i]);
    out.push_back(make_partition(std::move(blocks), n));
  }
  return out;
}

NullComplex null_complex(const IntVector& v, std::size_t clique_cap) {
  std::vector<BlockMask> minimal = minimal_null_blocks(v);
  if (minimal.size() > clique_cap) {
    throw BudgetExceeded("null complex has " + std::to_string(minimal.size()) + " vertices, cap is " +
                         std::to_string(clique_cap));
  }
  NullComplex cx;
  for (auto m : minimal) cx.vertices.push_back(to_block(m));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) cx.zero_blocks.push_back({static_cast<int>(i + 1)});
  }
  auto adj = disjointness_graph(minimal);
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      if (adj[i].test(j)) cx.edges.emplace_back(i, j);
    }
  }
  if (minimal.empty()) {
    cx.maximal_cliques = {{}};
  } else {
    cx.maximal_cliques = CliqueSearch(adj).all_maximal();
    for (auto& c : cx.maximal_cliques) std::sort(c.begin(), c.end());
    std::sort(cx.maximal_cliques.begin(), cx.maximal_cliques.end());
  }
  std::size_t best = 0;
  for (const auto& c : cx.maximal_cliques) best = std::max(best, c.size());
  cx.nullity = static_cast<int>(best + cx.zero_blocks.size());
  return cx;
}

int nullity(const IntVector& v) {
  std::vector<BlockMask> minimal = minimal_null_blocks(v);
  auto zeros = static_cast<int>(std::count(v.begin(), v.end(), 0L));
  if (minimal.empty()) return zeros;
  auto adj = disjointness_graph(minimal);
  return static_cast<int>(CliqueSearch(adj).maximum()) + zeros;
}

int relative_nullity(const IntVector& lambda, const Permutation& pi) {
  if (lambda.size() != pi.size()) throw ParseError("lambda and pi have different lengths");
  return nullity(l_map(cycles(pi), lambda));
}

int reflection_length_affsym(const Window& w) {
  WindowNormalForm nf = window_to_normal_form(w);
  const auto n = static_cast<int>(nf.pi.size());
  const auto c = static_cast<int>(cycles(nf.pi).size());
  return n - 2 * relative_nullity(nf.lambda, nf.pi) + c;
}

bool has_zero_sum_subset(const IntVector& values) {
  if (values.empty()) return false;
  IntVector v = values;
  v.push_back(-std::accumulate(values.begin(), values.end(), 0L));
  return nullity(v) >= 2;
}

RootSystem affine_symmetric_root_system(int n) {
  if (n < 2) throw UnsupportedError("the geometric model needs n >= 2");
  return RootSystem(RootSystemSpec{Family::A, n - 1});
}

GoodOriginSplit good_origin_split(const Window& w, const ReflenConfig& config) {
  WindowNormalForm nf = window_to_normal_form(w);
  const RootSystem rs = affine_symmetric_root_system(static_cast<int>(nf.pi.size()));
  const AffineElement element = embed(nf);
  const std::size_t n = rs.ambient_dim();

  TranslationEllipticSplit split = translation_elliptic_split(rs, element, config);

  // Fix(u) is cut out by the hyperplanes of an elliptic factorization of u;
  // adding level-0 hyperplanes for independent roots pins down a vertex.
  ReflectionFactorization peel = factor_elliptic(rs, split.elliptic);
  std::vector<Vector> rows;
  Vector rhs;
  LinearSpan used(n);
  for (const auto& r : peel.factors) {
    used.add(r.root);
    rows.push_back(r.root);
    rhs.emplace_back(r.level);
  }
  for (auto i : rs.positive_roots()) {
    if (static_cast<int>(used.dim()) == rs.rank()) break;
    if (used.add(rs.root(i))) {
      rows.push_back(rs.root(i));
      rhs.emplace_back(0);
    }
  }
  for (const auto& nv : rs.normals()) {
    rows.push_back(nv);
    rhs.emplace_back(0);
  }
  auto x = solve(Matrix::from_rows(rows, n), rhs);
  if (!x || !(split.elliptic.apply(*x) == *x)) throw InternalError("no vertex fixed by the elliptic factor");

  GoodOriginSplit out;
  out.origin = *x;
  out.translation = AffineElement::translation_by(rebased_translation(element, *x));
  out.elliptic = {element.linear, *x - element.linear * *x};
  if (!(out.translation == split.translation) || !(out.elliptic == split.elliptic)) {
    throw InternalError("re-based normal form disagrees with the split");
  }
  DimensionCalculator calc(rs, config);
  out.translation_length = calc.report(out.translation).length;
  out.elliptic_length = calc.report(out.elliptic).length;
  out.length = calc.report(element).length;
  if (out.length != out.translation_length + out.elliptic_length) {
    throw InternalError("lengths do not add up at the chosen origin");
  }
  return out;
}

}  // namespace coxlen
