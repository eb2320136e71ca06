#include "coxlen/reflen.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "coxlen/errors.hpp"

namespace coxlen {

AffineElement ReflectionFactorization::product(std::size_t ambient) const {
  AffineElement p = AffineElement::identity(ambient);
  for (const auto& r : factors) p = p * reflection_to_element(r);
  return p;
}

int elliptic_dimension(const AffineElement& w) {
  return static_cast<int>(rank(w.linear - Matrix::identity(w.dim())));
}

// ---------------------------------------------------------------------------
// Quotient arrangement

QuotientArrangement::QuotientArrangement(const RootSystem& rs, const LinearSpan& u, std::size_t flat_cap)
    : flat_cap_(flat_cap) {
  const std::size_t n = rs.ambient_dim();
  quotient_ = Matrix::from_rows(nullspace(Matrix::from_rows(u.basis(), n)), n);

  std::unordered_set<std::string> seen;
  LinearSpan image_span(quotient_.rows());
  for (auto i : rs.positive_roots()) {
    Vector p = project(rs.root(i));
    if (is_zero(p)) continue;
    std::size_t lead = 0;
    while (sgn(p[lead]) == 0) ++lead;
    p = Rational(1) / p[lead] * p;
    if (!seen.insert(key(p)).second) continue;
    image_span.add(p);
    lines_.push_back(std::move(p));
    line_roots_.push_back(i);
  }
  rank_ = image_span.dim();
  levels_.push_back({Flat{LinearSpan(quotient_.rows()), {}}});
  flat_count_ = 1;
}

Vector QuotientArrangement::project(const Vector& v) const { return quotient_ * v; }

bool QuotientArrangement::grow() {
  if (levels_.size() > rank_) return false;
  std::vector<Flat> next;
  std::unordered_set<std::string> seen;
  for (const auto& flat : levels_.back()) {
    for (std::size_t l = 0; l < lines_.size(); ++l) {
      if (flat.span.contains(lines_[l])) continue;
      Flat grown = flat;
      grown.span.add(lines_[l]);
      if (!seen.insert(grown.span.key()).second) continue;
      grown.lines.push_back(l);
      next.push_back(std::move(grown));
      if (++flat_count_ > flat_cap_) {
        throw BudgetExceeded("root subspace enumeration exceeded the cap of " + std::to_string(flat_cap_));
      }
    }
  }
  if (next.empty()) return false;
  levels_.push_back(std::move(next));
  return true;
}

QuotientArrangement::Hit QuotientArrangement::locate(const Vector& v) {
  const Vector target = project(v);
  for (std::size_t k = 0;; ++k) {
    if (k == levels_.size() && !grow()) break;
    for (const auto& flat : levels_[k]) {
      if (!flat.span.contains(target)) continue;
      Hit hit;
      hit.dim = static_cast<int>(k);
      for (auto l : flat.lines) hit.lifts.push_back(line_roots_[l]);
      return hit;
    }
  }
  throw InternalError("vector " + to_string(v) + " lies outside every root subspace");
}

// ---------------------------------------------------------------------------
// Dimensions

DimensionCalculator::DimensionCalculator(const RootSystem& rs, ReflenConfig config)
    : rs_(rs), config_(config) {}

QuotientArrangement& DimensionCalculator::arrangement_for(const LinearSpan& u) {
  auto& slot = cache_[u.key()];
  if (!slot) slot = std::make_unique<QuotientArrangement>(rs_, u, config_.flat_cap);
  return *slot;
}

int DimensionCalculator::differential_dimension(const AffineElement& w) {
  LinearSpan u = column_space(w.linear - Matrix::identity(w.dim()));
  if (u.contains(w.translation)) return 0;
  return arrangement_for(u).locate(w.translation).dim;
}

DimensionReport DimensionCalculator::report(const AffineElement& w) {
  LinearSpan u = column_space(w.linear - Matrix::identity(w.dim()));
  DimensionReport rep;
  rep.e = static_cast<int>(u.dim());
  if (!u.contains(w.translation)) {
    auto hit = arrangement_for(u).locate(w.translation);
    rep.d = hit.dim;
    rep.witness_roots = hit.lifts;
  }
  // Mov(w_e) is a root subspace: complete the witness with a root basis of it.
  LinearSpan basis(rs_.ambient_dim());
  for (auto i : rs_.positive_roots()) {
    if (static_cast<int>(basis.dim()) == rep.e) break;
    if (u.contains(rs_.root(i)) && basis.add(rs_.root(i))) rep.witness_roots.push_back(i);
  }
  rep.dim = rep.d + rep.e;
  rep.length = 2 * rep.d + rep.e;
  return rep;
}

int differential_dimension(const RootSystem& rs, const AffineElement& w, const ReflenConfig& config) {
  return DimensionCalculator(rs, config).differential_dimension(w);
}

DimensionReport dimension_report(const RootSystem& rs, const AffineElement& w, const ReflenConfig& config) {
  return DimensionCalculator(rs, config).report(w);
}

// ---------------------------------------------------------------------------
// Factorizations

ReflectionFactorization factor_elliptic(const RootSystem& rs, const AffineElement& v) {
  auto fix = fixed_set(rs, v);
  if (fix.empty()) throw DomainError("element is not elliptic");
  const Vector& x = fix.base();
  const std::size_t n = v.dim();

  ReflectionFactorization out;
  AffineElement current = v;
  int e = elliptic_dimension(current);
  while (e > 0) {
    LinearSpan moves = column_space(current.linear - Matrix::identity(n));
    bool found = false;
    for (auto i : rs.positive_roots()) {
      const Vector& alpha = rs.root(i);
      if (!moves.contains(alpha)) continue;
      Rational level = dot(x, alpha);
      if (!is_integer(level)) continue;
      AffineReflection r{alpha, to_long(level)};
      AffineElement next = reflection_to_element(r) * current;
      if (elliptic_dimension(next) != e - 1) continue;
      out.factors.push_back(r);
      current = std::move(next);
      --e;
      found = true;
      break;
    }
    if (!found) throw InternalError("no reflection peels the elliptic element");
  }
  if (!(current == AffineElement::identity(n))) throw InternalError("elliptic peeling did not reach the identity");
  return out;
}

ReflectionFactorization min_factorization(const RootSystem& rs, const AffineElement& w, const ReflenConfig& config) {
  const std::size_t n = w.dim();
  DimensionReport rep = dimension_report(rs, w, config);

  LinearSpan witness(n);
  for (auto i : rep.witness_roots) witness.add(rs.root(i));
  LinearSpan chosen = column_space(w.linear - Matrix::identity(n));
  std::vector<AffineReflection> relative;
  for (auto i : rs.positive_roots()) {
    if (static_cast<int>(relative.size()) == rep.d) break;
    if (witness.contains(rs.root(i)) && chosen.add(rs.root(i))) relative.push_back({rs.root(i), 0});
  }
  if (static_cast<int>(relative.size()) != rep.d) throw InternalError("relative root basis is too small");

  AffineElement v = w;
  for (const auto& r : relative) v = v * reflection_to_element(r);
  ReflectionFactorization f = factor_elliptic(rs, v);
  for (auto it = relative.rbegin(); it != relative.rend(); ++it) f.factors.push_back(*it);

  if (static_cast<int>(f.size()) != rep.length || !(f.product(n) == w)) {
    throw InternalError("minimum factorization failed verification");
  }
  return f;
}

ReflectionFactorization hurwitz_move(const RootSystem& rs, const ReflectionFactorization& f, std::size_t i,
                                     HurwitzDirection dir) {
  if (i < 1 || i >= f.size()) {
    throw DomainError("Hurwitz move position " + std::to_string(i) + " out of range for length " +
                      std::to_string(f.size()));
  }
  ReflectionFactorization g = f;
  const AffineReflection r = canonical(rs, f.factors[i - 1]);
  const AffineReflection rp = canonical(rs, f.factors[i]);
  if (dir == HurwitzDirection::Right) {
    g.factors[i - 1] = conjugate_reflection(rs, r, rp);
    g.factors[i] = r;
  } else {
    g.factors[i - 1] = rp;
    g.factors[i] = conjugate_reflection(rs, rp, r);
  }
  return g;
}

namespace {

struct HurwitzNode {
  std::vector<std::size_t> seq;
  std::size_t parent;
  std::size_t position;
  HurwitzDirection dir;
};

std::string seq_key(const std::vector<std::size_t>& seq) {
  std::string k;
  for (auto x : seq) {
    k += std::to_string(x);
    k += ',';
  }
  return k;
}

bool paired_prefix(const std::vector<std::size_t>& seq, int d) {
  for (int i = 0; i < d; ++i) {
    if (seq[2 * i] != seq[2 * i + 1]) return false;
  }
  return true;
}

}  // namespace

TranslationEllipticSplit translation_elliptic_split(const RootSystem& rs, const AffineElement& w,
                                                    const ReflenConfig& config) {
  const std::size_t n = w.dim();
  DimensionCalculator calc(rs, config);
  const DimensionReport rep = calc.report(w);
  ReflectionFactorization f = min_factorization(rs, w, config);
  const std::size_t k = f.size();
  const int d = rep.d;

  // Hurwitz moves commute with the projection to W_0, and the projected orbit
  // is finite, so the search runs on the sequence of spherical reflections.
  std::vector<std::size_t> start;
  for (const auto& r : f.factors) start.push_back(rs.positive_of(*rs.index_of(r.root)));

  std::vector<HurwitzNode> nodes{{start, 0, 0, HurwitzDirection::Right}};
  std::unordered_map<std::string, std::size_t> seen{{seq_key(start), 0}};
  std::size_t hit = paired_prefix(start, d) ? 0 : SIZE_MAX;
  for (std::size_t head = 0; hit == SIZE_MAX && head < nodes.size(); ++head) {
    for (std::size_t pos = 1; pos < k && hit == SIZE_MAX; ++pos) {
      for (auto dir : {HurwitzDirection::Right, HurwitzDirection::Left}) {
        std::vector<std::size_t> seq = nodes[head].seq;
        const std::size_t a = seq[pos - 1];
        const std::size_t b = seq[pos];
        if (dir == HurwitzDirection::Right) {
          seq[pos - 1] = rs.positive_of(rs.reflect(a, b));
          seq[pos] = a;
        } else {
          seq[pos - 1] = b;
          seq[pos] = rs.positive_of(rs.reflect(b, a));
        }
        if (!seen.emplace(seq_key(seq), nodes.size()).second) continue;
        if (nodes.size() >= config.hurwitz_budget) {
          throw BudgetExceeded("Hurwitz search exceeded the budget of " + std::to_string(config.hurwitz_budget) +
                               " states");
        }
        const bool done = paired_prefix(seq, d);
        nodes.push_back({std::move(seq), head, pos, dir});
        if (done) {
          hit = nodes.size() - 1;
          break;
        }
      }
    }
  }
  if (hit == SIZE_MAX) throw InternalError("Hurwitz orbit exhausted without a paired factorization");

  std::vector<const HurwitzNode*> path;
  for (std::size_t at = hit; at != 0; at = nodes[at].parent) path.push_back(&nodes[at]);
  std::reverse(path.begin(), path.end());
  for (const auto* node : path) f = hurwitz_move(rs, f, node->position, node->dir);

  TranslationEllipticSplit out;
  out.states_explored = nodes.size();
  ReflectionFactorization prefix;
  ReflectionFactorization suffix;
  for (std::size_t i = 0; i < k; ++i) {
    (static_cast<int>(i) < 2 * d ? prefix : suffix).factors.push_back(f.factors[i]);
  }
  out.translation = prefix.product(n);
  out.elliptic = suffix.product(n);
  out.factorization = std::move(f);

  if (!is_translation(out.translation) || !is_elliptic(out.elliptic) ||
      !(out.translation * out.elliptic == w) || calc.report(out.translation).length != 2 * d ||
      calc.report(out.elliptic).length != rep.e) {
    throw InternalError("translation-elliptic split failed verification");
  }
  return out;
}

}  // namespace coxlen
