#include "coxlen/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <unordered_map>

#include "coxlen/errors.hpp"

namespace coxlen {

namespace {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::G: return 'G';
    case Family::F: return 'F';
  }
  return '?';
}

std::size_t ambient_for(const RootSystemSpec& spec) {
  switch (spec.family) {
    case Family::A: return static_cast<std::size_t>(spec.rank) + 1;
    case Family::G: return 3;
    default: return static_cast<std::size_t>(spec.rank);
  }
}

std::vector<Vector> standard_simple_roots(const RootSystemSpec& spec) {
  const std::size_t m = ambient_for(spec);
  const auto n = static_cast<std::size_t>(spec.rank);
  auto e = [m](std::size_t i) { return unit_vector(m, i); };
  std::vector<Vector> simple;
  switch (spec.family) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) simple.push_back(e(i) - e(i + 1));
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(e(i) - e(i + 1));
      simple.push_back(e(n - 1));
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(e(i) - e(i + 1));
      simple.push_back(Rational(2) * e(n - 1));
      break;
    case Family::D:
      for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(e(i) - e(i + 1));
      simple.push_back(e(n - 2) + e(n - 1));
      break;
    case Family::G:
      simple.push_back(e(0) - e(1));
      simple.push_back(Rational(-2) * e(0) + e(1) + e(2));
      break;
    case Family::F: {
      const Rational half(1, 2);
      simple.push_back(e(1) - e(2));
      simple.push_back(e(2) - e(3));
      simple.push_back(e(3));
      simple.push_back(half * (e(0) - e(1) - e(2) - e(3)));
      break;
    }
  }
  return simple;
}

Vector coroot_of(const Vector& alpha) { return Rational(2) / dot(alpha, alpha) * alpha; }

Vector reflect_vector(const Vector& x, const Vector& alpha, const Vector& alpha_vee) {
  return x - dot(x, alpha_vee) * alpha;
}

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::string RootSystemSpec::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

RootSystemSpec parse_type(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2) throw ParseError("type must be a family letter followed by a rank, got '" + s + "'");
  RootSystemSpec spec;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': spec.family = Family::A; break;
    case 'B': spec.family = Family::B; break;
    case 'C': spec.family = Family::C; break;
    case 'D': spec.family = Family::D; break;
    case 'G': spec.family = Family::G; break;
    case 'F': spec.family = Family::F; break;
    case 'E': case 'H': case 'I':
      throw UnsupportedError("type family '" + s.substr(0, 1) + "' is not supported");
    default: throw ParseError("unknown type family in '" + s + "'");
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad rank in '" + s + "'");
  }
  if (s.size() > 4) throw UnsupportedError("rank too large in '" + s + "'");
  spec.rank = std::stoi(s.substr(1));
  validate(spec);
  return spec;
}

void validate(const RootSystemSpec& spec) {
  const int r = spec.rank;
  bool ok = false;
  switch (spec.family) {
    case Family::A:
    case Family::B:
    case Family::C: ok = r >= 1 && r <= 8; break;
    case Family::D: ok = r >= 2 && r <= 8; break;
    case Family::G: ok = r == 2; break;
    case Family::F: ok = r == 4; break;
  }
  if (!ok) throw UnsupportedError("unsupported root system " + spec.name());
}

std::vector<int> exponents(const RootSystemSpec& spec) {
  validate(spec);
  const int n = spec.rank;
  std::vector<int> e;
  switch (spec.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      break;
    case Family::G: e = {1, 5}; break;
    case Family::F: e = {1, 5, 7, 11}; break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

RootSystem::RootSystem(const RootSystemSpec& spec) : spec_(spec) {
  validate(spec);
  build(standard_simple_roots(spec));
}

RootSystem::RootSystem(const RootSystemSpec& spec, std::vector<Vector> simple_roots) : spec_(spec) {
  validate(spec);
  if (simple_roots.size() != static_cast<std::size_t>(spec.rank)) {
    throw ParseError("expected " + std::to_string(spec.rank) + " simple roots");
  }
  build(std::move(simple_roots));
}

void RootSystem::build(std::vector<Vector> simple) {
  ambient_ = simple.front().size();
  simple_ = std::move(simple);
  exponents_ = coxlen::exponents(spec_);
  w0_order_ = 1;
  for (int e : exponents_) w0_order_ *= (e + 1);

  // Closure of the simple roots under the simple reflections.
  std::vector<Vector> simple_vee;
  for (const auto& a : simple_) simple_vee.push_back(coroot_of(a));
  std::map<std::string, Vector> seen;
  std::deque<Vector> queue;
  for (const auto& a : simple_) {
    for (const Vector& v : {a, -a}) {
      if (seen.emplace(key(v), v).second) queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vector v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      Vector w = reflect_vector(v, simple_[i], simple_vee[i]);
      if (seen.emplace(key(w), w).second) queue.push_back(std::move(w));
    }
  }
  roots_.clear();
  for (auto& [k, v] : seen) roots_.push_back(v);
  std::sort(roots_.begin(), roots_.end(), lex_less);

  const std::size_t count = roots_.size();
  coroots_.clear();
  for (const auto& a : roots_) coroots_.push_back(coroot_of(a));

  Matrix simple_cols = Matrix::from_columns(simple_, ambient_);
  coefficients_.assign(count, {});
  positive_.assign(count, false);
  positive_list_.clear();
  long best_height = -1;
  for (std::size_t i = 0; i < count; ++i) {
    auto c = solve(simple_cols, roots_[i]);
    if (!c) throw InternalError("root outside the span of the simple roots");
    long height = 0;
    bool nonneg = true;
    for (const auto& q : *c) {
      long x = to_long(q);
      coefficients_[i].push_back(x);
      height += x;
      if (x < 0) nonneg = false;
    }
    positive_[i] = nonneg;
    if (nonneg) {
      positive_list_.push_back(i);
      if (height > best_height) {
        best_height = height;
        highest_ = i;
      }
    }
  }

  negation_.assign(count, 0);
  positive_of_.assign(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    auto j = index_of(-roots_[i]);
    if (!j) throw InternalError("root system is not closed under negation");
    negation_[i] = *j;
    positive_of_[i] = positive_[i] ? i : *j;
  }

  reflect_.assign(count * count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      auto k = index_of(reflect_vector(roots_[j], roots_[i], coroots_[i]));
      if (!k) throw InternalError("root system is not closed under reflections");
      reflect_[i * count + j] = *k;
    }
  }

  simple_idx_.clear();
  for (const auto& a : simple_) simple_idx_.push_back(*index_of(a));

  normals_ = nullspace(Matrix::from_rows(simple_, ambient_));
  lattice_basis_ = lattice_basis(coroots_, ambient_);
}

Vector RootSystem::coroot(const Vector& alpha) const {
  auto i = index_of(alpha);
  if (!i) throw ParseError("vector " + to_string(alpha) + " is not a root of " + name());
  return coroots_[*i];
}

std::optional<std::size_t> RootSystem::index_of(const Vector& v) const {
  if (v.size() != ambient_) return std::nullopt;
  auto it = std::lower_bound(roots_.begin(), roots_.end(), v, lex_less);
  if (it == roots_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

long RootSystem::pairing(std::size_t j, std::size_t i) const {
  return to_long(dot(roots_[j], coroots_[i]));
}

std::vector<Vector> RootSystem::simple_coroots() const {
  std::vector<Vector> out;
  for (auto i : simple_idx_) out.push_back(coroots_[i]);
  return out;
}

Matrix RootSystem::reflection_matrix(std::size_t i) const {
  Matrix m = Matrix::identity(ambient_);
  const Vector& a = roots_[i];
  const Vector& av = coroots_[i];
  for (std::size_t r = 0; r < ambient_; ++r) {
    for (std::size_t c = 0; c < ambient_; ++c) m(r, c) -= a[r] * av[c];
  }
  return m;
}

bool RootSystem::in_span(const Vector& v) const {
  if (v.size() != ambient_) return false;
  return std::all_of(normals_.begin(), normals_.end(),
                     [&v](const Vector& n) { return sgn(dot(n, v)) == 0; });
}

bool RootSystem::in_coroot_lattice(const Vector& v) const {
  return v.size() == ambient_ && in_lattice(lattice_basis_, v);
}

std::optional<std::vector<long>> RootSystem::coroot_coordinates(const Vector& v) const {
  if (v.size() != ambient_) return std::nullopt;
  auto c = solve(Matrix::from_columns(simple_coroots(), ambient_), v);
  if (!c) return std::nullopt;
  std::vector<long> out;
  for (const auto& q : *c) {
    if (!is_integer(q)) return std::nullopt;
    out.push_back(to_long(q));
  }
  return out;
}

Vector RootSystem::from_coroot_coordinates(const std::vector<long>& coeffs) const {
  Vector v = zero_vector(ambient_);
  auto sc = simple_coroots();
  for (std::size_t i = 0; i < coeffs.size() && i < sc.size(); ++i) v = v + Rational(coeffs[i]) * sc[i];
  return v;
}

std::vector<Vector> lattice_basis(const std::vector<Vector>& generators, std::size_t ambient) {
  mpz_class denom = 1;
  for (const auto& g : generators) {
    for (const auto& q : g) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& g : generators) {
    std::vector<mpz_class> r(ambient);
    for (std::size_t j = 0; j < ambient; ++j) {
      Rational scaled = g[j] * Rational(denom);
      r[j] = scaled.get_num();
    }
    rows.push_back(std::move(r));
  }
  std::size_t top = 0;
  for (std::size_t col = 0; col < ambient && top < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        mpz_class q = floor_div(rows[i][col], rows[top][col]);
        for (std::size_t j = col; j < ambient; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (top >= rows.size() || rows[top][col] == 0) continue;
    if (rows[top][col] < 0) {
      for (auto& x : rows[top]) x = -x;
    }
    for (std::size_t i = 0; i < top; ++i) {
      mpz_class q = floor_div(rows[i][col], rows[top][col]);
      if (q == 0) continue;
      for (std::size_t j = col; j < ambient; ++j) rows[i][j] -= q * rows[top][j];
    }
    ++top;
  }
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < top; ++i) {
    Vector v(ambient);
    for (std::size_t j = 0; j < ambient; ++j) {
      v[j] = Rational(rows[i][j], denom);
      v[j].canonicalize();
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_lattice(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) return is_zero(v);
  auto c = solve(Matrix::from_columns(basis, v.size()), v);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& q) { return is_integer(q); });
}

}  // namespace coxlen
