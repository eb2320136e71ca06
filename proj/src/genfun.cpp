#include "coxlen/genfun.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <unordered_set>

#include "coxlen/errors.hpp"

namespace coxlen {

namespace {

std::string format_term(long c, int s_degree, int t_degree, bool first) {
  std::string out;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  const long mag = std::labs(c);
  if (s_degree == 0 && t_degree == 0) return out + std::to_string(mag);
  std::string mono;
  auto power = [&mono](char var, int deg) {
    if (deg == 0) return;
    if (!mono.empty()) mono += "*";
    mono += var;
    if (deg > 1) mono += "^" + std::to_string(deg);
  };
  power('s', s_degree);
  power('t', t_degree);
  if (mag != 1) out += std::to_string(mag) + "*";
  return out + mono;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::monomial(int degree, long coefficient) {
  Polynomial p;
  p.add_term(degree, coefficient);
  return p;
}

Polynomial Polynomial::shephard_todd(const std::vector<int>& exponents) {
  Polynomial p = monomial(0);
  for (int e : exponents) p = p * (monomial(0) + monomial(1, e));
  return p;
}

long Polynomial::coefficient(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? 0 : it->second;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

void Polynomial::add_term(int degree, long coefficient) {
  long& c = terms_[degree];
  c += coefficient;
  if (c == 0) terms_.erase(degree);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    out += format_term(c, 0, d, first);
    first = false;
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [d, c] : b.terms_) r.add_term(d, c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
  }
  return r;
}

// ---------------------------------------------------------------------------
// BivariatePolynomial

BivariatePolynomial BivariatePolynomial::monomial(int s_degree, int t_degree, long coefficient) {
  BivariatePolynomial p;
  p.add_term(s_degree, t_degree, coefficient);
  return p;
}

BivariatePolynomial BivariatePolynomial::linear_product(const std::vector<int>& exponents, bool with_s) {
  BivariatePolynomial p = monomial(0, 0);
  const BivariatePolynomial head = with_s ? monomial(1, 0) : monomial(0, 0);
  for (int e : exponents) p = p * (head + monomial(0, 1, e));
  return p;
}

BivariatePolynomial BivariatePolynomial::parse(const std::string& text) {
  BivariatePolynomial p;
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  if (s == "0") return p;
  std::size_t i = 0;
  auto read_int = [&]() -> long {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ParseError("expected a number in polynomial '" + text + "'");
    long v = std::stol(s.substr(i, j - i));
    i = j;
    return v;
  };
  while (i < s.size()) {
    long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' in polynomial '" + text + "'");
    }
    long coeff = 1;
    int sd = 0;
    int td = 0;
    bool any = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = read_int();
      any = true;
      if (i < s.size() && s[i] == '*') ++i;
      else if (i < s.size() && s[i] != '+' && s[i] != '-') throw ParseError("bad term in '" + text + "'");
    }
    while (i < s.size() && (s[i] == 's' || s[i] == 't')) {
      char var = s[i++];
      int deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        deg = static_cast<int>(read_int());
      }
      (var == 's' ? sd : td) += deg;
      any = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (!any) throw ParseError("empty term in polynomial '" + text + "'");
    p.add_term(sd, td, sign * coeff);
  }
  return p;
}

long BivariatePolynomial::coefficient(int s_degree, int t_degree) const {
  auto it = terms_.find({s_degree, t_degree});
  return it == terms_.end() ? 0 : it->second;
}

void BivariatePolynomial::add_term(int s_degree, int t_degree, long coefficient) {
  long& c = terms_[{s_degree, t_degree}];
  c += coefficient;
  if (c == 0) terms_.erase({s_degree, t_degree});
}

bool BivariatePolynomial::depends_on_s() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.first != 0; });
}

long BivariatePolynomial::evaluate_sum() const {
  long total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

Polynomial BivariatePolynomial::specialize() const {
  Polynomial p;
  for (const auto& [e, c] : terms_) p.add_term(2 * e.first + e.second, c);
  return p;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    out += format_term(c, e.first, e.second, first);
    first = false;
  }
  return out;
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
  return r;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Spherical group

SphericalGroup enumerate_w0(const RootSystem& rs, std::size_t cap) {
  const std::size_t n = rs.ambient_dim();
  std::vector<Matrix> gens;
  for (auto i : rs.simple_indices()) gens.push_back(rs.reflection_matrix(i));

  SphericalGroup g;
  std::unordered_set<std::string> seen;
  std::vector<Matrix> layer{Matrix::identity(n)};
  seen.insert(layer.front().key());
  for (int len = 0; !layer.empty(); ++len) {
    for (auto& m : layer) {
      g.elements.push_back(m);
      g.word_lengths.push_back(len);
      g.elliptic_dims.push_back(static_cast<int>(rank(m - Matrix::identity(n))));
    }
    std::vector<std::pair<std::string, Matrix>> next;
    for (const auto& m : layer) {
      for (const auto& s : gens) {
        Matrix p = m * s;
        std::string k = p.key();
        if (!seen.insert(k).second) continue;
        if (seen.size() > cap) {
          throw BudgetExceeded("spherical group exceeds the cap of " + std::to_string(cap) + " elements");
        }
        next.emplace_back(std::move(k), std::move(p));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    layer.clear();
    for (auto& [k, m] : next) layer.push_back(std::move(m));
  }
  return g;
}

Polynomial spherical_genfun(const SphericalGroup& group) {
  Polynomial p;
  for (int e : group.elliptic_dims) p.add_term(e, 1);
  return p;
}

// ---------------------------------------------------------------------------
// Local generating functions

GenfunEngine::GenfunEngine(const RootSystem& rs, std::size_t w0_cap, ReflenConfig config)
    : rs_(rs), group_(enumerate_w0(rs, w0_cap)), calc_(rs, config) {}

BivariatePolynomial GenfunEngine::local_genfun(const Vector& lambda) {
  if (lambda.size() != rs_.ambient_dim() || !rs_.in_coroot_lattice(lambda)) {
    throw DomainError(to_string(lambda) + " is not in the coroot lattice");
  }
  BivariatePolynomial f;
  for (std::size_t i = 0; i < group_.size(); ++i) {
    const int d = calc_.differential_dimension({group_.elements[i], lambda});
    f.add_term(d, group_.elliptic_dims[i], 1);
  }
  return f;
}

bool GenfunEngine::is_generic(const Vector& lambda) {
  return calc_.differential_dimension(AffineElement::translation_by(lambda)) == rs_.rank();
}

Vector GenfunEngine::dominant(const Vector& lambda) const {
  Vector v = lambda;
  for (bool moved = true; moved;) {
    moved = false;
    for (auto i : rs_.simple_indices()) {
      Rational p = dot(v, rs_.root(i));
      if (sgn(p) < 0) {
        v = v - p * rs_.coroot(i);
        moved = true;
      }
    }
  }
  return v;
}

BivariatePolynomial local_genfun(const RootSystem& rs, const Vector& lambda) {
  return GenfunEngine(rs).local_genfun(lambda);
}

std::vector<CorootClass> classify_coroots(GenfunEngine& engine, int radius) {
  if (radius < 0) throw ParseError("radius must be non-negative");
  const RootSystem& rs = engine.root_system();
  const auto n = static_cast<std::size_t>(rs.rank());

  std::vector<std::vector<long>> points;
  std::vector<long> c(n, -radius);
  while (true) {
    points.push_back(c);
    std::size_t k = n;
    while (k > 0 && c[k - 1] == radius) c[--k] = -radius;
    if (k == 0) break;
    ++c[k - 1];
  }
  auto l1 = [](const std::vector<long>& p) {
    long s = 0;
    for (long x : p) s += std::labs(x);
    return s;
  };
  std::stable_sort(points.begin(), points.end(),
                   [&](const auto& a, const auto& b) { return l1(a) < l1(b); });

  std::map<std::string, BivariatePolynomial> by_orbit;
  std::map<BivariatePolynomial, std::size_t> index;
  std::vector<CorootClass> out;
  for (const auto& p : points) {
    const Vector lambda = rs.from_coroot_coordinates(p);
    auto [it, fresh] = by_orbit.try_emplace(key(engine.dominant(lambda)));
    if (fresh) it->second = engine.local_genfun(lambda);
    auto [slot, added] = index.try_emplace(it->second, out.size());
    if (added) out.push_back({it->second, {}});
    out[slot->second].points.push_back(p);
  }
  return out;
}

std::vector<CorootClass> classify_coroots(const RootSystem& rs, int radius) {
  GenfunEngine engine(rs);
  return classify_coroots(engine, radius);
}

}  // namespace coxlen
