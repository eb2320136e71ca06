#include "coxlen/affgroup.hpp"

#include <algorithm>

#include "coxlen/errors.hpp"

namespace coxlen {

AffineElement AffineElement::identity(std::size_t n) {
  return {Matrix::identity(n), zero_vector(n)};
}

AffineElement AffineElement::translation_by(const Vector& lambda) {
  return {Matrix::identity(lambda.size()), lambda};
}

AffineElement AffineElement::linear_only(const Matrix& m) { return {m, zero_vector(m.rows())}; }

Vector AffineElement::apply(const Vector& x) const { return linear * x + translation; }

std::string AffineElement::key() const { return linear.key() + "|" + coxlen::key(translation); }

AffineElement compose(const AffineElement& a, const AffineElement& b) {
  if (a.dim() != b.dim()) throw ParseError("cannot compose elements of different dimension");
  return {a.linear * b.linear, a.linear * b.translation + a.translation};
}

AffineElement operator*(const AffineElement& a, const AffineElement& b) { return compose(a, b); }

AffineElement inverse(const AffineElement& a) {
  // Elements of W_0 are orthogonal, so the inverse is the transpose.
  Matrix inv = a.linear.transpose();
  return {inv, -(inv * a.translation)};
}

AffineElement conjugate(const AffineElement& g, const AffineElement& w) {
  return g * w * inverse(g);
}

Matrix elliptic_part(const AffineElement& a) { return a.linear; }

bool is_translation(const AffineElement& a) {
  return a.linear == Matrix::identity(a.linear.rows());
}

AffineElement reflection_to_element(const AffineReflection& r) {
  const std::size_t n = r.root.size();
  const Vector vee = Rational(2) / dot(r.root, r.root) * r.root;
  AffineElement e{Matrix::identity(n), Rational(r.level) * vee};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e.linear(i, j) -= vee[i] * r.root[j];
  }
  return e;
}

AffineReflection canonical(const RootSystem& rs, const AffineReflection& r) {
  auto i = rs.index_of(r.root);
  if (!i) throw ParseError("reflection root " + to_string(r.root) + " is not a root of " + rs.name());
  if (rs.is_positive(*i)) return r;
  return {rs.root(rs.negation(*i)), -r.level};
}

AffineReflection conjugate_reflection(const RootSystem& rs, const AffineReflection& s,
                                      const AffineReflection& r) {
  // s maps H_{b,j} to H_{s_a(b), j - k <b, a^vee>} where s = (a, k).
  auto a = rs.index_of(s.root);
  auto b = rs.index_of(r.root);
  if (!a || !b) throw ParseError("reflection root is not a root of " + rs.name());
  AffineReflection out{rs.root(rs.reflect(*a, *b)), r.level - s.level * rs.pairing(*b, *a)};
  return canonical(rs, out);
}

std::optional<AffineReflection> as_reflection(const RootSystem& rs, const AffineElement& a) {
  for (auto i : rs.positive_roots()) {
    if (!(rs.reflection_matrix(i) == a.linear)) continue;
    const Vector& vee = rs.coroot(i);
    std::size_t p = 0;
    while (sgn(vee[p]) == 0) ++p;
    Rational j = a.translation[p] / vee[p];
    if (!is_integer(j) || !(j * vee == a.translation)) return std::nullopt;
    return AffineReflection{rs.root(i), to_long(j)};
  }
  return std::nullopt;
}

std::string to_string(const AffineReflection& r) {
  return "refl(" + to_string(r.root) + "," + std::to_string(r.level) + ")";
}

AffineSubspace::AffineSubspace(const Vector& base, const std::vector<Vector>& directions)
    : span_(base.size(), directions) {
  base_ = base - span_.project(base);
}

AffineSubspace AffineSubspace::empty_set(std::size_t ambient) {
  AffineSubspace s(zero_vector(ambient), {});
  s.empty_ = true;
  return s;
}

bool AffineSubspace::contains(const Vector& x) const {
  return !empty_ && span_.contains(x - base_);
}

bool AffineSubspace::contains(const AffineSubspace& other) const {
  if (other.empty_) return true;
  if (empty_) return false;
  return contains(other.base_) && span_.contains(other.span_);
}

AffineSubspace operator+(const AffineSubspace& a, const AffineSubspace& b) {
  if (a.empty() || b.empty()) return AffineSubspace::empty_set(a.ambient());
  std::vector<Vector> dirs = a.directions();
  dirs.insert(dirs.end(), b.directions().begin(), b.directions().end());
  return AffineSubspace(a.base() + b.base(), dirs);
}

AffineSubspace image(const AffineElement& g, const AffineSubspace& s) {
  if (s.empty()) return s;
  std::vector<Vector> dirs;
  for (const auto& d : s.directions()) dirs.push_back(g.linear * d);
  return AffineSubspace(g.apply(s.base()), dirs);
}

AffineSubspace move_set(const AffineElement& a) {
  const std::size_t n = a.dim();
  LinearSpan im = column_space(a.linear - Matrix::identity(n));
  return AffineSubspace(a.translation, im.basis());
}

AffineSubspace fixed_set(const RootSystem& rs, const AffineElement& a) {
  const std::size_t n = a.dim();
  const auto& normals = rs.normals();
  Matrix sys(n + normals.size(), n);
  Vector rhs(n + normals.size(), Rational(0));
  Matrix shifted = a.linear - Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sys(i, j) = shifted(i, j);
    rhs[i] = -a.translation[i];
  }
  for (std::size_t k = 0; k < normals.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) sys(n + k, j) = normals[k][j];
  }
  auto x = solve(sys, rhs);
  if (!x) return AffineSubspace::empty_set(n);
  return AffineSubspace(*x, nullspace(sys));
}

bool is_elliptic(const AffineElement& a) {
  return column_space(a.linear - Matrix::identity(a.dim())).contains(a.translation);
}

bool has_fixed_point(const RootSystem& rs, const AffineElement& a) {
  return !fixed_set(rs, a).empty();
}

Matrix word_matrix(const RootSystem& rs, const std::vector<int>& word) {
  Matrix m = Matrix::identity(rs.ambient_dim());
  for (int s : word) {
    if (s < 1 || s > rs.rank()) {
      throw ParseError("simple reflection s" + std::to_string(s) + " out of range for " + rs.name());
    }
    m = m * rs.reflection_matrix(rs.simple_indices()[static_cast<std::size_t>(s - 1)]);
  }
  return m;
}

void validate_element(const RootSystem& rs, const AffineElement& a) {
  const std::size_t n = rs.ambient_dim();
  if (a.dim() != n || a.linear.rows() != n || a.linear.cols() != n) {
    throw ParseError("element has dimension " + std::to_string(a.dim()) + ", expected " +
                     std::to_string(n) + " for " + rs.name());
  }
  if (!(a.linear.transpose() * a.linear == Matrix::identity(n))) {
    throw ParseError("linear part is not orthogonal");
  }
  for (const auto& r : rs.roots()) {
    if (!rs.index_of(a.linear * r)) throw ParseError("linear part does not permute the roots");
  }
  for (const auto& nv : rs.normals()) {
    if (!(a.linear * nv == nv)) throw ParseError("linear part moves the normal space");
  }
  if (!rs.in_coroot_lattice(a.translation)) {
    throw ParseError("translation " + to_string(a.translation) + " is not in the coroot lattice of " +
                     rs.name());
  }
}

Vector rebased_translation(const AffineElement& w, const Vector& origin) {
  return w.apply(origin) - origin;
}

}  // namespace coxlen
