#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxlen/linalg.hpp"
#include "coxlen/rootsys.hpp"

namespace coxlen {

/// An element x -> linear * x + translation of the affine Weyl group, stored
/// in normal form t_translation * u relative to the fixed origin 0.
struct AffineElement {
  Matrix linear;
  Vector translation;

  static AffineElement identity(std::size_t n);
  static AffineElement translation_by(const Vector& lambda);
  static AffineElement linear_only(const Matrix& m);

  std::size_t dim() const { return translation.size(); }
  Vector apply(const Vector& x) const;
  std::string key() const;

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.translation == b.translation && a.linear == b.linear;
  }
};

/// (A, l) * (B, m) = (AB, Am + l). Throws ParseError on a dimension mismatch.
AffineElement compose(const AffineElement& a, const AffineElement& b);
AffineElement operator*(const AffineElement& a, const AffineElement& b);
AffineElement inverse(const AffineElement& a);
/// g w g^{-1}.
AffineElement conjugate(const AffineElement& g, const AffineElement& w);

/// Image of the element under the projection to the spherical group.
Matrix elliptic_part(const AffineElement& a);
bool is_translation(const AffineElement& a);

/// The reflection across the hyperplane <x, root> = level.
struct AffineReflection {
  Vector root;
  long level = 0;

  friend bool operator==(const AffineReflection&, const AffineReflection&) = default;
};

AffineElement reflection_to_element(const AffineReflection& r);
/// Rewrites r with a positive root (the pair (-a, -j) names the same reflection).
AffineReflection canonical(const RootSystem& rs, const AffineReflection& r);
/// The reflection s r s, in canonical form.
AffineReflection conjugate_reflection(const RootSystem& rs, const AffineReflection& s,
                                      const AffineReflection& r);
/// Recovers (root, level) when the element is a reflection of W.
std::optional<AffineReflection> as_reflection(const RootSystem& rs, const AffineElement& a);
std::string to_string(const AffineReflection& r);

/// base + span(directions), or the empty set. Canonical: directions are the
/// reduced echelon basis and base is orthogonal to them, so structural
/// equality is set equality.
class AffineSubspace {
 public:
  AffineSubspace() = default;
  AffineSubspace(const Vector& base, const std::vector<Vector>& directions);
  static AffineSubspace empty_set(std::size_t ambient);

  bool empty() const { return empty_; }
  const Vector& base() const { return base_; }
  const std::vector<Vector>& directions() const { return span_.basis(); }
  const LinearSpan& direction_span() const { return span_; }
  std::size_t dim() const { return span_.dim(); }
  std::size_t ambient() const { return span_.ambient(); }
  /// True for a nonempty subspace through the origin.
  bool is_linear() const { return !empty_ && is_zero(base_); }

  bool contains(const Vector& x) const;
  bool contains(const AffineSubspace& other) const;

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    return a.empty_ == b.empty_ && a.span_ == b.span_ && a.base_ == b.base_;
  }

 private:
  Vector base_;
  LinearSpan span_;
  bool empty_ = false;
};

/// Minkowski sum A + B.
AffineSubspace operator+(const AffineSubspace& a, const AffineSubspace& b);
/// Image of a subspace under the affine map.
AffineSubspace image(const AffineElement& g, const AffineSubspace& s);

/// Mov(w) = translation + Im(linear - I).
AffineSubspace move_set(const AffineElement& a);
/// Fix(w) inside the affine span of the roots; empty when w fixes nothing.
AffineSubspace fixed_set(const RootSystem& rs, const AffineElement& a);

/// translation in Im(linear - I).
bool is_elliptic(const AffineElement& a);
/// Same question decided by looking for a fixed point.
bool has_fixed_point(const RootSystem& rs, const AffineElement& a);

/// Linear part given by a word in the simple reflections (1-based indices),
/// multiplied left to right.
Matrix word_matrix(const RootSystem& rs, const std::vector<int>& word);

/// Checks that the linear part lies in W_0 and the translation in the coroot
/// lattice. Throws ParseError otherwise.
void validate_element(const RootSystem& rs, const AffineElement& a);

/// Translation part of the normal form taken relative to another origin:
/// w(origin) - origin.
Vector rebased_translation(const AffineElement& w, const Vector& origin);

}  // namespace coxlen
