#pragma once

// Local generating functions f_lambda(s, t) = sum over u in W_0 of
// s^d(t_lambda u) t^e(t_lambda u), their one-variable specialisation, and the
// classification of coroot lattice points by these polynomials.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coxlen/linalg.hpp"
#include "coxlen/reflen.hpp"
#include "coxlen/rootsys.hpp"

namespace coxlen {

class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial monomial(int degree, long coefficient = 1);
  /// prod (1 + e t) over the given exponents.
  static Polynomial shephard_todd(const std::vector<int>& exponents);

  const std::map<int, long>& terms() const { return terms_; }
  long coefficient(int degree) const;
  int degree() const;
  void add_term(int degree, long coefficient);
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<int, long> terms_;
};

/// Integer polynomial in s and t. Terms are keyed by (s-degree, t-degree) and
/// zero coefficients are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;

  BivariatePolynomial() = default;
  static BivariatePolynomial monomial(int s_degree, int t_degree, long coefficient = 1);
  /// prod (s + e t), or prod (1 + e t) when with_s is false.
  static BivariatePolynomial linear_product(const std::vector<int>& exponents, bool with_s);
  /// Parses the output of to_string, e.g. "1 + 3*t + 2*t^2" or "s*t + 2*s^2".
  static BivariatePolynomial parse(const std::string& text);

  const std::map<Exponents, long>& terms() const { return terms_; }
  long coefficient(int s_degree, int t_degree) const;
  void add_term(int s_degree, int t_degree, long coefficient);
  bool depends_on_s() const;
  long evaluate_sum() const;
  /// s <- t^2.
  Polynomial specialize() const;
  std::string to_string() const;

  friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;
  friend bool operator<(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.terms_ < b.terms_; }

 private:
  std::map<Exponents, long> terms_;
};

struct SphericalGroup {
  std::vector<Matrix> elements;    // breadth-first order, identity first
  std::vector<int> word_lengths;   // Coxeter length of each element
  std::vector<int> elliptic_dims;  // rank(A - I)

  std::size_t size() const { return elements.size(); }
};

/// Closure of the simple reflections. Throws BudgetExceeded past the cap.
SphericalGroup enumerate_w0(const RootSystem& rs, std::size_t cap = 100'000);

/// sum over u in W_0 of t^e(u).
Polynomial spherical_genfun(const SphericalGroup& group);

/// Evaluates f_lambda for many lambda against one enumeration of W_0.
class GenfunEngine {
 public:
  explicit GenfunEngine(const RootSystem& rs, std::size_t w0_cap = 100'000, ReflenConfig config = {});

  const RootSystem& root_system() const { return rs_; }
  const SphericalGroup& group() const { return group_; }

  /// Throws DomainError when lambda is not in the coroot lattice.
  BivariatePolynomial local_genfun(const Vector& lambda);
  /// lambda lies in no proper root subspace, i.e. d(t_lambda) = rank.
  bool is_generic(const Vector& lambda);
  /// Dominant representative of the W_0-orbit of lambda.
  Vector dominant(const Vector& lambda) const;

 private:
  const RootSystem& rs_;
  SphericalGroup group_;
  DimensionCalculator calc_;
};

BivariatePolynomial local_genfun(const RootSystem& rs, const Vector& lambda);

struct CorootClass {
  BivariatePolynomial polynomial;
  std::vector<std::vector<long>> points;  // simple-coroot coordinates
};

/// Groups lattice points with simple-coroot coordinates in [-radius, radius]
/// by their local generating function. Points are listed by increasing
/// coordinate l1-norm, then lexicographically; classes by their first point,
/// so the class of the origin comes first.
std::vector<CorootClass> classify_coroots(GenfunEngine& engine, int radius);
std::vector<CorootClass> classify_coroots(const RootSystem& rs, int radius);

}  // namespace coxlen
