#pragma once

// Reflection length in affine Weyl groups: the elliptic dimension e(w), the
// differential dimension d(w), length 2d + e, explicit minimum-length
// reflection factorizations and translation-elliptic splits.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coxlen/affgroup.hpp"
#include "coxlen/rootsys.hpp"

namespace coxlen {

struct ReflenConfig {
  /// Maximum number of root subspaces materialised by one d-search.
  std::size_t flat_cap = 2'000'000;
  /// Maximum number of factorizations visited by the Hurwitz search.
  std::size_t hurwitz_budget = 1'000'000;
};

struct DimensionReport {
  int e = 0;
  int d = 0;
  int dim = 0;
  int length = 0;
  /// Root indices forming a basis of a smallest root subspace containing Mov(w).
  std::vector<std::size_t> witness_roots;

  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

struct ReflectionFactorization {
  std::vector<AffineReflection> factors;

  std::size_t size() const { return factors.size(); }
  /// Left-to-right product of the factors.
  AffineElement product(std::size_t ambient) const;
};

enum class HurwitzDirection { Left, Right };

/// rank(linear - I).
int elliptic_dimension(const AffineElement& w);

/// The root subspaces containing a fixed linear subspace U, seen in V/U and
/// enumerated lazily by dimension. Used to answer "smallest root subspace
/// containing U and a given vector" queries for many vectors at once.
class QuotientArrangement {
 public:
  QuotientArrangement(const RootSystem& rs, const LinearSpan& u, std::size_t flat_cap);

  struct Hit {
    int dim = 0;                     // dimension of the flat in V/U
    std::vector<std::size_t> lifts;  // one root per spanning line
  };

  /// Smallest flat containing the image of v. Throws BudgetExceeded when the
  /// flat cap is reached first.
  Hit locate(const Vector& v);

  std::size_t line_count() const { return lines_.size(); }

 private:
  struct Flat {
    LinearSpan span;
    std::vector<std::size_t> lines;
  };

  Vector project(const Vector& v) const;
  bool grow();

  Matrix quotient_;
  std::size_t rank_ = 0;
  std::size_t flat_cap_;
  std::size_t flat_count_ = 0;
  std::vector<Vector> lines_;
  std::vector<std::size_t> line_roots_;
  std::vector<std::vector<Flat>> levels_;
};

/// Computes dimension reports, caching the quotient arrangement for every
/// elliptic part it has seen. Not thread safe; use one per thread.
class DimensionCalculator {
 public:
  explicit DimensionCalculator(const RootSystem& rs, ReflenConfig config = {});

  const RootSystem& root_system() const { return rs_; }
  const ReflenConfig& config() const { return config_; }

  int differential_dimension(const AffineElement& w);
  DimensionReport report(const AffineElement& w);

 private:
  QuotientArrangement& arrangement_for(const LinearSpan& u);

  const RootSystem& rs_;
  ReflenConfig config_;
  std::map<std::string, std::unique_ptr<QuotientArrangement>> cache_;
};

int differential_dimension(const RootSystem& rs, const AffineElement& w, const ReflenConfig& config = {});
DimensionReport dimension_report(const RootSystem& rs, const AffineElement& w, const ReflenConfig& config = {});

/// e(v) reflections with independent roots whose hyperplanes contain a common
/// fixed point of v. Throws DomainError when v is not elliptic.
ReflectionFactorization factor_elliptic(const RootSystem& rs, const AffineElement& v);

/// A factorization of length exactly 2d + e.
ReflectionFactorization min_factorization(const RootSystem& rs, const AffineElement& w,
                                          const ReflenConfig& config = {});

/// Replaces the pair at positions (i, i+1), 1-based, by (r r' r, r) or
/// (r', r' r r'). Throws DomainError when i is out of range.
ReflectionFactorization hurwitz_move(const RootSystem& rs, const ReflectionFactorization& f, std::size_t i,
                                     HurwitzDirection dir);

struct TranslationEllipticSplit {
  AffineElement translation;  // t_mu with length 2d(w)
  AffineElement elliptic;     // u with length e(w)
  ReflectionFactorization factorization;  // first 2d factors multiply to t_mu
  std::size_t states_explored = 0;
};

/// w = t_mu * u with l_R(t_mu) = 2d(w) and l_R(u) = e(w), found by a
/// breadth-first Hurwitz search for a factorization whose first 2d factors
/// project pairwise to equal reflections. Throws BudgetExceeded when the
/// search budget runs out.
TranslationEllipticSplit translation_elliptic_split(const RootSystem& rs, const AffineElement& w,
                                                    const ReflenConfig& config = {});

}  // namespace coxlen
