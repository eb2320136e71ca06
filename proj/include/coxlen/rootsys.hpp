#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxlen/linalg.hpp"

namespace coxlen {

enum class Family { A, B, C, D, G, F };

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Parses "A2", "b3", "F4", ... Throws ParseError on bad syntax and
/// UnsupportedError on a family/rank outside A1-A8, B1-B8, C1-C8, D2-D8, G2, F4.
RootSystemSpec parse_type(std::string_view text);
void validate(const RootSystemSpec& spec);

/// Exponents e_1 <= ... <= e_n of the spherical group of the given type.
std::vector<int> exponents(const RootSystemSpec& spec);

/// A crystallographic root system in its standard (Bourbaki) coordinates.
///
/// A_n lives in the zero-sum hyperplane of Q^{n+1}; G_2 likewise in the
/// zero-sum plane of Q^3, which keeps every coordinate rational. All other
/// types use Q^n. Roots are stored in ascending lexicographic order of their
/// coordinates, and that order is the canonical order everywhere else.
/// The object is immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(const RootSystemSpec& spec);
  /// Same type, but generated from the given simple roots. Used to check
  /// that results do not depend on how root lengths are normalised.
  RootSystem(const RootSystemSpec& spec, std::vector<Vector> simple_roots);

  const RootSystemSpec& spec() const { return spec_; }
  std::string name() const { return spec_.name(); }
  int rank() const { return spec_.rank; }
  std::size_t ambient_dim() const { return ambient_; }
  bool reducible() const { return spec_.family == Family::D && spec_.rank == 2; }

  const std::vector<Vector>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  const Vector& root(std::size_t i) const { return roots_[i]; }
  const Vector& coroot(std::size_t i) const { return coroots_[i]; }
  /// Throws ParseError when alpha is not a root.
  Vector coroot(const Vector& alpha) const;
  std::optional<std::size_t> index_of(const Vector& v) const;
  bool is_positive(std::size_t i) const { return positive_[i]; }
  /// Indices of positive roots, ascending.
  const std::vector<std::size_t>& positive_roots() const { return positive_list_; }
  /// Index of the positive root among {alpha_i, -alpha_i}.
  std::size_t positive_of(std::size_t i) const { return positive_of_[i]; }
  std::size_t negation(std::size_t i) const { return negation_[i]; }
  /// Index of r_{alpha_i}(alpha_j).
  std::size_t reflect(std::size_t i, std::size_t j) const { return reflect_[i * roots_.size() + j]; }
  /// The Cartan integer <alpha_j, alpha_i^vee>.
  long pairing(std::size_t j, std::size_t i) const;
  std::size_t highest_root() const { return highest_; }

  const std::vector<Vector>& simple_roots() const { return simple_; }
  const std::vector<std::size_t>& simple_indices() const { return simple_idx_; }
  std::vector<Vector> simple_coroots() const;
  /// Coefficients of root i in the simple-root basis.
  const std::vector<long>& simple_coefficients(std::size_t i) const { return coefficients_[i]; }

  /// Matrix of the linear reflection r_alpha : x -> x - <x, alpha> alpha^vee.
  Matrix reflection_matrix(std::size_t i) const;

  /// Basis of the orthogonal complement of V = span(roots) in the ambient space.
  const std::vector<Vector>& normals() const { return normals_; }
  bool in_span(const Vector& v) const;

  const std::vector<int>& exponents() const { return exponents_; }
  long w0_order() const { return w0_order_; }

  /// Z-basis of the coroot lattice obtained by Hermite reduction of all coroots.
  const std::vector<Vector>& coroot_lattice_basis() const { return lattice_basis_; }
  bool in_coroot_lattice(const Vector& v) const;
  /// Integer coordinates of v in the simple-coroot basis, if v is in the lattice.
  std::optional<std::vector<long>> coroot_coordinates(const Vector& v) const;
  Vector from_coroot_coordinates(const std::vector<long>& coeffs) const;

 private:
  void build(std::vector<Vector> simple);

  RootSystemSpec spec_;
  std::size_t ambient_ = 0;
  std::vector<Vector> roots_;
  std::vector<Vector> coroots_;
  std::vector<bool> positive_;
  std::vector<std::size_t> positive_list_;
  std::vector<std::size_t> positive_of_;
  std::vector<std::size_t> negation_;
  std::vector<std::size_t> reflect_;
  std::vector<std::vector<long>> coefficients_;
  std::vector<Vector> simple_;
  std::vector<std::size_t> simple_idx_;
  std::vector<Vector> normals_;
  std::vector<int> exponents_;
  long w0_order_ = 1;
  std::vector<Vector> lattice_basis_;
  std::size_t highest_ = 0;
};

/// Z-basis (Hermite normal form rows, nonzero only) of the lattice spanned by
/// the given rational vectors.
std::vector<Vector> lattice_basis(const std::vector<Vector>& generators, std::size_t ambient);

/// True when v is an integer combination of the (independent) basis vectors.
bool in_lattice(const std::vector<Vector>& basis, const Vector& v);

}  // namespace coxlen
