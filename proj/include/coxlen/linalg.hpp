#pragma once

// Exact rational linear algebra over GMP rationals.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coxlen {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Vector& v);

/// True when q has denominator 1.
bool is_integer(const Rational& q);
long to_long(const Rational& q);

Rational dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& c, const Vector& a);
bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector from_longs(const std::vector<long>& values);

/// Compact textual key; equal vectors give equal keys.
std::string key(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string key() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
Rational determinant(Matrix m);
/// Throws InternalError when m is singular.
Matrix inverse(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);
/// Some x with m x = b, or nothing when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// A linear subspace of Q^n kept in reduced row echelon form, so two spans
/// are equal exactly when their row lists are equal.
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t ambient = 0) : ambient_(ambient) {}
  LinearSpan(std::size_t ambient, const std::vector<Vector>& generators);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }

  /// Adds v; returns false when v was already in the span.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  bool contains(const LinearSpan& other) const;
  /// Residue of v after elimination against the basis (zero iff contained).
  Vector reduce(const Vector& v) const;
  /// Orthogonal projection of v onto the span.
  Vector project(const Vector& v) const;

  std::string key() const;

  friend bool operator==(const LinearSpan& a, const LinearSpan& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Image (column space) of m as a span.
LinearSpan column_space(const Matrix& m);

}  // namespace coxlen
