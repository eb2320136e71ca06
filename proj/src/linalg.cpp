#include "coxlen/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "coxlen/errors.hpp"

namespace coxlen {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty number");
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("not a rational number: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw InternalError("rational " + q.get_str() + " is not a machine integer");
  }
  return q.get_num().get_si();
}

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Rational& c, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

Vector from_longs(const std::vector<long>& values) {
  Vector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string key(const Vector& v) {
  std::string out;
  for (const auto& q : v) {
    out += q.get_str();
    out += ',';
  }
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<long>(i * cols_),
                data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::string Matrix::key() const {
  std::string out;
  for (const auto& q : data_) {
    out += q.get_str();
    out += ',';
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  Vector r(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) != 0) r[i] += a(i, j) * v[j];
    }
  }
  return r;
}

RowEchelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw InternalError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InternalError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

std::vector<Vector> nullspace(const Matrix& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

LinearSpan::LinearSpan(std::size_t ambient, const std::vector<Vector>& generators)
    : ambient_(ambient) {
  for (const auto& g : generators) add(g);
}

Vector LinearSpan::reduce(const Vector& v) const {
  Vector r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = r[pivots_[k]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = pivots_[k]; j < ambient_; ++j) r[j] -= f * rows_[k][j];
  }
  return r;
}

bool LinearSpan::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && sgn(r[p]) == 0) ++p;
  if (p == ambient_) return false;
  Rational inv = 1 / r[p];
  for (std::size_t j = p; j < ambient_; ++j) r[j] *= inv;
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (sgn(f) == 0) continue;
    for (std::size_t j = p; j < ambient_; ++j) row[j] -= f * r[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

bool LinearSpan::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool LinearSpan::contains(const LinearSpan& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Vector LinearSpan::project(const Vector& v) const {
  if (rows_.empty()) return zero_vector(ambient_);
  // Solve (B B^T) c = B v, projection = B^T c.
  const std::size_t k = rows_.size();
  Matrix gram(k, k);
  Vector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(rows_[i], v);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(rows_[i], rows_[j]);
  }
  auto c = solve(gram, rhs);
  if (!c) throw InternalError("singular Gram matrix in projection");
  Vector p = zero_vector(ambient_);
  for (std::size_t i = 0; i < k; ++i) p = p + (*c)[i] * rows_[i];
  return p;
}

std::string LinearSpan::key() const {
  std::string out = std::to_string(ambient_) + ":";
  for (const auto& r : rows_) {
    out += coxlen::key(r);
    out += '|';
  }
  return out;
}

LinearSpan column_space(const Matrix& m) {
  LinearSpan span(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) span.add(m.column(j));
  return span;
}

}  // namespace coxlen
