// Copyright 2026 The proxlab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "errors.hpp"

namespace proxlab {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

std::string dims(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_length(std::span<const Rational> a, std::span<const Rational> b,
                         const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": length " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

// Scales each row by the lcm of its denominators. Row scaling changes the
// determinant by a known factor and leaves rank and kernel untouched.
IntRows integer_rows(const Matrix& m, Integer* scale_product) {
  IntRows out(m.rows(), std::vector<Integer>(m.cols()));
  Integer product = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = m(i, j).num() * (l / m(i, j).den());
    }
    product *= l;
  }
  if (scale_product != nullptr) *scale_product = product;
  return out;
}

// Fraction-free Bareiss elimination on a square integer matrix. Every
// division is exact: intermediate entries are minors of the input.
Integer bareiss_det(IntRows a) {
  const std::size_t n = a.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

void divide_by_content(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// Reduced row echelon form over Q. Returns pivot columns.
std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Vector primitive_integer(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  Vector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i] * Rational(l);
  return gcd_normalize(scaled);
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw DimensionError("row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  const auto r = row(i);
  return Vector(r.begin(), r.end());
}

Vector Matrix::col_vector(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

Matrix Matrix::select_rows(const IndexSet& rows) const {
  Matrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::stack(const Matrix& other) const {
  if (rows_ > 0 && other.rows_ > 0 && cols_ != other.cols_) {
    throw DimensionError("stack: " + dims(rows_, cols_) + " over " +
                         dims(other.rows_, other.cols_));
  }
  Matrix out = *this;
  if (out.rows_ == 0) out.cols_ = other.cols_;
  out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
  out.rows_ += other.rows_;
  return out;
}

void Matrix::append_row(std::span<const Rational> row) {
  if (rows_ == 0 && data_.empty()) cols_ = row.size();
  if (row.size() != cols_) throw DimensionError("append_row: wrong length");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

bool Matrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_integer(); });
}

Vector operator*(const Matrix& m, std::span<const Rational> v) {
  if (m.cols() != v.size()) {
    throw DimensionError("matvec: " + dims(m.rows(), m.cols()) + " times " +
                         std::to_string(v.size()));
  }
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), v);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + dims(a.rows(), a.cols()) + " times " +
                         dims(b.rows(), b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a, b, "dot");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) acc += a[i].raw() * b[i].raw();
  }
  return Rational(acc);
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a, b, "add");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector sub(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a, b, "sub");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scale(std::span<const Rational> a, const Rational& s) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

Rational inf_norm(std::span<const Rational> v) {
  Rational best = 0;
  for (const auto& x : v) best = max(best, x.abs());
  return best;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

bool is_integral(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_integer(); });
}

bool is_integral_on(std::span<const Rational> v, const IndexSet& coords) {
  for (auto j : coords) {
    if (j >= v.size()) throw DimensionError("coordinate index out of range");
    if (!v[j].is_integer()) return false;
  }
  return true;
}

Vector zeros(std::size_t n) { return Vector(n); }

Vector unit(std::size_t n, std::size_t i) {
  Vector out(n);
  out.at(i) = 1;
  return out;
}

Rational det(const Matrix& m) {
  if (!m.square()) throw DimensionError("det of non-square " + dims(m.rows(), m.cols()));
  if (m.rows() == 0) throw DimensionError("det of empty matrix");
  Integer scale_product;
  IntRows a = integer_rows(m, &scale_product);
  return Rational(bareiss_det(std::move(a)), scale_product);
}

std::size_t rank(const Matrix& m) {
  IntRows a = integer_rows(m, nullptr);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const Integer f = a[i][c];
      const Integer piv = a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] = a[i][j] * piv - f * a[r][j];
      divide_by_content(a[i]);
    }
    ++r;
  }
  return r;
}

Vector solve(const Matrix& m, std::span<const Rational> rhs) {
  if (!m.square()) throw DimensionError("solve with non-square " + dims(m.rows(), m.cols()));
  if (rhs.size() != m.rows()) throw DimensionError("solve: rhs length mismatch");
  const std::size_t n = m.rows();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots.back() >= n)) {
    throw SingularMatrix("solve: singular " + dims(n, n) + " system");
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw DimensionError("inverse of non-square " + dims(m.rows(), m.cols()));
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) {
    throw SingularMatrix("inverse: singular " + dims(n, n) + " matrix");
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  const IndexSet basis_rows = independent_rows(m);
  const std::size_t r = basis_rows.size();
  if (r == n) return {};

  if (r + 1 == n) {
    // Cofactor construction: entry j is (-1)^j times the minor of the r
    // independent rows with column j deleted.
    Vector v(n);
    if (r == 0) {
      v[0] = 1;
      return {v};
    }
    for (std::size_t j = 0; j < n; ++j) {
      IndexSet cols;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) cols.push_back(c);
      }
      const Rational minor = det(m.submatrix(basis_rows, cols));
      v[j] = (j % 2 == 0) ? minor : -minor;
    }
    return {primitive_integer(v)};
  }

  Matrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
    out.push_back(primitive_integer(v));
  }
  return out;
}

Vector gcd_normalize(std::span<const Rational> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (!x.is_integer()) throw InvalidInput("gcd_normalize: non-integer entry " + x.str());
    g = gcd(g, x.num());
  }
  if (g == 0) throw InvalidInput("gcd_normalize: zero vector");
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(Integer(v[i].num() / g));
  return out;
}

IndexSet independent_rows(const Matrix& m) {
  IndexSet chosen;
  Matrix acc;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Matrix trial = acc.rows() == 0 ? m.select_rows({i}) : acc.stack(m.select_rows({i}));
    if (rank(trial) == chosen.size() + 1) {
      chosen.push_back(i);
      acc = std::move(trial);
      if (chosen.size() == m.cols()) break;
    }
  }
  return chosen;
}

IndexSet index_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet full_index_set(std::size_t n) {
  IndexSet out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace proxlab
