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

// Dense exact vectors and matrices over Rational, plus the elimination
// primitives (determinant, rank, kernel, solve) the rest of the library
// builds on. Dimensions are checked on every operation.

#ifndef PROXLAB_MATRIX_HPP_
#define PROXLAB_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "rational.hpp"

namespace proxlab {

using Vector = std::vector<Rational>;
// Sorted, duplicate-free, 0-based coordinate or row indices.
using IndexSet = std::vector<std::size_t>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const;
  Vector col_vector(std::size_t j) const;

  Matrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
  Matrix select_rows(const IndexSet& rows) const;
  Matrix transpose() const;
  // [this; other]
  Matrix stack(const Matrix& other) const;
  void append_row(std::span<const Rational> row);

  bool is_integral() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vector operator*(const Matrix& m, std::span<const Rational> v);
Matrix operator*(const Matrix& a, const Matrix& b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector sub(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(std::span<const Rational> a, const Rational& s);
Rational inf_norm(std::span<const Rational> v);
bool is_zero(std::span<const Rational> v);
bool is_integral(std::span<const Rational> v);
bool is_integral_on(std::span<const Rational> v, const IndexSet& coords);
Vector zeros(std::size_t n);
Vector unit(std::size_t n, std::size_t i);

Rational det(const Matrix& m);
std::size_t rank(const Matrix& m);
Vector solve(const Matrix& m, std::span<const Rational> rhs);
Matrix inverse(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);
Vector gcd_normalize(std::span<const Rational> v);

// Indices of a maximal linearly independent subset of rows, chosen greedily
// in index order.
IndexSet independent_rows(const Matrix& m);

IndexSet index_union(const IndexSet& a, const IndexSet& b);
IndexSet full_index_set(std::size_t n);

}  // namespace proxlab

#endif  // PROXLAB_MATRIX_HPP_
