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

#ifndef PROXLAB_SUBDET_HPP_
#define PROXLAB_SUBDET_HPP_

#include <cstdint>

#include "matrix.hpp"

namespace proxlab {

inline constexpr std::uint64_t kDefaultSubdetBudget = 2'000'000;

// Result of exhaustively scanning every square submatrix of an integer
// matrix. The witness is the first maximizer in enumeration order (size,
// then row subset, then column subset, each lexicographic).
struct DeltaReport {
  Integer delta = 0;
  IndexSet witness_rows;
  IndexSet witness_cols;
  bool is_tu = true;
  // rank(A) = n and every n x n minor has absolute value at most 2.
  bool lemma7_eligible = false;
  std::uint64_t inspected = 0;
};

// Number of square submatrices of an m x n matrix.
std::uint64_t square_submatrix_count(std::size_t m, std::size_t n);

DeltaReport max_abs_subdet(const Matrix& a, std::uint64_t budget = kDefaultSubdetBudget);
Integer delta_of(const Matrix& a, std::uint64_t budget = kDefaultSubdetBudget);
bool is_totally_unimodular(const Matrix& a, std::uint64_t budget = kDefaultSubdetBudget);

struct BoxStack {
  Matrix stacked;  // [A; Id; -Id]
  Integer delta_before;
  Integer delta_after;
  bool preserved = false;
};

// Appends the box rows -U <= x_i <= U. Throws InternalError if the scan shows
// a change in Delta for a matrix with Delta(A) >= 1.
BoxStack stack_box_preserves_delta(const Matrix& a, const Integer& box,
                                   std::uint64_t budget = kDefaultSubdetBudget);

// [A; Id; -Id] without the Delta re-check.
Matrix box_rows_appended(const Matrix& a);

}  // namespace proxlab

#endif  // PROXLAB_SUBDET_HPP_
