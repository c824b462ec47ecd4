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

// Exact linear programming over polyhedra in inequality form
//
//   maximize c^T x  subject to  A x <= b,  x free.
//
// The simplex walks vertices of {Ax <= b} directly: a basis is a set of n
// linearly independent tight rows. Releasing a row with a negative dual
// multiplier moves along an edge; Bland's smallest-index rule on both the
// released and the entering row guarantees termination. Lineality (rank A < n)
// is removed by intersecting with the orthogonal complement of ker A, so the
// returned point is always a vertex of the (possibly augmented) system.

#ifndef PROXLAB_SIMPLEX_HPP_
#define PROXLAB_SIMPLEX_HPP_

#include <cstdint>

#include "matrix.hpp"

namespace proxlab {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus s);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Vector x;        // set when optimal
  Rational value;  // set when optimal
  // Row indices of the final vertex basis. Indices >= A.rows() refer to the
  // rows appended to cut away lineality.
  IndexSet basis;
  std::uint64_t pivots = 0;
};

LpResult lp_maximize(const Matrix& a, const Vector& b, const Vector& c);

// Brute force over all n-row subsets: solve, keep feasible points, take the
// first best in lexicographic subset order. Requires rank(A) = n and assumes
// the objective is bounded (it cannot certify unboundedness).
LpResult lp_by_vertex_enumeration(const Matrix& a, const Vector& b, const Vector& c);

bool satisfies(const Matrix& a, const Vector& b, std::span<const Rational> x);

}  // namespace proxlab

#endif  // PROXLAB_SIMPLEX_HPP_
