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

// Cones of the form {x : B x <= 0} where B is A with some rows negated:
// sign partition against a direction, integer generators with entries
// bounded by Delta(A), and exact conic decomposition.

#ifndef PROXLAB_CONES_HPP_
#define PROXLAB_CONES_HPP_

#include "matrix.hpp"
#include "subdet.hpp"

namespace proxlab {

struct SignPartition {
  IndexSet neg_rows;     // a_i^T y < 0
  IndexSet nonneg_rows;  // a_i^T y >= 0
};

// Throws InvalidInput when y is zero.
SignPartition sign_partition(const Matrix& a, const Vector& y);

// Row i of the result is a_i for i in neg_rows and -a_i otherwise, so the
// cone {x : A1 x <= 0, A2 x >= 0} is {x : B x <= 0}.
Matrix cone_matrix(const Matrix& a, const SignPartition& p);

struct RaySet {
  std::vector<Vector> rays;  // primitive integer, sorted lexicographically
  Integer delta_bound;       // Delta(B); every ray has max-norm <= this
};

// Generators of {x : B x <= 0}. For pointed cones these are the primitive
// kernel vectors of rank-(n-1) row subsets of B that lie in the cone. When
// rank(B) < n, unit rows are added to the candidate subsets, which yields the
// extreme rays of the cone intersected with every orthant; their entries are
// still minors of B.
RaySet cone_rays(const Matrix& b, std::uint64_t subdet_budget = kDefaultSubdetBudget);

bool in_cone(const Matrix& b, std::span<const Rational> x);

struct ConicCombination {
  Vector lambda;  // one coefficient per ray, >= 0
};

// Basic nonnegative solution of sum lambda_i v^i = y minimizing sum lambda_i.
// Throws InternalError if y is not in the cone generated by the rays.
ConicCombination decompose(const Vector& y, const RaySet& rays);

}  // namespace proxlab

#endif  // PROXLAB_CONES_HPP_
