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

// Desk-scale exact solvers for the family
//
//   max { c^T x : A x <= b, x_i integer for i in S }
//
// indexed by the integrality set S. Mixed programs are solved by enumerating
// integer assignments coordinate by coordinate in increasing value, with an
// exact LP over the remaining coordinates at every node. Each node's LP bound
// prunes subtrees that cannot beat (or tie earlier than) the incumbent, so the
// reported optimum is the lexicographically smallest optimal assignment.

#ifndef PROXLAB_OPT_HPP_
#define PROXLAB_OPT_HPP_

#include <cstdint>
#include <optional>

#include "matrix.hpp"
#include "simplex.hpp"
#include "subdet.hpp"

namespace proxlab {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

struct Instance {
  Matrix A;  // integer m x n
  Vector b;
  Vector c;
  IndexSet I;
  IndexSet J;
  std::optional<Integer> box;  // adds -U <= x_i <= U for every i

  std::size_t n() const { return A.cols(); }
  std::size_t m() const { return A.rows(); }

  // A, or [A; Id; -Id] when a box is set.
  Matrix constraint_matrix() const;
  Vector constraint_rhs() const;

  // Throws InvalidInput describing the first violated invariant.
  void validate() const;
};

struct SolveResult {
  LpStatus status = LpStatus::kInfeasible;
  Vector point;
  Rational value;
  std::uint64_t nodes = 0;
};

struct SolveOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t subdet_budget = kDefaultSubdetBudget;
};

SolveResult lp_solve(const Instance& inst);
SolveResult mip_solve(const Instance& inst, const IndexSet& intset, const SolveOptions& opts = {});
// Throws Refusal("no_optimum", ...) unless the program has an optimum.
Rational optimal_value(const Instance& inst, const IndexSet& intset, const SolveOptions& opts = {});

struct NearestResult {
  Vector point;
  Rational distance;
  Rational value;
  std::uint64_t nodes = 0;
};

// Optimal solution of the intset program closest to `target` in the max norm.
NearestResult nearest_optimal(const Instance& inst, const IndexSet& intset, const Vector& target,
                              const SolveOptions& opts = {});

// True iff x satisfies all rows (box included) and is integral on intset.
bool is_feasible(const Instance& inst, const IndexSet& intset, std::span<const Rational> x);

// Generic engine behind mip_solve and nearest_optimal, also used to maximize
// over lattice-constrained boxes elsewhere.
struct MixedProgram {
  Matrix a;
  Vector b;
  Vector objective;
  IndexSet integer_coords;
};

struct MixedResult {
  LpStatus status = LpStatus::kInfeasible;
  Vector x;
  Rational value;
  std::uint64_t nodes = 0;
};

// Lexicographically smallest maximizing integer assignment. `achievable` is
// an objective value known to be attained by some feasible point; it tightens
// the coordinate ranges. Throws Refusal("budget_exceeded") past `budget`
// nodes and Refusal("unbounded_enumeration") when a coordinate range is
// infinite.
MixedResult maximize_mixed(const MixedProgram& prog, const std::optional<Rational>& achievable,
                           std::uint64_t budget);

}  // namespace proxlab

#endif  // PROXLAB_OPT_HPP_
