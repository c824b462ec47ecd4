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

#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "opt.hpp"
#include "oracles.hpp"

using namespace proxlab;
using proxlab::testing::brute_lp;
using proxlab::testing::brute_mip_value;
using proxlab::testing::random_int_matrix;
using proxlab::testing::random_int_vector;

namespace {

Instance example1(int delta) {
  Instance inst;
  inst.A = Matrix{{-delta, 0}, {delta, -1}};
  inst.b = {-1, 0};
  inst.c = {0, -1};
  return inst;
}

Instance single_row(int rhs) {
  Instance inst;
  inst.A = Matrix{{1}};
  inst.b = {rhs};
  inst.c = {1};
  return inst;
}

// Random boxed instance that is integer-feasible by construction.
Instance random_boxed(std::mt19937_64& rng, std::size_t n, std::size_t m, int bound, int box) {
  Instance inst;
  inst.A = random_int_matrix(rng, m, n, bound);
  const Vector x0 = random_int_vector(rng, n, box);
  std::uniform_int_distribution<int> slack(0, 2);
  inst.b = inst.A * x0;
  for (auto& v : inst.b) v += slack(rng);
  inst.c = random_int_vector(rng, n, bound);
  inst.box = box;
  return inst;
}

}  // namespace

TEST_CASE("lp_solve examples") {
  const SolveResult ex1 = lp_solve(example1(3));
  REQUIRE(ex1.status == LpStatus::kOptimal);
  CHECK(ex1.point == Vector{Rational(1, 3), 1});
  CHECK(ex1.value == -1);

  Instance contradictory;
  contradictory.A = Matrix{{1}, {-1}};
  contradictory.b = {0, -1};
  contradictory.c = {1};
  CHECK(lp_solve(contradictory).status == LpStatus::kInfeasible);

  const SolveResult five = lp_solve(single_row(5));
  REQUIRE(five.status == LpStatus::kOptimal);
  CHECK(five.point == Vector{5});
  CHECK(five.value == 5);

  Instance unbounded = single_row(5);
  unbounded.c = {-1};
  CHECK(lp_solve(unbounded).status == LpStatus::kUnbounded);
}

TEST_CASE("lp handles lineality and zero-column programs") {
  // x1 + x2 <= 2 in R^2: c along the row is bounded, c across it is not.
  Instance strip;
  strip.A = Matrix{{1, 1}};
  strip.b = {2};
  strip.c = {1, 1};
  const SolveResult r = lp_solve(strip);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.value == 2);
  strip.c = {1, 0};
  CHECK(lp_solve(strip).status == LpStatus::kUnbounded);

  const LpResult empty = lp_maximize(Matrix(2, 0), Vector{0, 1}, Vector{});
  CHECK(empty.status == LpStatus::kOptimal);
  CHECK(lp_maximize(Matrix(1, 0), Vector{-1}, Vector{}).status == LpStatus::kInfeasible);
}

TEST_CASE("mip_solve examples") {
  const Instance ex1 = example1(3);
  const SolveResult both = mip_solve(ex1, {0, 1});
  REQUIRE(both.status == LpStatus::kOptimal);
  CHECK(both.point == Vector{1, 3});
  CHECK(both.value == -3);
  const SolveResult first = mip_solve(ex1, {0});
  REQUIRE(first.status == LpStatus::kOptimal);
  CHECK(first.point == Vector{1, 3});
  const SolveResult none = mip_solve(ex1, {});
  CHECK(none.point == lp_solve(ex1).point);
  CHECK(none.value == lp_solve(ex1).value);
}

TEST_CASE("mip_solve refusals and validation") {
  Instance unbounded = single_row(5);
  unbounded.c = {-1};
  CHECK_THROWS_AS(mip_solve(unbounded, {0}), Refusal);
  CHECK_THROWS_AS(mip_solve(example1(3), {2}), InvalidInput);
  CHECK_THROWS_AS(mip_solve(example1(3), {1, 0}), InvalidInput);

  Instance big = example1(3);
  big.box = 50;
  SolveOptions tiny;
  tiny.budget = 2;
  CHECK_THROWS_AS(mip_solve(big, {0, 1}, tiny), Refusal);

  Instance bad = example1(3);
  bad.A(0, 0) = Rational(1, 2);
  CHECK_THROWS_AS(lp_solve(bad), InvalidInput);
}

TEST_CASE("optimal_value examples") {
  CHECK(optimal_value(example1(3), {}) == -1);
  CHECK(optimal_value(single_row(5), {}) == 5);
  CHECK(optimal_value(example1(3), {0, 1}) == -3);
  Instance infeasible = single_row(5);
  infeasible.A = Matrix{{1}, {-1}};
  infeasible.b = {0, -1};
  CHECK_THROWS_AS(optimal_value(infeasible, {}), Refusal);
}

TEST_CASE("nearest_optimal examples") {
  const Instance ex1 = example1(3);
  const Vector w{Rational(1, 3), 1};
  NearestResult r = nearest_optimal(ex1, {0, 1}, w);
  CHECK(r.distance == 2);
  CHECK(r.point == Vector{1, 3});
  r = nearest_optimal(ex1, {0}, w);
  CHECK(r.distance == 2);
  r = nearest_optimal(ex1, {0, 1}, Vector{1, 3});
  CHECK(r.distance == 0);
}

TEST_CASE("mip ties resolve to the lexicographically smallest assignment") {
  // max x2 over 0 <= x1 <= 2, x2 <= 1: every x1 in {0,1,2} is optimal.
  Instance inst;
  inst.A = Matrix{{-1, 0}, {1, 0}, {0, 1}};
  inst.b = {0, 2, 1};
  inst.c = {0, 1};
  inst.box = 3;
  const SolveResult r = mip_solve(inst, {0, 1});
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.point == Vector{0, 1});
  const NearestResult near = nearest_optimal(inst, {0, 1}, Vector{Rational(9, 5), 1});
  CHECK(near.point == Vector{2, 1});
  CHECK(near.distance == Rational(1, 5));
}

TEST_CASE("property: simplex agrees with vertex enumeration") {
  std::mt19937_64 rng(101);
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t m = 1 + (trial / 4) % 8;
    Instance inst = random_boxed(rng, n, m, 3, 4);
    const Matrix a = inst.constraint_matrix();
    const Vector b = inst.constraint_rhs();
    const LpResult simplex = lp_maximize(a, b, inst.c);
    const auto oracle = brute_lp(a, b, inst.c);
    REQUIRE(oracle.has_value());
    REQUIRE(simplex.status == LpStatus::kOptimal);
    CHECK(simplex.value == oracle->second);
    CHECK(satisfies(a, b, simplex.x));
    const LpResult venum = lp_by_vertex_enumeration(a, b, inst.c);
    CHECK(venum.value == oracle->second);
    ++compared;
  }
  CHECK(compared == 120);
}

TEST_CASE("property: relaxation dominance and brute-force MIP agreement") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t m = 1 + trial % 4;
    const Instance inst = random_boxed(rng, n, m, 3, 3);
    std::uniform_int_distribution<std::uint32_t> mask_dist(0, (1u << n) - 1);
    IndexSet intset;
    const std::uint32_t mask = mask_dist(rng);
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) intset.push_back(j);
    }
    const SolveResult lp = lp_solve(inst);
    const SolveResult mip = mip_solve(inst, intset);
    REQUIRE(mip.status == LpStatus::kOptimal);
    CHECK(mip.value <= lp.value);
    CHECK(is_feasible(inst, intset, mip.point));
    CHECK(dot(inst.c, mip.point) == mip.value);
    CHECK(mip.value == *brute_mip_value(inst, intset));
  }
}

TEST_CASE("property: nearest_optimal beats every enumerated optimal point") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Instance inst = random_boxed(rng, n, 2, 2, 2);
    const IndexSet all = full_index_set(n);
    const Rational opt = optimal_value(inst, all);
    Vector target = random_int_vector(rng, n, 2);
    target[0] += Rational(1, 3);
    const NearestResult near = nearest_optimal(inst, all, target);
    CHECK(is_feasible(inst, all, near.point));
    CHECK(dot(inst.c, near.point) == opt);

    // Exhaustive scan of the integer box for optimal points.
    Rational best = -1;
    std::vector<long> x(n, -2);
    while (true) {
      Vector p(x.begin(), x.end());
      if (is_feasible(inst, all, p) && dot(inst.c, p) == opt) {
        const Rational d = inf_norm(sub(target, p));
        CHECK(near.distance <= d);
        if (best < 0 || d < best) best = d;
      }
      std::size_t k = 0;
      while (k < n && x[k] == 2) x[k++] = -2;
      if (k == n) break;
      ++x[k];
    }
    CHECK(near.distance == best);
  }
}
