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
#include "matrix.hpp"
#include "oracles.hpp"

using namespace proxlab;
using proxlab::testing::cofactor_det;
using proxlab::testing::random_int_matrix;

namespace {

Matrix example1(int delta) { return Matrix{{-delta, 0}, {delta, -1}}; }

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("-1") == Rational(-1));
  CHECK(Rational::parse("2/3").str() == "2/3");
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK(Rational::parse("+5").str() == "5");
  CHECK(Rational::parse("-0/7").str() == "0");
  CHECK(Rational::parse("-6/4").den() == 2);
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("1/-2"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("1.5"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse(""), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("/3"), InvalidInput);
  CHECK(Rational::parse("-7/2").floor() == -4);
  CHECK(Rational::parse("-7/2").ceil() == -3);
}

TEST_CASE("det examples") {
  CHECK(det(example1(3)) == 3);
  CHECK(det(Matrix::identity(3)) == 1);
  CHECK(det(Matrix{{2, 1}, {1, 2}}) == 3);
  CHECK(det(Matrix{{Rational(1, 2), 0}, {0, Rational(2, 3)}}) == Rational(1, 3));
  CHECK_THROWS_AS(det(Matrix{{1, 2, 3}}), DimensionError);
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(2)) == 2);
  CHECK(rank(Matrix{{1, 1}, {2, 2}}) == 1);
  CHECK(rank(example1(3)) == 2);
  CHECK(rank(Matrix(3, 2)) == 0);
}

TEST_CASE("kernel_basis examples") {
  auto k = kernel_basis(Matrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK((k[0] == Vector{1, -1} || k[0] == Vector{-1, 1}));
  CHECK(kernel_basis(Matrix::identity(2)).empty());
  k = kernel_basis(Matrix{{-3, 1}});
  REQUIRE(k.size() == 1);
  CHECK((k[0] == Vector{1, 3} || k[0] == Vector{-1, -3}));
}

TEST_CASE("solve examples") {
  CHECK(solve(Matrix{{1, 0}, {0, 2}}, Vector{1, 1}) == Vector{1, Rational(1, 2)});
  CHECK(solve(Matrix::identity(3), Vector{4, -2, Rational(7, 3)}) == Vector{4, -2, Rational(7, 3)});
  CHECK(solve(example1(3), Vector{-1, 0}) == Vector{Rational(1, 3), 1});
  CHECK_THROWS_AS(solve(Matrix{{1, 1}, {2, 2}}, Vector{1, 2}), SingularMatrix);
}

TEST_CASE("gcd_normalize examples") {
  CHECK(gcd_normalize(Vector{2, 4}) == Vector{1, 2});
  CHECK(gcd_normalize(Vector{0, -3}) == Vector{0, -1});
  CHECK(gcd_normalize(Vector{1, 3}) == Vector{1, 3});
  CHECK_THROWS_AS(gcd_normalize(Vector{0, 0}), InvalidInput);
  CHECK_THROWS_AS(gcd_normalize(Vector{Rational(1, 2), 1}), InvalidInput);
}

TEST_CASE("property: Bareiss det equals cofactor expansion") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix a = random_int_matrix(rng, n, n, 4);
    const Rational d = det(a);
    CHECK(d == cofactor_det(a));
    CHECK(d.is_integer());
  }
}

TEST_CASE("property: solve inverts matvec") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix a = random_int_matrix(rng, n, n, 3);
    if (det(a).is_zero()) continue;
    Vector x = proxlab::testing::random_int_vector(rng, n, 5);
    x[0] = x[0] / Rational(3);
    CHECK(solve(a, a * x) == x);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("property: kernel vectors annihilate and count n - rank") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 4;
    const std::size_t n = 1 + (trial / 4) % 5;
    Matrix a = random_int_matrix(rng, m, n, 2);
    if (trial % 3 == 0 && m > 1) {
      for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = a(0, j) * Rational(2);
    }
    const auto basis = kernel_basis(a);
    CHECK(basis.size() == n - rank(a));
    for (const auto& v : basis) {
      CHECK(is_zero(a * v));
      CHECK(is_integral(v));
      CHECK_FALSE(is_zero(v));
    }
    if (basis.size() == 1) {
      CHECK(gcd_normalize(basis[0]) == basis[0]);
    }
  }
}
