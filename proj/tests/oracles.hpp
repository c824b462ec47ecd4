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

// Test-only brute-force oracles. None of these call into the elimination,
// simplex, or enumeration code they are used to check.

#ifndef PROXLAB_TESTS_ORACLES_HPP_
#define PROXLAB_TESTS_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "matrix.hpp"
#include "opt.hpp"

namespace proxlab::testing {

// Laplace expansion along the first row.
inline Rational cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, cc++) = m(i, k);
      }
    }
    const Rational term = m(0, j) * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Cramer's rule with cofactor determinants.
inline std::optional<Vector> cramer_solve(const Matrix& m, const Vector& rhs) {
  const Rational d = cofactor_det(m);
  if (d.is_zero()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Matrix mj = m;
    for (std::size_t i = 0; i < m.rows(); ++i) mj(i, j) = rhs[i];
    x[j] = cofactor_det(mj) / d;
  }
  return x;
}

inline Rational brute_max_abs_subdet(const Matrix& a) {
  Rational best = 0;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  for (std::uint32_t rmask = 1; rmask < (1u << m); ++rmask) {
    for (std::uint32_t cmask = 1; cmask < (1u << n); ++cmask) {
      if (__builtin_popcount(rmask) != __builtin_popcount(cmask)) continue;
      IndexSet rows, cols;
      for (std::size_t i = 0; i < m; ++i) {
        if (rmask & (1u << i)) rows.push_back(i);
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (cmask & (1u << j)) cols.push_back(j);
      }
      best = max(best, cofactor_det(a.submatrix(rows, cols)).abs());
    }
  }
  return best;
}

inline bool feasible_point(const Matrix& a, const Vector& b, const Vector& x) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(r, j) * x[j];
    if (s > b[r]) return false;
  }
  return true;
}

// Best vertex over all n-row subsets, solved by Cramer's rule. Assumes a
// bounded objective and full column rank.
inline std::optional<std::pair<Vector, Rational>> brute_lp(const Matrix& a, const Vector& b,
                                                           const Vector& c) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  std::optional<std::pair<Vector, Rational>> best;
  if (n == 0) {
    if (feasible_point(a, b, {})) return std::make_pair(Vector{}, Rational(0));
    return std::nullopt;
  }
  std::vector<std::size_t> idx(n);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
    IndexSet rows;
    Vector rhs;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        rows.push_back(i);
        rhs.push_back(b[i]);
      }
    }
    auto x = cramer_solve(a.select_rows(rows), rhs);
    if (!x || !feasible_point(a, b, *x)) continue;
    Rational v = 0;
    for (std::size_t j = 0; j < n; ++j) v += c[j] * (*x)[j];
    if (!best || v > best->second) best = std::make_pair(*x, v);
  }
  return best;
}

// Optimal value of a boxed mixed program by enumerating every integer
// assignment of `intset` in [-U, U] and solving the continuous remainder with
// brute_lp. Returns nullopt when infeasible.
inline std::optional<Rational> brute_mip_value(const Instance& inst, const IndexSet& intset) {
  const std::size_t n = inst.n();
  const Matrix a = inst.constraint_matrix();
  const Vector b = inst.constraint_rhs();
  const long u = inst.box->get_si();
  std::vector<bool> is_int(n, false);
  for (auto j : intset) is_int[j] = true;
  IndexSet free_coords;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_int[j]) free_coords.push_back(j);
  }
  std::optional<Rational> best;
  std::vector<long> assign(intset.size(), -u);
  while (true) {
    Matrix sa(a.rows(), free_coords.size());
    Vector sb = b;
    Vector sc;
    Rational offset = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t k = 0; k < free_coords.size(); ++k) sa(r, k) = a(r, free_coords[k]);
      for (std::size_t k = 0; k < intset.size(); ++k) sb[r] -= a(r, intset[k]) * Rational(assign[k]);
    }
    for (auto j : free_coords) sc.push_back(inst.c[j]);
    for (std::size_t k = 0; k < intset.size(); ++k) offset += inst.c[intset[k]] * Rational(assign[k]);
    if (auto r = brute_lp(sa, sb, sc)) {
      const Rational v = r->second + offset;
      if (!best || v > *best) best = v;
    }
    std::size_t k = 0;
    while (k < assign.size() && assign[k] == u) assign[k++] = -u;
    if (k == assign.size()) break;
    ++assign[k];
  }
  return best;
}

inline Matrix random_int_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Matrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  }
  return a;
}

inline Vector random_int_vector(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Vector v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace proxlab::testing

#endif  // PROXLAB_TESTS_ORACLES_HPP_
