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

#include "simplex.hpp"

#include <optional>
#include <string>

#include "combinatorics.hpp"
#include "errors.hpp"

namespace proxlab {

namespace {

void check_shapes(const Matrix& a, const Vector& b, const Vector& c) {
  if (b.size() != a.rows()) {
    throw DimensionError("lp: rhs has " + std::to_string(b.size()) + " entries for " +
                         std::to_string(a.rows()) + " rows");
  }
  if (c.size() != a.cols()) {
    throw DimensionError("lp: objective has " + std::to_string(c.size()) + " entries for " +
                         std::to_string(a.cols()) + " columns");
  }
}

struct Walk {
  LpStatus status;
  Vector x;
  IndexSet basis;
  std::uint64_t pivots = 0;
};

// Primal simplex from vertex x with tight, independent basis rows.
Walk simplex_walk(const Matrix& a, const Vector& b, const Vector& c, Vector x, IndexSet basis) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  std::vector<bool> in_basis(m, false);
  for (auto r : basis) in_basis[r] = true;
  std::uint64_t pivots = 0;

  while (true) {
    const Matrix binv = inverse(a.select_rows(basis));
    // Dual multipliers: A_B^T u = c.
    std::optional<std::size_t> release;
    for (std::size_t k = 0; k < n; ++k) {
      mpq_class u = 0;
      for (std::size_t j = 0; j < n; ++j) u += binv(j, k).raw() * c[j].raw();
      if (sgn(u) < 0 && (!release || basis[k] < basis[*release])) release = k;
    }
    if (!release) return {LpStatus::kOptimal, std::move(x), std::move(basis), pivots};

    // Edge direction keeping the other basis rows tight: A_B d = -e_k.
    Vector d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = -binv(j, *release);

    std::optional<std::size_t> enter;
    Rational step;
    for (std::size_t r = 0; r < m; ++r) {
      if (in_basis[r]) continue;
      const Rational ad = dot(a.row(r), d);
      if (ad.sign() <= 0) continue;
      const Rational t = (b[r] - dot(a.row(r), x)) / ad;
      if (!enter || t < step) {
        enter = r;
        step = t;
      }
    }
    if (!enter) return {LpStatus::kUnbounded, {}, std::move(basis), pivots};

    for (std::size_t j = 0; j < n; ++j) x[j] += step * d[j];
    in_basis[basis[*release]] = false;
    in_basis[*enter] = true;
    basis[*release] = *enter;
    ++pivots;
  }
}

// A has full column rank here.
LpResult solve_full_rank(const Matrix& a, const Vector& b, const Vector& c) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  const IndexSet start = independent_rows(a);
  Vector x0 = solve(a.select_rows(start), [&] {
    Vector rhs;
    for (auto r : start) rhs.push_back(b[r]);
    return rhs;
  }());

  Rational worst = 0;
  std::optional<std::size_t> worst_row;
  for (std::size_t r = 0; r < m; ++r) {
    const Rational excess = dot(a.row(r), x0) - b[r];
    if (excess > worst) {
      worst = excess;
      worst_row = r;
    }
  }

  LpResult out;
  Vector x = std::move(x0);
  IndexSet basis = start;

  if (worst_row) {
    // Phase one in (x, t): rows outside the start basis get a -t column, plus
    // -t <= 0. Maximize -t from the vertex (x0, worst violation).
    std::vector<bool> in_start(m, false);
    for (auto r : start) in_start[r] = true;
    Matrix aux(m + 1, n + 1);
    Vector aux_b(m + 1);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < n; ++j) aux(r, j) = a(r, j);
      if (!in_start[r]) aux(r, n) = -1;
      aux_b[r] = b[r];
    }
    aux(m, n) = -1;
    Vector aux_c(n + 1);
    aux_c[n] = -1;
    Vector aux_x = x;
    aux_x.push_back(worst);
    IndexSet aux_basis = start;
    aux_basis.push_back(*worst_row);

    Walk phase1 = simplex_walk(aux, aux_b, aux_c, std::move(aux_x), std::move(aux_basis));
    out.pivots += phase1.pivots;
    if (phase1.status != LpStatus::kOptimal) {
      throw InternalError("phase one reported unbounded although t >= 0");
    }
    if (phase1.x[n].sign() > 0) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    x.assign(phase1.x.begin(), phase1.x.begin() + static_cast<std::ptrdiff_t>(n));
    basis.clear();
    IndexSet candidates;
    bool has_t_row = false;
    for (auto r : phase1.basis) {
      if (r == m) {
        has_t_row = true;
      } else {
        candidates.push_back(r);
      }
    }
    if (has_t_row) {
      basis = candidates;
    } else {
      for (auto k : independent_rows(a.select_rows(candidates))) basis.push_back(candidates[k]);
    }
  }

  Walk phase2 = simplex_walk(a, b, c, std::move(x), std::move(basis));
  out.pivots += phase2.pivots;
  out.status = phase2.status;
  out.basis = std::move(phase2.basis);
  if (out.status == LpStatus::kOptimal) {
    out.x = std::move(phase2.x);
    out.value = dot(c, out.x);
  }
  return out;
}

}  // namespace

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

bool satisfies(const Matrix& a, const Vector& b, std::span<const Rational> x) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (dot(a.row(r), x) > b[r]) return false;
  }
  return true;
}

LpResult lp_maximize(const Matrix& a, const Vector& b, const Vector& c) {
  check_shapes(a, b, c);
  const std::size_t n = a.cols();
  if (n == 0) {
    LpResult out;
    out.status = satisfies(a, b, Vector{}) ? LpStatus::kOptimal : LpStatus::kInfeasible;
    return out;
  }

  const auto lineality = kernel_basis(a);
  if (lineality.empty()) return solve_full_rank(a, b, c);

  // P = (P ∩ L^⊥) + L. Feasibility is decided on the slice; a objective with
  // a component along L is unbounded on any nonempty P.
  Matrix aug = a;
  Vector aug_b = b;
  bool c_orthogonal = true;
  for (const auto& k : lineality) {
    aug.append_row(k);
    aug.append_row(scale(k, Rational(-1)));
    aug_b.push_back(0);
    aug_b.push_back(0);
    if (!dot(c, k).is_zero()) c_orthogonal = false;
  }
  LpResult sliced = solve_full_rank(aug, aug_b, c_orthogonal ? c : zeros(n));
  if (sliced.status == LpStatus::kInfeasible) return sliced;
  if (!c_orthogonal) {
    LpResult out;
    out.status = LpStatus::kUnbounded;
    out.pivots = sliced.pivots;
    return out;
  }
  return sliced;
}

LpResult lp_by_vertex_enumeration(const Matrix& a, const Vector& b, const Vector& c) {
  check_shapes(a, b, c);
  const std::size_t n = a.cols();
  if (rank(a) != n) throw InvalidInput("vertex enumeration needs full column rank");
  LpResult out;
  for_each_combination(a.rows(), n, [&](const IndexSet& rows) {
    const Matrix sub = a.select_rows(rows);
    if (det(sub).is_zero()) return true;
    Vector rhs;
    for (auto r : rows) rhs.push_back(b[r]);
    Vector x = solve(sub, rhs);
    if (!satisfies(a, b, x)) return true;
    const Rational v = dot(c, x);
    if (out.status != LpStatus::kOptimal || v > out.value) {
      out.status = LpStatus::kOptimal;
      out.x = std::move(x);
      out.value = v;
      out.basis = rows;
    }
    return true;
  });
  return out;
}

}  // namespace proxlab
