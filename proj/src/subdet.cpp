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

#include "subdet.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "combinatorics.hpp"
#include "errors.hpp"

namespace proxlab {

namespace {

using IntGrid = std::vector<std::vector<Integer>>;

IntGrid to_integer_grid(const Matrix& a) {
  if (!a.is_integral()) throw InvalidInput("subdeterminant scan requires an integer matrix");
  IntGrid g(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) g[i][j] = a(i, j).num();
  }
  return g;
}

Integer minor_det(const IntGrid& g, const IndexSet& rows, const IndexSet& cols) {
  const std::size_t k = rows.size();
  IntGrid s(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) s[i][j] = g[rows[i]][cols[j]];
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t r = p;
    while (r < k && s[r][p] == 0) ++r;
    if (r == k) return 0;
    if (r != p) {
      std::swap(s[r], s[p]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        Integer t = s[i][j] * s[p][p] - s[i][p] * s[p][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        s[i][j] = std::move(t);
      }
    }
    prev = s[p][p];
  }
  return sign > 0 ? s[k - 1][k - 1] : Integer(-s[k - 1][k - 1]);
}

void check_budget(std::size_t m, std::size_t n, std::uint64_t budget) {
  const std::uint64_t count = square_submatrix_count(m, n);
  if (count > budget) {
    throw Refusal("budget_exceeded", "subdeterminant scan needs " + std::to_string(count) +
                                         " submatrices, budget is " + std::to_string(budget));
  }
}

// Visits every square submatrix in enumeration order; the visitor returns
// false to stop early.
void for_each_minor(const IntGrid& g, std::size_t m, std::size_t n,
                    const std::function<bool(const IndexSet&, const IndexSet&, const Integer&)>& visit) {
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    bool keep_going = true;
    for_each_combination(m, k, [&](const IndexSet& rows) {
      for_each_combination(n, k, [&](const IndexSet& cols) {
        if (!keep_going) return false;
        keep_going = visit(rows, cols, minor_det(g, rows, cols));
        return keep_going;
      });
      return keep_going;
    });
    if (!keep_going) return;
  }
}

}  // namespace

std::uint64_t square_submatrix_count(std::size_t m, std::size_t n) {
  std::uint64_t total = 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    const std::uint64_t a = binomial(m, k);
    const std::uint64_t b = binomial(n, k);
    if (a != 0 && b > kMax / a) return kMax;
    if (total > kMax - a * b) return kMax;
    total += a * b;
  }
  return total;
}

DeltaReport max_abs_subdet(const Matrix& a, std::uint64_t budget) {
  const IntGrid g = to_integer_grid(a);
  check_budget(a.rows(), a.cols(), budget);
  DeltaReport report;
  const std::size_t n = a.cols();
  Integer max_full = 0;
  bool any_full_nonzero = false;
  for_each_minor(g, a.rows(), n, [&](const IndexSet& rows, const IndexSet& cols, const Integer& d) {
    ++report.inspected;
    const Integer ad = abs(d);
    if (ad > report.delta) {
      report.delta = ad;
      report.witness_rows = rows;
      report.witness_cols = cols;
    }
    if (ad > 1) report.is_tu = false;
    if (rows.size() == n) {
      if (ad > max_full) max_full = ad;
      if (ad != 0) any_full_nonzero = true;
    }
    return true;
  });
  report.lemma7_eligible = n > 0 && any_full_nonzero && max_full <= 2;
  return report;
}

Integer delta_of(const Matrix& a, std::uint64_t budget) { return max_abs_subdet(a, budget).delta; }

bool is_totally_unimodular(const Matrix& a, std::uint64_t budget) {
  const IntGrid g = to_integer_grid(a);
  check_budget(a.rows(), a.cols(), budget);
  bool tu = true;
  for_each_minor(g, a.rows(), a.cols(), [&](const IndexSet&, const IndexSet&, const Integer& d) {
    if (abs(d) > 1) tu = false;
    return tu;
  });
  return tu;
}

Matrix box_rows_appended(const Matrix& a) {
  const std::size_t n = a.cols();
  Matrix neg(n, n);
  for (std::size_t i = 0; i < n; ++i) neg(i, i) = -1;
  return a.stack(Matrix::identity(n)).stack(neg);
}

BoxStack stack_box_preserves_delta(const Matrix& a, const Integer& box, std::uint64_t budget) {
  if (box < 1) throw InvalidInput("box bound must be at least 1");
  BoxStack out;
  out.stacked = box_rows_appended(a);
  out.delta_before = delta_of(a, budget);
  out.delta_after = delta_of(out.stacked, budget);
  out.preserved = out.delta_before == out.delta_after;
  if (!out.preserved && out.delta_before >= 1) {
    throw InternalError("box rows changed Delta from " + out.delta_before.get_str() + " to " +
                        out.delta_after.get_str());
  }
  return out;
}

}  // namespace proxlab
