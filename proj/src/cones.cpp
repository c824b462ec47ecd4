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

#include "cones.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "simplex.hpp"

namespace proxlab {

namespace {

struct LexLess {
  bool operator()(const Vector& a, const Vector& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

std::string render(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

}  // namespace

SignPartition sign_partition(const Matrix& a, const Vector& y) {
  if (y.size() != a.cols()) throw DimensionError("sign_partition: direction length mismatch");
  if (is_zero(y)) throw InvalidInput("sign_partition: direction is zero");
  SignPartition p;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    (dot(a.row(i), y).sign() < 0 ? p.neg_rows : p.nonneg_rows).push_back(i);
  }
  return p;
}

Matrix cone_matrix(const Matrix& a, const SignPartition& p) {
  Matrix b = a;
  for (auto i : p.nonneg_rows) {
    for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = -b(i, j);
  }
  return b;
}

bool in_cone(const Matrix& b, std::span<const Rational> x) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (dot(b.row(i), x).sign() > 0) return false;
  }
  return true;
}

RaySet cone_rays(const Matrix& b, std::uint64_t subdet_budget) {
  const std::size_t n = b.cols();
  RaySet out;
  // A zero B has Delta 0 but its cone is all of R^n, generated by unit vectors.
  out.delta_bound = delta_of(b, subdet_budget);
  if (out.delta_bound == 0) out.delta_bound = 1;
  if (n == 0) return out;

  const bool pointed = rank(b) == n;
  const Matrix candidates = pointed ? b : b.stack(Matrix::identity(n));

  std::set<Vector, LexLess> found;
  for_each_combination(candidates.rows(), n - 1, [&](const IndexSet& rows) {
    const Matrix sub = candidates.select_rows(rows);
    if (rank(sub) != n - 1) return true;
    const Vector v = kernel_basis(sub).front();
    const Vector neg = scale(v, Rational(-1));
    if (in_cone(b, v)) found.insert(v);
    if (in_cone(b, neg)) found.insert(neg);
    return true;
  });

  for (const auto& v : found) {
    if (!is_integral(v) || gcd_normalize(v) != v || !in_cone(b, v)) {
      throw InternalError("cone generator " + render(v) + " is not a primitive cone vector");
    }
    if (Rational(out.delta_bound) < inf_norm(v)) {
      throw InternalError("cone generator " + render(v) + " exceeds Delta = " +
                          out.delta_bound.get_str());
    }
    out.rays.push_back(v);
  }
  return out;
}

ConicCombination decompose(const Vector& y, const RaySet& rays) {
  const std::size_t k = rays.rays.size();
  const std::size_t n = y.size();
  ConicCombination out;
  out.lambda.assign(k, Rational(0));
  if (is_zero(y)) return out;
  if (k == 0) throw InternalError("decompose: nonzero vector but the cone has no generators");

  // Variables lambda: V lambda = y, lambda >= 0, maximize -sum lambda.
  Matrix a(0, k);
  Vector rhs;
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(k);
    for (std::size_t r = 0; r < k; ++r) {
      if (rays.rays[r].size() != n) throw DimensionError("decompose: ray length mismatch");
      row[r] = rays.rays[r][i];
    }
    a.append_row(row);
    rhs.push_back(y[i]);
    a.append_row(scale(row, Rational(-1)));
    rhs.push_back(-y[i]);
  }
  for (std::size_t r = 0; r < k; ++r) {
    a.append_row(scale(unit(k, r), Rational(-1)));
    rhs.push_back(0);
  }
  const LpResult lp = lp_maximize(a, rhs, Vector(k, Rational(-1)));
  if (lp.status != LpStatus::kOptimal) {
    throw InternalError("decompose: " + render(y) + " is not in the generated cone");
  }
  out.lambda = lp.x;
  return out;
}

}  // namespace proxlab
