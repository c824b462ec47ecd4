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

#include "opt.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace proxlab {

namespace {

void check_index_set(const IndexSet& s, std::size_t n, const char* name) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] >= n) {
      throw InvalidInput(std::string(name) + " index " + std::to_string(s[k]) +
                         " out of range for n = " + std::to_string(n));
    }
    if (k > 0 && s[k] <= s[k - 1]) {
      throw InvalidInput(std::string(name) + " must be sorted and duplicate-free");
    }
  }
}

SolveResult from_lp(const LpResult& r) {
  SolveResult out;
  out.status = r.status;
  out.point = r.x;
  out.value = r.value;
  return out;
}

// Enumeration state for maximize_mixed.
class Enumerator {
 public:
  Enumerator(const MixedProgram& prog, const std::optional<Rational>& achievable,
             std::uint64_t budget)
      : prog_(prog), floor_(achievable), budget_(budget) {}

  MixedResult run() {
    node(0);
    MixedResult out;
    out.nodes = nodes_;
    if (record_) {
      out.status = LpStatus::kOptimal;
      out.x = std::move(record_x_);
      out.value = *record_;
    }
    return out;
  }

 private:
  // The program restricted to the coordinates not yet fixed.
  struct Slice {
    Matrix a;
    Vector b;
    Vector objective;
    Rational offset;
    std::vector<std::size_t> free_coords;
  };

  Slice slice() const {
    const std::size_t n = prog_.a.cols();
    std::vector<bool> fixed(n, false);
    for (std::size_t k = 0; k < prefix_.size(); ++k) fixed[prog_.integer_coords[k]] = true;
    Slice s;
    for (std::size_t j = 0; j < n; ++j) {
      if (!fixed[j]) s.free_coords.push_back(j);
    }
    s.a = Matrix(prog_.a.rows(), s.free_coords.size());
    s.b = prog_.b;
    for (std::size_t r = 0; r < prog_.a.rows(); ++r) {
      for (std::size_t k = 0; k < s.free_coords.size(); ++k) s.a(r, k) = prog_.a(r, s.free_coords[k]);
      for (std::size_t k = 0; k < prefix_.size(); ++k) {
        s.b[r] -= prog_.a(r, prog_.integer_coords[k]) * prefix_[k];
      }
    }
    for (auto j : s.free_coords) s.objective.push_back(prog_.objective[j]);
    for (std::size_t k = 0; k < prefix_.size(); ++k) {
      s.offset += prog_.objective[prog_.integer_coords[k]] * prefix_[k];
    }
    return s;
  }

  Vector assemble(const Slice& s, const Vector& free_x) const {
    Vector x(prog_.a.cols());
    for (std::size_t k = 0; k < prefix_.size(); ++k) x[prog_.integer_coords[k]] = prefix_[k];
    for (std::size_t k = 0; k < s.free_coords.size(); ++k) x[s.free_coords[k]] = free_x[k];
    return x;
  }

  std::optional<Rational> threshold() const { return record_ ? record_ : floor_; }

  void node(std::size_t depth) {
    if (++nodes_ > budget_) {
      throw Refusal("budget_exceeded",
                    "integer enumeration exceeded " + std::to_string(budget_) + " nodes");
    }
    const Slice s = slice();
    const LpResult relax = lp_maximize(s.a, s.b, s.objective);
    if (relax.status == LpStatus::kInfeasible) return;
    if (relax.status == LpStatus::kUnbounded) {
      throw Refusal("unbounded_relaxation", "LP relaxation is unbounded during enumeration");
    }
    const Rational bound = relax.value + s.offset;
    if (record_ && bound <= *record_) return;
    if (floor_ && bound < *floor_) return;

    if (depth == prog_.integer_coords.size()) {
      record_ = bound;
      record_x_ = assemble(s, relax.x);
      return;
    }

    // Range of the next integer coordinate over the slice, restricted to the
    // part that can still reach the current threshold.
    Matrix ra = s.a;
    Vector rb = s.b;
    if (const auto t = threshold()) {
      ra.append_row(scale(s.objective, Rational(-1)));
      rb.push_back(s.offset - *t);
    }
    const std::size_t j = prog_.integer_coords[depth];
    const auto pos = static_cast<std::size_t>(
        std::find(s.free_coords.begin(), s.free_coords.end(), j) - s.free_coords.begin());
    const std::size_t width = s.free_coords.size();
    const LpResult hi = lp_maximize(ra, rb, unit(width, pos));
    if (hi.status == LpStatus::kInfeasible) return;
    const LpResult lo = lp_maximize(ra, rb, scale(unit(width, pos), Rational(-1)));
    if (hi.status == LpStatus::kUnbounded || lo.status == LpStatus::kUnbounded) {
      throw Refusal("unbounded_enumeration",
                    "integer coordinate " + std::to_string(j) + " has an unbounded range");
    }
    const Integer first = (-lo.value).ceil();
    const Integer last = hi.value.floor();
    for (Integer v = first; v <= last; ++v) {
      prefix_.push_back(Rational(v));
      node(depth + 1);
      prefix_.pop_back();
    }
  }

  const MixedProgram& prog_;
  std::optional<Rational> floor_;
  std::uint64_t budget_;
  Vector prefix_;
  std::optional<Rational> record_;
  Vector record_x_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Matrix Instance::constraint_matrix() const {
  return box ? box_rows_appended(A) : A;
}

Vector Instance::constraint_rhs() const {
  Vector out = b;
  if (box) {
    for (std::size_t i = 0; i < 2 * n(); ++i) out.push_back(Rational(*box));
  }
  return out;
}

void Instance::validate() const {
  if (!A.is_integral()) throw InvalidInput("A must be an integer matrix");
  if (b.size() != m()) {
    throw InvalidInput("b has " + std::to_string(b.size()) + " entries, A has " +
                       std::to_string(m()) + " rows");
  }
  if (c.size() != n()) {
    throw InvalidInput("c has " + std::to_string(c.size()) + " entries, A has " +
                       std::to_string(n()) + " columns");
  }
  check_index_set(I, n(), "I");
  check_index_set(J, n(), "J");
  if (box && *box < 1) throw InvalidInput("box must be a positive integer");
}

bool is_feasible(const Instance& inst, const IndexSet& intset, std::span<const Rational> x) {
  if (x.size() != inst.n()) return false;
  return is_integral_on(x, intset) &&
         satisfies(inst.constraint_matrix(), inst.constraint_rhs(), x);
}

SolveResult lp_solve(const Instance& inst) {
  inst.validate();
  return from_lp(lp_maximize(inst.constraint_matrix(), inst.constraint_rhs(), inst.c));
}

SolveResult mip_solve(const Instance& inst, const IndexSet& intset, const SolveOptions& opts) {
  inst.validate();
  check_index_set(intset, inst.n(), "integrality set");
  if (intset.empty()) return lp_solve(inst);

  MixedProgram prog{inst.constraint_matrix(), inst.constraint_rhs(), inst.c, intset};
  if (inst.box) {
    MixedResult r = maximize_mixed(prog, std::nullopt, opts.budget);
    return {r.status, std::move(r.x), r.value, r.nodes};
  }

  // Without a box the integer coordinates are first confined to the proximity
  // box |x_j - w_j| <= n * Delta around an LP optimum w, which contains an
  // optimal solution whenever one exists. Its value then bounds the
  // unrestricted enumeration from below.
  const LpResult relax = lp_maximize(prog.a, prog.b, prog.objective);
  if (relax.status == LpStatus::kInfeasible) return {LpStatus::kInfeasible, {}, {}, 0};
  if (relax.status == LpStatus::kUnbounded) {
    throw Refusal("unbounded_relaxation",
                  "LP relaxation is unbounded and no box is set; supply \"box\"");
  }
  const Integer delta = delta_of(inst.A, opts.subdet_budget);
  const Rational radius = Rational(Integer(delta * static_cast<unsigned long>(inst.n())));
  MixedProgram boxed = prog;
  for (auto j : intset) {
    boxed.a.append_row(unit(inst.n(), j));
    boxed.b.push_back(relax.x[j] + radius);
    boxed.a.append_row(scale(unit(inst.n(), j), Rational(-1)));
    boxed.b.push_back(radius - relax.x[j]);
  }
  MixedResult local = maximize_mixed(boxed, std::nullopt, opts.budget);
  if (local.status != LpStatus::kOptimal) return {local.status, {}, {}, local.nodes};
  try {
    MixedResult full = maximize_mixed(prog, local.value, opts.budget);
    full.nodes += local.nodes;
    return {full.status, std::move(full.x), full.value, full.nodes};
  } catch (const Refusal& r) {
    // The optimal face is unbounded in an integer direction, so there is no
    // lexicographically smallest optimum; keep the one inside the box.
    if (r.reason() != "unbounded_enumeration") throw;
    return {local.status, std::move(local.x), local.value, local.nodes};
  }
}

Rational optimal_value(const Instance& inst, const IndexSet& intset, const SolveOptions& opts) {
  const SolveResult r = mip_solve(inst, intset, opts);
  if (r.status != LpStatus::kOptimal) {
    throw Refusal("no_optimum", std::string("program is ") + to_string(r.status));
  }
  return r.value;
}

NearestResult nearest_optimal(const Instance& inst, const IndexSet& intset, const Vector& target,
                              const SolveOptions& opts) {
  if (target.size() != inst.n()) {
    throw InvalidInput("target has " + std::to_string(target.size()) + " entries, expected " +
                       std::to_string(inst.n()));
  }
  const SolveResult base = mip_solve(inst, intset, opts);
  if (base.status != LpStatus::kOptimal) {
    throw Refusal("no_optimum", std::string("program is ") + to_string(base.status));
  }
  const std::size_t n = inst.n();
  const Rational seed = inf_norm(sub(target, base.point));

  // Variables (x, t): A x <= b, c^T x >= opt, |x_i - target_i| <= t.
  const Matrix a = inst.constraint_matrix();
  const Vector rhs = inst.constraint_rhs();
  MixedProgram prog;
  prog.a = Matrix(0, n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row = a.row_vector(r);
    row.push_back(0);
    prog.a.append_row(row);
    prog.b.push_back(rhs[r]);
  }
  Vector obj_row = scale(inst.c, Rational(-1));
  obj_row.push_back(0);
  prog.a.append_row(obj_row);
  prog.b.push_back(-base.value);
  for (std::size_t i = 0; i < n; ++i) {
    Vector up = unit(n + 1, i);
    up[n] = -1;
    prog.a.append_row(up);
    prog.b.push_back(target[i]);
    Vector down = scale(unit(n + 1, i), Rational(-1));
    down[n] = -1;
    prog.a.append_row(down);
    prog.b.push_back(-target[i]);
  }
  prog.objective = scale(unit(n + 1, n), Rational(-1));
  prog.integer_coords = intset;

  MixedResult r = maximize_mixed(prog, -seed, opts.budget);
  if (r.status != LpStatus::kOptimal) {
    throw InternalError("nearest-optimal search lost the seed solution");
  }
  NearestResult out;
  out.point.assign(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(n));
  out.distance = inf_norm(sub(target, out.point));
  out.value = dot(inst.c, out.point);
  out.nodes = r.nodes + base.nodes;
  if (out.distance != -r.value || out.value != base.value) {
    throw InternalError("nearest-optimal point failed re-verification");
  }
  return out;
}

MixedResult maximize_mixed(const MixedProgram& prog, const std::optional<Rational>& achievable,
                           std::uint64_t budget) {
  if (prog.b.size() != prog.a.rows() || prog.objective.size() != prog.a.cols()) {
    throw DimensionError("mixed program shape mismatch");
  }
  check_index_set(prog.integer_coords, prog.a.cols(), "integer coordinates");
  return Enumerator(prog, achievable, budget).run();
}

}  // namespace proxlab
