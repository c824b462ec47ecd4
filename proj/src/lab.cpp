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

#include "lab.hpp"

#include <chrono>
#include <cstdio>
#include <map>

#include "cones.hpp"
#include "errors.hpp"
#include "proximity.hpp"
#include "serialize.hpp"
#include "subdet.hpp"

namespace proxlab {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Vector random_vector(std::mt19937_64& rng, std::size_t n, int bound) {
  Vector v(n);
  for (auto& x : v) x = uniform(rng, -bound, bound);
  return v;
}

IndexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  IndexSet s;
  for (std::size_t j = 0; j < n; ++j) {
    if (uniform(rng, 0, 1)) s.push_back(j);
  }
  return s;
}

// Random A, c and b = A x0 + slack with x0 inside the box, so the program is
// feasible; infeasible draws (possible only if that changes) are redrawn.
Instance random_instance(std::mt19937_64& rng, const SearchConfig& cfg, std::uint64_t& redrawn) {
  while (true) {
    Instance inst;
    const std::size_t n = uniform(rng, static_cast<int>(cfg.n_min), static_cast<int>(cfg.n_max));
    const std::size_t m = uniform(rng, static_cast<int>(cfg.m_min), static_cast<int>(cfg.m_max));
    inst.A = Matrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) inst.A(i, j) = uniform(rng, -cfg.entry_bound, cfg.entry_bound);
    }
    const Vector x0 = random_vector(rng, n, cfg.box);
    inst.b = inst.A * x0;
    for (auto& v : inst.b) v += uniform(rng, 0, 2);
    inst.c = random_vector(rng, n, cfg.entry_bound);
    inst.box = cfg.box;
    if (lp_solve(inst).status == LpStatus::kOptimal) return inst;
    ++redrawn;
  }
}

bool is_trivial_set(const IndexSet& s, std::size_t n) { return s.empty() || s.size() == n; }

void evaluate(ExperimentRecord& rec, const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Instance& inst = rec.instance;
  rec.n = inst.n();
  rec.m = inst.m();
  rec.I = inst.I;
  rec.J = inst.J;
  rec.d = index_union(inst.I, inst.J).size();
  rec.digest = fnv1a_hex(instance_to_json(inst).dump());
  SolveOptions sopts;
  sopts.budget = cfg.budget;
  try {
    rec.delta = delta_of(inst.constraint_matrix());
    const Rational delta(rec.delta);
    rec.bound_thm2 = Rational(static_cast<long>(rec.d)) * delta;
    rec.bound_thm1 = Rational(static_cast<long>(rec.n)) * delta;
    rec.bound_prop6 = delta;

    const SolveResult wr = mip_solve(inst, inst.I, sopts);
    if (wr.status != LpStatus::kOptimal) throw Refusal("no_optimum", "the I-program has no optimum");
    rec.w = wr.point;
    const NearestResult near = nearest_optimal(inst, inst.J, rec.w, sopts);
    rec.z = near.point;
    rec.distance = near.distance;
    if (cfg.pipeline) {
      ProximityOptions popts;
      popts.budget = cfg.budget;
      const ProximityCertificate cert = prox_round(inst, rec.w, std::nullopt, popts);
      rec.pipeline_distance = cert.distance;
      rec.pipeline_method = cert.method;
    }

    const bool same = inst.I == inst.J;
    rec.thm2_ok = same ? rec.distance == 0
                       : rec.distance < rec.bound_thm2 &&
                             (!rec.pipeline_distance || *rec.pipeline_distance < rec.bound_thm2);
    rec.thm1_applicable = !same && (inst.I.empty() || inst.J.empty());
    rec.thm1_ok = rec.distance <= rec.bound_thm1;
    rec.prop6_applicable = rec.delta <= 2 && is_trivial_set(inst.I, rec.n) &&
                           is_trivial_set(inst.J, rec.n);
    rec.prop6_ok = rec.distance <= rec.bound_prop6;
  } catch (const Refusal& r) {
    rec.status = "refused:" + r.reason();
  }
  if (cfg.timing) {
    rec.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
}

}  // namespace

Instance example1_instance(long delta) {
  if (delta < 1) throw InvalidInput("delta must be at least 1");
  Instance inst;
  inst.A = Matrix{{Rational(-delta), 0}, {Rational(delta), -1}};
  inst.b = {-1, 0};
  inst.c = {0, -1};
  return inst;
}

std::vector<Example1Row> run_example1(long delta_min, long delta_max) {
  if (delta_min < 1 || delta_max < delta_min) throw InvalidInput("need 1 <= delta_min <= delta_max");
  std::vector<Example1Row> rows;
  for (long d = delta_min; d <= delta_max; ++d) {
    const Instance inst = example1_instance(d);
    Example1Row row;
    row.delta = d;
    row.computed_delta = delta_of(inst.A);
    const SolveResult lp = lp_solve(inst);
    row.lp_point = lp.point;
    row.lp_opt = lp.value;
    const SolveResult mip = mip_solve(inst, {0, 1});
    row.mip_point = mip.point;
    row.mip_opt = mip.value;
    row.mip_point_first = mip_solve(inst, {0}).point;
    row.distance = nearest_optimal(inst, {0, 1}, lp.point).distance;
    row.distance_first = nearest_optimal(inst, {0}, lp.point).distance;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool ExperimentRecord::violation() const {
  if (status != "ok") return false;
  if (!thm2_ok) return true;
  if (thm1_applicable && !thm1_ok) return true;
  if (prop6_applicable && !prop6_ok) return true;
  if (pipeline_distance && *pipeline_distance < distance) return true;
  if ((vc_a_ok && !*vc_a_ok) || (vc_b_ok && !*vc_b_ok)) return true;
  return false;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<ExperimentRecord> conjecture_search(const SearchConfig& cfg) {
  std::vector<ExperimentRecord> out;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    std::mt19937_64 rng = trial_rng(cfg.seed, t);
    ExperimentRecord rec;
    rec.seed = cfg.seed;
    rec.trial = t;
    rec.instance = random_instance(rng, cfg, rec.regenerated);
    const std::size_t n = rec.instance.n();
    switch (t % 3) {
      case 0:
        rec.instance.J = full_index_set(n);
        break;
      case 1:
        rec.instance.I = full_index_set(n);
        break;
      default:
        do {
          rec.instance.I = random_subset(rng, n);
          rec.instance.J = random_subset(rng, n);
        } while (rec.instance.I == rec.instance.J);
    }
    evaluate(rec, cfg);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ExperimentRecord> bimodular_validate(const SearchConfig& cfg) {
  constexpr std::uint64_t kMaxRedraws = 10'000;
  std::vector<ExperimentRecord> out;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    std::mt19937_64 rng = trial_rng(cfg.seed, t);
    ExperimentRecord rec;
    rec.seed = cfg.seed;
    rec.trial = t;
    while (true) {
      rec.instance = random_instance(rng, cfg, rec.regenerated);
      if (delta_of(rec.instance.constraint_matrix()) <= 2) break;
      if (++rec.regenerated > kMaxRedraws) {
        throw Refusal("budget_exceeded", "no Delta <= 2 instance after " +
                                             std::to_string(kMaxRedraws) + " draws");
      }
    }
    const std::size_t n = rec.instance.n();
    (t % 2 == 0 ? rec.instance.J : rec.instance.I) = full_index_set(n);
    evaluate(rec, cfg);
    if (rec.status == "ok") {
      try {
        const VcResult vc = vc_check(rec.instance, lp_solve(rec.instance).point, cfg.budget);
        rec.vc_a_ok = vc.a_ok;
        rec.vc_b_ok = vc.b_ok;
      } catch (const Refusal& r) {
        rec.status = "refused:" + r.reason();
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records) {
  std::map<Integer, SummaryRow> rows;
  for (const auto& r : records) {
    if (r.status != "ok") continue;
    SummaryRow& row = rows[r.delta];
    row.delta = r.delta;
    ++row.trials;
    row.max_distance = max(row.max_distance, r.distance);
    if (r.delta > 0) row.max_ratio = max(row.max_ratio, r.distance / Rational(r.delta));
    if (r.violation()) ++row.violations;
  }
  std::vector<SummaryRow> out;
  for (auto& [d, row] : rows) out.push_back(row);
  return out;
}

VcResult vc_check(const Instance& inst, const Vector& vertex, std::uint64_t budget) {
  inst.validate();
  const Matrix a = inst.constraint_matrix();
  const Vector b = inst.constraint_rhs();
  const std::size_t n = inst.n();
  if (n == 0) throw InvalidInput("vc_check needs at least one variable");
  if (!is_integral(b)) throw InvalidInput("vc_check needs an integral right-hand side");
  if (!max_abs_subdet(a).lemma7_eligible) {
    throw InvalidInput("vc_check needs rank n and every n x n minor at most 2 in absolute value");
  }
  if (vertex.size() != n || !satisfies(a, b, vertex)) throw InvalidInput("x* is not in the polyhedron");

  VcResult out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (dot(a.row(i), vertex) == b[i]) out.tight_rows.push_back(i);
  }
  const Matrix at = a.select_rows(out.tight_rows);
  if (rank(at) != n) throw InvalidInput("x* is not a vertex");
  const Vector bt = [&] {
    Vector v;
    for (auto i : out.tight_rows) v.push_back(b[i]);
    return v;
  }();
  auto in_k = [&](const Vector& p) { return satisfies(at, bt, p); };

  // Tangent cone at x*; its extreme rays span the edges of P through x*.
  const RaySet rays = cone_rays(at);
  Rational longest = 0;
  for (const auto& r : rays.rays) longest = max(longest, inf_norm(r));

  for (const auto& r : rays.rays) {
    VcEdge e;
    e.ray = r;
    bool bounded = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Rational slope = dot(a.row(i), r);
      if (slope.sign() <= 0) continue;
      const Rational t = (b[i] - dot(a.row(i), vertex)) / slope;
      if (!bounded || t < e.t_max) e.t_max = t;
      bounded = true;
    }
    if (!bounded) throw InvalidInput("vc_check needs a bounded polyhedron");
    // Integer points on the line are x* + (t0 + Z) r for primitive r.
    std::size_t j = 0;
    while (r[j].is_zero()) ++j;
    const Rational rj = r[j];
    const Integer lo = min(vertex[j], vertex[j] + rj).floor();
    const Integer hi = max(vertex[j], vertex[j] + rj).ceil();
    for (Integer k = lo; k <= hi; ++k) {
      const Rational t = (Rational(k) - vertex[j]) / rj;
      if (t.sign() < 0 || t >= 1) continue;
      if (!is_integral(add(vertex, scale(r, t)))) continue;
      if (!e.t0 || t < *e.t0) e.t0 = t;
    }
    if (e.t0 && *e.t0 <= e.t_max) {
      e.nearest = add(vertex, scale(r, *e.t0));
    } else {
      e.t0.reset();
    }
    out.edges.push_back(std::move(e));
  }

  // A vertex of Q is x* + sum mu_i r^i with every mu_i < 1 (otherwise
  // subtracting an integer ray stays in K), so it lies strictly within
  // n * max ||r|| of x*.
  const Rational radius = Rational(static_cast<long>(n)) * longest;
  std::vector<Integer> lo(n), hi(n);
  Integer count = 1;
  for (std::size_t j = 0; j < n; ++j) {
    // With no rays K is the single point x*.
    lo[j] = radius.is_zero() ? vertex[j].ceil() : Integer((vertex[j] - radius).floor() + 1);
    hi[j] = radius.is_zero() ? vertex[j].floor() : Integer((vertex[j] + radius).ceil() - 1);
    count *= hi[j] < lo[j] ? Integer(0) : Integer(hi[j] - lo[j] + 1);
  }
  if (count > budget) {
    throw Refusal("budget_exceeded", "vc_check would scan " + count.get_str() + " lattice points");
  }
  std::vector<Vector> candidates;
  std::vector<Integer> p = lo;
  while (count > 0) {
    ++out.points;
    Vector pv(p.begin(), p.end());
    if (in_k(pv)) {
      bool reducible = false;
      for (const auto& r : rays.rays) {
        if (in_k(sub(pv, r))) {
          reducible = true;
          break;
        }
      }
      if (!reducible) candidates.push_back(std::move(pv));
    }
    std::size_t j = 0;
    while (j < n && p[j] == hi[j]) {
      p[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++p[j];
  }

  // p is a vertex of Q = conv(candidates) + cone(rays) iff it is not in the
  // hull of the other candidates plus the cone.
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const std::size_t others = candidates.size() - 1;
    const std::size_t vars = others + rays.rays.size();
    Matrix lp(0, vars);
    Vector rhs;
    Vector ones(vars, Rational(0));
    for (std::size_t s = 0; s < others; ++s) ones[s] = 1;
    lp.append_row(ones);
    rhs.push_back(1);
    lp.append_row(scale(ones, Rational(-1)));
    rhs.push_back(-1);
    for (std::size_t j = 0; j < n; ++j) {
      Vector row(vars);
      std::size_t s = 0;
      for (std::size_t o = 0; o < candidates.size(); ++o) {
        if (o != c) row[s++] = candidates[o][j];
      }
      for (std::size_t r = 0; r < rays.rays.size(); ++r) row[others + r] = rays.rays[r][j];
      lp.append_row(row);
      rhs.push_back(candidates[c][j]);
      lp.append_row(scale(row, Rational(-1)));
      rhs.push_back(-candidates[c][j]);
    }
    for (std::size_t v = 0; v < vars; ++v) {
      lp.append_row(scale(unit(vars, v), Rational(-1)));
      rhs.push_back(0);
    }
    if (lp_maximize(lp, rhs, Vector(vars, Rational(0))).status == LpStatus::kInfeasible) {
      out.hull_vertices.push_back(candidates[c]);
    }
  }

  out.a_ok = true;
  for (const auto& v : out.hull_vertices) {
    const Vector diff = sub(v, vertex);
    bool on_edge = is_zero(diff);
    for (const auto& e : out.edges) {
      std::size_t j = 0;
      while (e.ray[j].is_zero()) ++j;
      const Rational t = diff[j] / e.ray[j];
      if (t.sign() >= 0 && t <= e.t_max && scale(e.ray, t) == diff) {
        on_edge = true;
        break;
      }
    }
    out.a_ok = out.a_ok && on_edge;
  }
  out.b_ok = true;
  for (const auto& e : out.edges) {
    if (e.t0) out.b_ok = out.b_ok && *e.t0 * inf_norm(e.ray) <= 1;
  }
  out.details = std::to_string(out.tight_rows.size()) + " tight rows, " +
                std::to_string(out.edges.size()) + " edges, " +
                std::to_string(out.hull_vertices.size()) + " hull vertices from " +
                std::to_string(out.points) + " lattice points";
  return out;
}

std::vector<LemmaRecord> lemma3_trials(std::uint64_t seed, std::uint64_t trials, std::size_t d_max,
                                       std::size_t k_max) {
  if (d_max < 1 || k_max < d_max + 1) throw InvalidInput("need 1 <= d_max < k_max");
  std::vector<LemmaRecord> out;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng = trial_rng(seed, t);
    LemmaRecord rec;
    rec.seed = seed;
    rec.trial = t;
    const std::size_t d = uniform(rng, 1, static_cast<int>(d_max));
    const std::size_t k = uniform(rng, static_cast<int>(d + 1), static_cast<int>(k_max));
    for (std::size_t i = 0; i < k; ++i) rec.u.push_back(random_vector(rng, d, 3));
    rec.alpha.assign(k, Rational(0));
    Rational sum = 0;
    while (sum < Rational(static_cast<long>(d))) {
      sum = 0;
      for (auto& a : rec.alpha) {
        const int den = uniform(rng, 1, 7);
        a = Rational(uniform(rng, 0, den), den);
        sum += a;
      }
    }
    rec.exact = solve_exact(rec.u, rec.alpha);
    rec.exact_ok = rec.exact && verify_beta(rec.u, rec.alpha, *rec.exact);
    OlsonRun run = solve_olson_attempts(rec.u, rec.alpha);
    rec.olson = std::move(run.witness);
    rec.attempts = std::move(run.attempts);
    rec.olson_ok = rec.olson && verify_beta(rec.u, rec.alpha, *rec.olson);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace proxlab
