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

#include "proximity.hpp"

#include <functional>

#include "errors.hpp"
#include "lemma3.hpp"

namespace proxlab {

namespace {

Rational total(const Vector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

Vector combine(const std::vector<Vector>& rays, const Vector& coef, std::size_t n) {
  Vector acc = zeros(n);
  for (std::size_t i = 0; i < rays.size() && i < coef.size(); ++i) {
    if (!coef[i].is_zero()) acc = add(acc, scale(rays[i], coef[i]));
  }
  return acc;
}

Vector project(const Vector& v, const IndexSet& d) {
  Vector out;
  out.reserve(d.size());
  for (auto j : d) out.push_back(v[j]);
  return out;
}

bool is_optimal(const Instance& inst, const IndexSet& set, const Vector& x,
                const SolveOptions& sopts) {
  return x.size() == inst.n() && is_feasible(inst, set, x) &&
         dot(inst.c, x) == optimal_value(inst, set, sopts);
}

// max sum gamma over 0 <= gamma <= lambda with the D-projection of
// sum gamma_i v^i integral. Variables are gamma on the support of lambda
// followed by one integer variable per coordinate of D.
Vector maximize_gamma(const std::vector<Vector>& rays, const Vector& lambda, const IndexSet& d,
                      std::uint64_t budget, std::uint64_t& nodes) {
  IndexSet support;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].sign() > 0) support.push_back(i);
  }
  const std::size_t k = support.size();
  const std::size_t vars = k + d.size();
  MixedProgram prog;
  prog.a = Matrix(0, vars);
  for (std::size_t t = 0; t < k; ++t) {
    prog.a.append_row(unit(vars, t));
    prog.b.push_back(lambda[support[t]]);
    prog.a.append_row(scale(unit(vars, t), Rational(-1)));
    prog.b.push_back(0);
  }
  for (std::size_t s = 0; s < d.size(); ++s) {
    Vector row(vars);
    for (std::size_t t = 0; t < k; ++t) row[t] = rays[support[t]][d[s]];
    row[k + s] = -1;
    prog.a.append_row(row);
    prog.b.push_back(0);
    prog.a.append_row(scale(row, Rational(-1)));
    prog.b.push_back(0);
  }
  prog.objective = Vector(vars, Rational(0));
  for (std::size_t t = 0; t < k; ++t) prog.objective[t] = 1;
  for (std::size_t s = 0; s < d.size(); ++s) prog.integer_coords.push_back(k + s);

  const MixedResult r = maximize_mixed(prog, Rational(0), budget);
  nodes = r.nodes;
  if (r.status != LpStatus::kOptimal) throw InternalError("gamma maximization found no optimum");
  Vector gamma = zeros(lambda.size());
  for (std::size_t t = 0; t < k; ++t) gamma[support[t]] = r.x[t];
  return gamma;
}

// Repeatedly take a fractional lattice combination of the remaining weights.
Vector iterate_gamma(const std::vector<Vector>& rays, const Vector& lambda, const IndexSet& d,
                     std::uint64_t cap, std::uint64_t& iterations) {
  Vector gamma = zeros(lambda.size());
  const Rational limit(static_cast<long>(d.size()));
  std::vector<Vector> u;
  for (const auto& v : rays) u.push_back(project(v, d));
  iterations = 0;
  while (total(sub(lambda, gamma)) >= limit) {
    if (iterations == cap) {
      throw Refusal("residual_not_reduced", "sum of remaining weights still >= " + limit.str() +
                                                " after " + std::to_string(cap) + " iterations");
    }
    ++iterations;
    const auto beta = solve_exact(u, sub(lambda, gamma));
    if (!beta) throw InternalError("no fractional lattice combination for the remaining weights");
    gamma = add(gamma, beta->beta);
  }
  return gamma;
}

}  // namespace

bool all_passed(const CheckList& checks) {
  for (const auto& [name, ok] : checks) {
    if (!ok) return false;
  }
  return true;
}

ProximityCertificate prox_round(const Instance& inst, const Vector& w,
                                const std::optional<Vector>& z_tilde,
                                const ProximityOptions& opts) {
  inst.validate();
  if (w.size() != inst.n()) throw DimensionError("w has the wrong length");
  SolveOptions sopts;
  sopts.budget = opts.budget;
  sopts.subdet_budget = opts.subdet_budget;
  if (!is_optimal(inst, inst.I, w, sopts)) throw InvalidInput("w is not optimal for the I-program");

  ProximityCertificate cert;
  cert.I = inst.I;
  cert.J = inst.J;
  cert.D = index_union(inst.I, inst.J);
  cert.w = w;
  const Matrix a = inst.constraint_matrix();
  cert.delta = delta_of(a, opts.subdet_budget);
  if (cert.delta == 0) throw Refusal("zero_matrix", "Delta(A) = 0, the bound is vacuous");
  cert.bound = Rational(static_cast<long>(cert.D.size())) * Rational(cert.delta);
  cert.rays.delta_bound = cert.delta;

  auto finish = [&](const Vector& sv) {
    cert.z = sub(cert.z_tilde, sv);
    cert.w_tilde = add(w, sv);
    cert.sum_residual = total(sub(cert.lambda, cert.gamma));
    cert.distance = inf_norm(sub(w, cert.z));
    cert.checks = verify_certificate(inst, w, cert, opts);
    for (const auto& [name, ok] : cert.checks) {
      if (!ok) throw InternalError("proximity certificate check failed: " + name);
    }
    return cert;
  };

  if (inst.I == inst.J) {
    cert.method = "identity";
    cert.z_tilde = w;
    return finish(zeros(inst.n()));
  }

  if (z_tilde) {
    if (z_tilde->size() != inst.n()) throw DimensionError("z_tilde has the wrong length");
    if (!is_optimal(inst, inst.J, *z_tilde, sopts)) {
      throw InvalidInput("z_tilde is not optimal for the J-program");
    }
    cert.z_tilde = *z_tilde;
  } else {
    const SolveResult r = mip_solve(inst, inst.J, sopts);
    if (r.status != LpStatus::kOptimal) throw Refusal("no_optimum", "the J-program has no optimum");
    cert.z_tilde = r.point;
  }

  const Vector y = sub(cert.z_tilde, w);
  if (is_zero(y)) {
    cert.method = "direct";
    return finish(zeros(inst.n()));
  }

  const Matrix b = cone_matrix(a, sign_partition(a, y));
  cert.rays = cone_rays(b, opts.subdet_budget);
  cert.lambda = decompose(y, cert.rays).lambda;

  bool exact = !opts.force_fallback;
  if (exact) {
    try {
      cert.gamma = maximize_gamma(cert.rays.rays, cert.lambda, cert.D, opts.budget, cert.nodes);
      cert.method = "maximizer";
    } catch (const Refusal& r) {
      if (r.reason() != "budget_exceeded") throw;
      exact = false;
    }
  }
  if (!exact) {
    cert.gamma = iterate_gamma(cert.rays.rays, cert.lambda, cert.D, opts.fallback_iterations,
                               cert.iterations);
    cert.method = "iterative";
  }
  return finish(combine(cert.rays.rays, cert.gamma, inst.n()));
}

CheckList verify_certificate(const Instance& inst, const Vector& w,
                             const ProximityCertificate& cert, const ProximityOptions& opts) {
  CheckList out;
  SolveOptions sopts;
  sopts.budget = opts.budget;
  sopts.subdet_budget = opts.subdet_budget;
  const std::size_t n = inst.n();
  auto check = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception&) {
      ok = false;
    }
    out.emplace_back(name, ok);
  };
  auto sized = [&](const Vector& v) { return v.size() == n; };

  const Matrix a = inst.constraint_matrix();
  const Vector rhs = inst.constraint_rhs();
  const auto& rays = cert.rays.rays;
  const bool shapes = sized(w) && sized(cert.z_tilde) && sized(cert.z) && sized(cert.w_tilde) &&
                      cert.lambda.size() == rays.size() && cert.gamma.size() == rays.size();
  const Vector y = shapes ? sub(cert.z_tilde, w) : Vector{};
  const Vector sv = shapes ? combine(rays, cert.gamma, n) : Vector{};
  const Rational dsize(static_cast<long>(cert.D.size()));

  check("shapes", [&] { return shapes && cert.w == w; });
  check("index_sets", [&] {
    return cert.I == inst.I && cert.J == inst.J && cert.D == index_union(inst.I, inst.J);
  });
  check("w_optimal", [&] { return is_optimal(inst, inst.I, w, sopts); });
  check("z_tilde_optimal", [&] { return is_optimal(inst, inst.J, cert.z_tilde, sopts); });
  check("delta_exact", [&] { return cert.delta == delta_of(a, opts.subdet_budget); });
  check("decomposition", [&] {
    for (const auto& l : cert.lambda) {
      if (l.sign() < 0) return false;
    }
    return shapes && combine(rays, cert.lambda, n) == y;
  });
  check("rays_in_cone", [&] {
    if (!shapes) return false;
    if (is_zero(y)) return rays.empty();
    const Matrix b = cone_matrix(a, sign_partition(a, y));
    for (const auto& v : rays) {
      if (v.size() != n || !is_integral(v) || !in_cone(b, v)) return false;
    }
    return true;
  });
  check("ray_norms", [&] {
    for (const auto& v : rays) {
      if (inf_norm(v) > Rational(cert.delta)) return false;
    }
    return true;
  });
  check("gamma_in_range", [&] {
    if (!shapes) return false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (cert.gamma[i].sign() < 0 || cert.gamma[i] > cert.lambda[i]) return false;
    }
    return true;
  });
  check("gamma_lattice", [&] { return shapes && is_integral_on(sv, cert.D); });
  check("z_construction", [&] { return shapes && cert.z == sub(cert.z_tilde, sv); });
  check("w_tilde_construction", [&] { return shapes && cert.w_tilde == add(w, sv); });
  check("z_feasible", [&] { return shapes && satisfies(a, rhs, cert.z); });
  check("w_tilde_feasible", [&] { return shapes && satisfies(a, rhs, cert.w_tilde); });
  check("row_block_chain", [&] {
    if (!shapes) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto row = a.row(i);
      // Rows decreasing along y are bounded through w, the others through z~.
      const Vector& anchor = dot(row, y).sign() < 0 ? w : cert.z_tilde;
      const Rational bound = dot(row, anchor);
      if (dot(row, cert.z) > bound || dot(row, cert.w_tilde) > bound || bound > rhs[i]) {
        return false;
      }
    }
    return true;
  });
  check("z_integral_on_J", [&] { return shapes && is_integral_on(cert.z, inst.J); });
  check("w_tilde_integral_on_I", [&] { return shapes && is_integral_on(cert.w_tilde, inst.I); });
  check("objective_direction", [&] { return shapes && dot(inst.c, sv).sign() <= 0; });
  check("z_optimal", [&] {
    return shapes && dot(inst.c, cert.z) == dot(inst.c, cert.z_tilde) &&
           dot(inst.c, cert.z) == optimal_value(inst, inst.J, sopts);
  });
  check("w_tilde_optimal", [&] {
    return shapes && dot(inst.c, cert.w_tilde) == dot(inst.c, w);
  });
  check("residual_below_d", [&] {
    return shapes && cert.sum_residual == total(sub(cert.lambda, cert.gamma)) &&
           (inst.I == inst.J || cert.sum_residual < dsize);
  });
  check("distance_chain", [&] {
    if (!shapes || cert.distance != inf_norm(sub(w, cert.z))) return false;
    Rational weighted = 0;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      weighted += (cert.lambda[i] - cert.gamma[i]) * inf_norm(rays[i]);
    }
    const Rational scaled = cert.sum_residual * Rational(cert.delta);
    return cert.distance <= weighted && weighted <= scaled &&
           cert.bound == dsize * Rational(cert.delta) &&
           (inst.I == inst.J || scaled < cert.bound);
  });
  return out;
}

}  // namespace proxlab
