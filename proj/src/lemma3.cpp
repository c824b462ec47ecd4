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

#include "lemma3.hpp"

#include <algorithm>

#include "errors.hpp"
#include "simplex.hpp"
#include "zerosum.hpp"

namespace proxlab {

namespace {

Rational total(const Vector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

IndexSet active_indices(const Vector& alpha) {
  IndexSet out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i].sign() > 0) out.push_back(i);
  }
  return out;
}

Vector combination(const std::vector<Vector>& u, const Vector& beta, std::size_t d) {
  Vector acc = zeros(d);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!beta[i].is_zero()) acc = add(acc, scale(u[i], beta[i]));
  }
  return acc;
}

// Any alpha_i >= 1 or u^i = 0 gives a witness on a single coordinate.
std::optional<BetaWitness> trivial_witness(const std::vector<Vector>& u, const Vector& alpha,
                                           const IndexSet& active, std::size_t d) {
  auto make = [&](std::size_t i, const Rational& b) {
    BetaWitness w;
    w.beta = zeros(alpha.size());
    w.beta[i] = b;
    w.target = combination(u, w.beta, d);
    w.method = BetaMethod::kTrivial;
    return w;
  };
  for (auto i : active) {
    if (alpha[i] >= 1) return make(i, 1);
  }
  for (auto i : active) {
    if (is_zero(u[i])) return make(i, alpha[i]);
  }
  return std::nullopt;
}

// max sum beta over {0 <= beta <= alpha, sum beta_i u^i = z} on the active set.
LpResult zonotope_lp(const std::vector<Vector>& u, const Vector& alpha, const IndexSet& active,
                     const Vector& z) {
  const std::size_t k = active.size();
  const std::size_t d = z.size();
  Matrix a(0, k);
  Vector rhs;
  for (std::size_t j = 0; j < d; ++j) {
    Vector row(k);
    for (std::size_t t = 0; t < k; ++t) row[t] = u[active[t]][j];
    a.append_row(row);
    rhs.push_back(z[j]);
    a.append_row(scale(row, Rational(-1)));
    rhs.push_back(-z[j]);
  }
  for (std::size_t t = 0; t < k; ++t) {
    a.append_row(unit(k, t));
    rhs.push_back(alpha[active[t]]);
    a.append_row(scale(unit(k, t), Rational(-1)));
    rhs.push_back(0);
  }
  return lp_maximize(a, rhs, Vector(k, Rational(1)));
}

}  // namespace

const char* to_string(BetaMethod m) {
  switch (m) {
    case BetaMethod::kTrivial:
      return "trivial";
    case BetaMethod::kOlson:
      return "olson";
    case BetaMethod::kOracle:
      return "oracle";
  }
  return "?";
}

std::size_t check_lemma_input(const std::vector<Vector>& u, const Vector& alpha) {
  if (u.empty()) throw InvalidInput("lemma input needs at least one vector");
  if (u.size() != alpha.size()) {
    throw InvalidInput("lemma input has " + std::to_string(u.size()) + " vectors but " +
                       std::to_string(alpha.size()) + " weights");
  }
  const std::size_t d = u.front().size();
  if (d == 0) throw InvalidInput("lemma input vectors must have dimension >= 1");
  for (const auto& v : u) {
    if (v.size() != d) throw InvalidInput("lemma input vectors have mixed dimensions");
    if (!is_integral(v)) throw InvalidInput("lemma input vectors must be integral");
  }
  for (const auto& a : alpha) {
    if (a.sign() < 0) throw InvalidInput("lemma weights must be nonnegative");
  }
  return d;
}

std::optional<BetaWitness> solve_exact(const std::vector<Vector>& u, const Vector& alpha,
                                       std::uint64_t budget) {
  const std::size_t d = check_lemma_input(u, alpha);
  const IndexSet active = active_indices(alpha);
  const bool guaranteed = total(alpha) >= Rational(static_cast<long>(d));
  if (auto w = trivial_witness(u, alpha, active, d)) return w;

  // Box of the zonotope, then candidates by increasing max-norm, lex within.
  std::vector<long> lo(d), hi(d);
  long radius_cap = 0;
  for (std::size_t j = 0; j < d; ++j) {
    Rational neg = 0, pos = 0;
    for (auto i : active) {
      const Rational t = alpha[i] * u[i][j];
      (t.sign() < 0 ? neg : pos) += t;
    }
    lo[j] = to_int64(neg.ceil());
    hi[j] = to_int64(pos.floor());
    radius_cap = std::max({radius_cap, -lo[j], hi[j]});
  }

  std::uint64_t tested = 0;
  std::vector<long> z(d);
  for (long r = 0; r <= radius_cap; ++r) {
    std::vector<long> from(d), to(d);
    bool empty = false;
    for (std::size_t j = 0; j < d; ++j) {
      from[j] = std::max(lo[j], -r);
      to[j] = std::min(hi[j], r);
      empty = empty || from[j] > to[j];
    }
    if (empty) continue;
    z = from;
    while (true) {
      long norm = 0;
      for (auto v : z) norm = std::max(norm, v < 0 ? -v : v);
      if (norm == r) {
        if (++tested > budget) {
          throw Refusal("budget_exceeded",
                        "zonotope search exceeded " + std::to_string(budget) + " candidates");
        }
        const Vector zv(z.begin(), z.end());
        const LpResult lp = zonotope_lp(u, alpha, active, zv);
        if (lp.status == LpStatus::kOptimal && lp.value.sign() > 0) {
          BetaWitness w;
          w.beta = zeros(alpha.size());
          for (std::size_t t = 0; t < active.size(); ++t) w.beta[active[t]] = lp.x[t];
          w.target = zv;
          w.method = BetaMethod::kOracle;
          w.candidates = tested;
          if (!verify_beta(u, alpha, w)) throw InternalError("zonotope witness failed re-verification");
          return w;
        }
      }
      std::size_t j = d;
      while (j > 0 && z[j - 1] == to[j - 1]) {
        z[j - 1] = from[j - 1];
        --j;
      }
      if (j == 0) break;
      ++z[j - 1];
    }
  }
  if (guaranteed) {
    throw InternalError("no fractional lattice combination although the weights sum to at least " +
                        std::to_string(d));
  }
  return std::nullopt;
}

std::vector<std::uint64_t> prime_schedule(const Vector& alpha, std::size_t count) {
  std::uint64_t start = 2;
  for (const auto& a : alpha) {
    const Integer den = a.den();
    if (den.fits_ulong_p()) start = std::max<std::uint64_t>(start, den.get_ui());
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = start; out.size() < count; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

OlsonRun solve_olson_attempts(const std::vector<Vector>& u, const Vector& alpha,
                              const std::vector<std::uint64_t>& primes) {
  const std::size_t d = check_lemma_input(u, alpha);
  const IndexSet active = active_indices(alpha);
  OlsonRun run;
  if (auto w = trivial_witness(u, alpha, active, d)) {
    run.witness = w;
    return run;
  }
  const std::vector<std::uint64_t> schedule =
      primes.empty() ? prime_schedule(alpha, kPrimeScheduleLength) : primes;

  for (auto p : schedule) {
    OlsonAttempt attempt;
    attempt.p = p;
    // The repeated list holds q_i copies of u^i; owner maps a list slot back to i.
    std::vector<Vector> list;
    std::vector<std::size_t> owner;
    attempt.q.assign(alpha.size(), Integer(0));
    for (auto i : active) {
      attempt.q[i] = (alpha[i] * Rational(static_cast<long>(p))).ceil();
      for (Integer c = 0; c < attempt.q[i]; ++c) {
        list.push_back(u[i]);
        owner.push_back(i);
      }
    }
    std::optional<ZeroSumWitness> zs;
    try {
      zs = zero_sum_subset(list, p);
    } catch (const Refusal&) {
      attempt.outcome = "group_too_large";
      run.attempts.push_back(attempt);
      continue;
    }
    if (!zs) {
      attempt.outcome = "no_zero_sum";
      run.attempts.push_back(attempt);
      continue;
    }
    BetaWitness w;
    w.method = BetaMethod::kOlson;
    w.p = p;
    w.q = attempt.q;
    w.ell.assign(alpha.size(), Integer(0));
    for (auto slot : zs->subset) w.ell[owner[slot]] += 1;
    w.beta = zeros(alpha.size());
    bool within = true;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      w.beta[i] = Rational(w.ell[i], Integer(static_cast<unsigned long>(p)));
      within = within && w.beta[i] <= alpha[i];
    }
    if (!within) {
      attempt.outcome = "exceeds_alpha";
      run.attempts.push_back(attempt);
      continue;
    }
    w.target = combination(u, w.beta, d);
    if (is_zero(w.target)) {
      // Any positive multiple of beta still sums to 0; take the largest that fits.
      Rational eps;
      bool first = true;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (w.beta[i].is_zero()) continue;
        const Rational r = alpha[i] / w.beta[i];
        if (first || r < eps) eps = r;
        first = false;
      }
      w.epsilon = eps;
      w.beta = scale(w.beta, eps);
    }
    attempt.outcome = "accepted";
    run.attempts.push_back(attempt);
    w.attempts = run.attempts;
    if (!verify_beta(u, alpha, w)) throw InternalError("zero-sum witness failed re-verification");
    run.witness = std::move(w);
    return run;
  }
  return run;
}

std::optional<BetaWitness> solve_olson(const std::vector<Vector>& u, const Vector& alpha,
                                       const std::vector<std::uint64_t>& primes) {
  return solve_olson_attempts(u, alpha, primes).witness;
}

bool verify_beta(const std::vector<Vector>& u, const Vector& alpha, const BetaWitness& w) {
  if (w.beta.size() != alpha.size() || u.size() != alpha.size() || u.empty()) return false;
  bool nonzero = false;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (w.beta[i].sign() < 0 || w.beta[i] > alpha[i]) return false;
    nonzero = nonzero || !w.beta[i].is_zero();
  }
  const std::size_t d = u.front().size();
  return nonzero && w.target.size() == d && is_integral(w.target) &&
         combination(u, w.beta, d) == w.target;
}

}  // namespace proxlab
