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

// Fractional lattice combinations. Given integer vectors u^1..u^k in Z^d and
// weights alpha >= 0 with sum alpha_i >= d, there is a nonzero beta with
// 0 <= beta_i <= alpha_i and sum beta_i u^i integral.
//
// Two constructions are provided: an exact search over lattice points of the
// zonotope {sum beta_i u^i : beta_i in [0, alpha_i]}, which always terminates,
// and the zero-sum route that approximates alpha by fractions q_i / p for a
// schedule of primes p and rounds from a zero-sum subsequence of the repeated
// vector list.

#ifndef PROXLAB_LEMMA3_HPP_
#define PROXLAB_LEMMA3_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace proxlab {

inline constexpr std::uint64_t kDefaultCandidateBudget = 200'000;
inline constexpr std::size_t kPrimeScheduleLength = 25;

enum class BetaMethod { kTrivial, kOlson, kOracle };

const char* to_string(BetaMethod m);

struct OlsonAttempt {
  std::uint64_t p = 0;
  std::vector<Integer> q;  // ceil(p alpha_i)
  std::string outcome;     // "accepted", "exceeds_alpha", "no_zero_sum", "group_too_large"
};

struct BetaWitness {
  Vector beta;    // one entry per input vector, zero where alpha_i = 0
  Vector target;  // sum beta_i u^i, integral
  BetaMethod method = BetaMethod::kOracle;

  // Zero-sum route only.
  std::uint64_t p = 0;
  std::vector<Integer> q;
  std::vector<Integer> ell;  // copies of u^i used by the zero-sum subsequence
  Rational epsilon = 1;      // rescaling applied when the target is 0
  std::vector<OlsonAttempt> attempts;
  std::uint64_t candidates = 0;  // exact route: lattice points tested
};

// Throws InvalidInput unless all u^i share one dimension d >= 1, are integral,
// and alpha is nonnegative with one entry per vector.
std::size_t check_lemma_input(const std::vector<Vector>& u, const Vector& alpha);

// Exact zonotope search. Returns nullopt only when sum alpha_i < d and no
// witness exists. Throws InternalError if sum alpha_i >= d and nothing is
// found, and Refusal("budget_exceeded") past `budget` candidate points.
std::optional<BetaWitness> solve_exact(const std::vector<Vector>& u, const Vector& alpha,
                                       std::uint64_t budget = kDefaultCandidateBudget);

// First `count` primes >= the largest denominator in alpha.
std::vector<std::uint64_t> prime_schedule(const Vector& alpha, std::size_t count);

// Zero-sum route over the given primes (default: prime_schedule(alpha, 25)).
// Returns nullopt when every prime is rejected; the attempts are then lost,
// so callers that need them should use solve_olson_attempts.
std::optional<BetaWitness> solve_olson(const std::vector<Vector>& u, const Vector& alpha,
                                       const std::vector<std::uint64_t>& primes = {});

struct OlsonRun {
  std::optional<BetaWitness> witness;
  std::vector<OlsonAttempt> attempts;
};
OlsonRun solve_olson_attempts(const std::vector<Vector>& u, const Vector& alpha,
                              const std::vector<std::uint64_t>& primes = {});

// Bounds, nonzero beta, integral target, and target == sum beta_i u^i.
bool verify_beta(const std::vector<Vector>& u, const Vector& alpha, const BetaWitness& w);

}  // namespace proxlab

#endif  // PROXLAB_LEMMA3_HPP_
