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

// Zero-sum subsequences in the elementary abelian group Z^d / pZ^d.
//
// Olson's theorem gives the Davenport constant of this group as pd - d + 1:
// every sequence of that many vectors in Z^d has a nonempty subsequence whose
// sum lies in pZ^d, and d copies of (p - 1) unit vectors show the bound is
// tight.

#ifndef PROXLAB_ZEROSUM_HPP_
#define PROXLAB_ZEROSUM_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace proxlab {

inline constexpr std::uint64_t kMaxGroupOrder = 1u << 24;
inline constexpr std::uint64_t kDefaultDavenportBudget = 50'000'000;

bool is_prime(std::uint64_t p);

// pd - d + 1
std::uint64_t olson_bound(std::uint64_t p, std::size_t d);

struct ZeroSumWitness {
  IndexSet subset;  // nonempty, increasing
  Vector sum;       // integer, every entry divisible by p
};

// Dynamic programming over the p^d residues with first-reach parent links.
// Returns a witness whenever one exists. Throws InvalidInput for non-prime p
// or ragged/non-integer input, Refusal when p^d exceeds kMaxGroupOrder, and
// InternalError if the Olson bound is met but no witness is found.
std::optional<ZeroSumWitness> zero_sum_subset(const std::vector<Vector>& f, std::uint64_t p);

// Re-derives the sum and checks divisibility.
bool verify_zero_sum(const std::vector<Vector>& f, std::uint64_t p, const ZeroSumWitness& w);

struct DavenportResult {
  std::uint64_t constant = 0;
  std::vector<std::vector<std::uint64_t>> longest_free;  // one extremal multiset, as residue codes
  std::uint64_t nodes = 0;
};

// Exhaustive search over zero-sum-free multisets of Z^d / pZ^d.
DavenportResult davenport_constant(std::uint64_t p, std::size_t d,
                                   std::uint64_t budget = kDefaultDavenportBudget);

// Each unit vector repeated p - 1 times, verified zero-sum free by checking
// every nonempty subset (Refusal when 2^(d(p-1)) exceeds the budget).
std::vector<Vector> extremal_zero_sum_free(std::uint64_t p, std::size_t d,
                                           std::uint64_t budget = kDefaultDavenportBudget);

}  // namespace proxlab

#endif  // PROXLAB_ZEROSUM_HPP_
