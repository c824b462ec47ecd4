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

#include "zerosum.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace proxlab {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

// Residues of Z^d / pZ^d encoded in base p, coordinate 0 least significant.
class ResidueCodec {
 public:
  ResidueCodec(std::uint64_t p, std::size_t d) : p_(p), d_(d) {
    order_ = 1;
    for (std::size_t i = 0; i < d; ++i) {
      if (order_ > kMaxGroupOrder / p) {
        throw Refusal("group_too_large", "p^d exceeds " + std::to_string(kMaxGroupOrder));
      }
      order_ *= p;
    }
  }

  std::uint64_t order() const { return order_; }

  std::uint64_t encode(const Vector& v) const {
    std::uint64_t code = 0;
    std::uint64_t place = 1;
    const Integer pz(static_cast<unsigned long>(p_));
    for (std::size_t i = 0; i < d_; ++i) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), v[i].num().get_mpz_t(), pz.get_mpz_t());
      code += r.get_ui() * place;
      place *= p_;
    }
    return code;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t code = 0;
    std::uint64_t place = 1;
    for (std::size_t i = 0; i < d_; ++i) {
      const std::uint64_t digit = (a % p_ + b % p_) % p_;
      code += digit * place;
      place *= p_;
      a /= p_;
      b /= p_;
    }
    return code;
  }

  std::vector<std::uint64_t> decode(std::uint64_t code) const {
    std::vector<std::uint64_t> out(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      out[i] = code % p_;
      code /= p_;
    }
    return out;
  }

 private:
  std::uint64_t p_;
  std::size_t d_;
  std::uint64_t order_;
};

std::size_t check_vectors(const std::vector<Vector>& f) {
  const std::size_t d = f.front().size();
  if (d == 0) throw InvalidInput("zero-sum input vectors must have dimension >= 1");
  for (const auto& v : f) {
    if (v.size() != d) throw InvalidInput("zero-sum input vectors have mixed dimensions");
    if (!is_integral(v)) throw InvalidInput("zero-sum input vectors must be integral");
  }
  return d;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::uint64_t olson_bound(std::uint64_t p, std::size_t d) { return p * d - d + 1; }

std::optional<ZeroSumWitness> zero_sum_subset(const std::vector<Vector>& f, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (f.empty()) return std::nullopt;
  const std::size_t d = check_vectors(f);
  const ResidueCodec codec(p, d);

  // parent_elem[s] is the element whose addition first reached residue s;
  // parent_state[s] the residue before it (kNone for the singleton).
  std::vector<std::uint32_t> parent_elem(codec.order(), kNone);
  std::vector<std::uint32_t> parent_state(codec.order(), kNone);
  std::vector<std::uint32_t> reached;

  auto reconstruct = [&]() {
    ZeroSumWitness w;
    std::uint32_t s = 0;
    while (true) {
      w.subset.push_back(parent_elem[s]);
      if (parent_state[s] == kNone) break;
      s = parent_state[s];
    }
    std::sort(w.subset.begin(), w.subset.end());
    w.sum = zeros(d);
    for (auto i : w.subset) w.sum = add(w.sum, f[i]);
    if (!verify_zero_sum(f, p, w)) throw InternalError("zero-sum witness failed re-verification");
    return w;
  };

  for (std::uint32_t i = 0; i < f.size(); ++i) {
    const std::uint64_t r = codec.encode(f[i]);
    const std::size_t before = reached.size();
    auto visit = [&](std::uint64_t target, std::uint32_t prev) {
      if (parent_elem[target] != kNone) return false;
      parent_elem[target] = i;
      parent_state[target] = prev;
      reached.push_back(static_cast<std::uint32_t>(target));
      return target == 0;
    };
    if (visit(r, kNone)) return reconstruct();
    for (std::size_t k = 0; k < before; ++k) {
      if (visit(codec.add(reached[k], r), reached[k])) return reconstruct();
    }
  }

  if (f.size() >= olson_bound(p, d)) {
    throw InternalError("no zero-sum subsequence among " + std::to_string(f.size()) +
                        " vectors although the Davenport bound is " +
                        std::to_string(olson_bound(p, d)));
  }
  return std::nullopt;
}

bool verify_zero_sum(const std::vector<Vector>& f, std::uint64_t p, const ZeroSumWitness& w) {
  if (w.subset.empty() || f.empty()) return false;
  Vector sum = zeros(f.front().size());
  for (std::size_t k = 0; k < w.subset.size(); ++k) {
    if (w.subset[k] >= f.size() || (k > 0 && w.subset[k] <= w.subset[k - 1])) return false;
    sum = add(sum, f[w.subset[k]]);
  }
  if (sum != w.sum) return false;
  const Integer pz(static_cast<unsigned long>(p));
  for (const auto& x : sum) {
    if (!x.is_integer() || !mpz_divisible_p(x.num().get_mpz_t(), pz.get_mpz_t())) return false;
  }
  return true;
}

DavenportResult davenport_constant(std::uint64_t p, std::size_t d, std::uint64_t budget) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (d == 0) throw InvalidInput("dimension must be at least 1");
  const ResidueCodec codec(p, d);
  const std::uint64_t order = codec.order();

  DavenportResult out;
  std::vector<std::uint64_t> current;
  std::vector<std::uint64_t> best;

  // `sums` marks residues reachable by nonempty sub-multisets of `current`.
  auto dfs = [&](auto&& self, std::uint64_t min_elem, const std::vector<char>& sums) -> void {
    if (++out.nodes > budget) {
      throw Refusal("budget_exceeded", "Davenport search exceeded " + std::to_string(budget) +
                                           " nodes");
    }
    if (current.size() > best.size()) best = current;
    for (std::uint64_t g = min_elem; g < order; ++g) {
      // Adding g closes a zero sum iff -g is already reachable.
      std::uint64_t neg = 0;
      {
        std::uint64_t x = g;
        std::uint64_t place = 1;
        for (std::size_t i = 0; i < d; ++i) {
          neg += ((p - x % p) % p) * place;
          x /= p;
          place *= p;
        }
      }
      if (sums[neg]) continue;
      std::vector<char> next = sums;
      for (std::uint64_t s = 0; s < order; ++s) {
        if (sums[s]) next[codec.add(s, g)] = 1;
      }
      next[g] = 1;
      current.push_back(g);
      self(self, g, next);
      current.pop_back();
    }
  };
  dfs(dfs, 1, std::vector<char>(order, 0));

  out.constant = best.size() + 1;
  out.longest_free.reserve(best.size());
  for (auto g : best) out.longest_free.push_back(codec.decode(g));
  return out;
}

std::vector<Vector> extremal_zero_sum_free(std::uint64_t p, std::size_t d, std::uint64_t budget) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (d == 0) throw InvalidInput("dimension must be at least 1");
  std::vector<Vector> seq;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::uint64_t c = 0; c + 1 < p; ++c) seq.push_back(unit(d, j));
  }
  if (seq.size() >= 63 || (std::uint64_t{1} << seq.size()) > budget) {
    throw Refusal("budget_exceeded", "verifying " + std::to_string(seq.size()) +
                                         " vectors needs 2^" + std::to_string(seq.size()) +
                                         " subsets");
  }
  const Integer pz(static_cast<unsigned long>(p));
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << seq.size()); ++mask) {
    bool all_divisible = true;
    for (std::size_t j = 0; j < d && all_divisible; ++j) {
      Integer s = 0;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) s += seq[i][j].num();
      }
      all_divisible = mpz_divisible_p(s.get_mpz_t(), pz.get_mpz_t()) != 0;
    }
    if (all_divisible) throw InternalError("extremal sequence has a zero-sum subsequence");
  }
  return seq;
}

}  // namespace proxlab
