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

// Acceptance run: one PASS/FAIL line per criterion. Every number checked here
// is recomputed by the brute-force oracles in oracles.hpp or by a direct
// check written below, never taken from the library's own verifier alone.
//
// usage: proxlab_acceptance [output-dir]
// With an output directory the JSONL streams and summaries are written there.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lab.hpp"
#include "oracles.hpp"
#include "proximity.hpp"
#include "serialize.hpp"
#include "zerosum.hpp"

using namespace proxlab;
using namespace proxlab::testing;

namespace {

// Suite configurations shared by criteria 3, 5, 6 and 8.
SearchConfig search_config() {
  SearchConfig cfg;
  cfg.n_min = 1;
  cfg.n_max = 4;
  cfg.m_min = 1;
  cfg.m_max = 6;
  cfg.entry_bound = 3;
  cfg.box = 6;
  cfg.trials = 200;
  cfg.seed = 2026;
  return cfg;
}

SearchConfig bimodular_config() {
  SearchConfig cfg = search_config();
  cfg.entry_bound = 1;
  cfg.trials = 100;
  cfg.seed = 2027;
  return cfg;
}

constexpr std::uint64_t kLemmaSeed = 2028;
constexpr std::uint64_t kLemmaTrials = 500;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::uint64_t checked = 0;

  // Records the first failure only; later ones are counted.
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

std::string str(const Rational& r) { return r.str(); }

// Vector as "(a, b)" for failure messages.
std::string plain_vec(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

Integer oracle_delta(const Matrix& a) {
  const Rational d = brute_max_abs_subdet(a);
  return d.num();
}

bool integral_on(const Vector& x, const IndexSet& coords) {
  for (auto j : coords) {
    if (x[j].den() != 1) return false;
  }
  return true;
}

Rational objective(const Instance& inst, const Vector& x) {
  Rational v = 0;
  for (std::size_t j = 0; j < x.size(); ++j) v += inst.c[j] * x[j];
  return v;
}

Rational sup_distance(const Vector& a, const Vector& b) {
  Rational best = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    Rational d = a[j] - b[j];
    if (d < 0) d = -d;
    if (d > best) best = d;
  }
  return best;
}

// A point the oracle confirms optimal for the `intset` program.
bool oracle_optimal(const Instance& inst, const IndexSet& intset, const Vector& x) {
  if (x.size() != inst.n() || !integral_on(x, intset)) return false;
  if (!feasible_point(inst.constraint_matrix(), inst.constraint_rhs(), x)) return false;
  const auto best = brute_mip_value(inst, intset);
  return best && objective(inst, x) == *best;
}

// Nonzero beta within [0, alpha] whose combination is integral.
bool oracle_beta(const std::vector<Vector>& u, const Vector& alpha, const BetaWitness& w) {
  if (w.beta.size() != u.size()) return false;
  bool nonzero = false;
  Vector target(u.front().size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (w.beta[i] < 0 || w.beta[i] > alpha[i]) return false;
    if (w.beta[i] != 0) nonzero = true;
    for (std::size_t r = 0; r < target.size(); ++r) target[r] += w.beta[i] * u[i][r];
  }
  for (const auto& t : target) {
    if (t.den() != 1) return false;
  }
  return nonzero && target == w.target;
}

// Exhaustive zero-sum existence over all nonempty subsets.
bool exhaustive_zero_sum(const std::vector<Vector>& f, long p) {
  const std::size_t r = f.size();
  const std::size_t d = r ? f.front().size() : 0;
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    bool zero = true;
    for (std::size_t k = 0; k < d && zero; ++k) {
      long s = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (mask & (1u << i)) s += f[i][k].num().get_si();
      }
      zero = s % p == 0;
    }
    if (zero) return true;
  }
  return false;
}

bool witness_sound(const std::vector<Vector>& f, long p, const ZeroSumWitness& w) {
  if (w.subset.empty()) return false;
  for (std::size_t k = 0; k + 1 < w.subset.size(); ++k) {
    if (w.subset[k] >= w.subset[k + 1]) return false;
  }
  if (w.subset.back() >= f.size()) return false;
  for (std::size_t k = 0; k < f.front().size(); ++k) {
    long s = 0;
    for (auto i : w.subset) s += f[i][k].num().get_si();
    if (s % p != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Outcome example1() {
  Outcome out;
  const auto rows = run_example1(1, 10);
  out.require(rows.size() == 10, "expected 10 rows");
  for (const auto& r : rows) {
    const Rational d(r.delta);
    const std::string tag = "delta " + std::to_string(r.delta) + ": ";
    const Instance inst = example1_instance(r.delta);
    out.require(r.computed_delta == r.delta && oracle_delta(inst.A) == r.delta, tag + "Delta");
    const auto lp = brute_lp(inst.A, inst.b, inst.c);
    out.require(lp && lp->first == Vector{Rational(1) / d, 1}, tag + "oracle LP vertex");
    out.require(r.lp_point == Vector{Rational(1) / d, 1}, tag + "LP optimum " + plain_vec(r.lp_point));
    out.require(r.mip_point == Vector{1, d} && r.mip_point_first == Vector{1, d}, tag + "MIP optimum");
    // x2 >= delta x1 >= delta forces x2 >= delta, so (1, delta) attains -delta.
    out.require(r.mip_opt == -d, tag + "MIP value");
    out.require(r.distance == d - 1 && r.distance_first == d - 1, tag + "distance " + str(r.distance));
    out.require(sup_distance(r.lp_point, r.mip_point) == d - 1, tag + "recomputed distance");
    ++out.checked;
  }
  return out;
}

Outcome davenport() {
  Outcome out;
  const std::vector<std::pair<std::uint64_t, std::size_t>> pairs = {{2, 1}, {3, 1}, {5, 1},
                                                                    {2, 2}, {3, 2}, {2, 3}};
  for (const auto& [p, d] : pairs) {
    const std::string tag = "(p,d)=(" + std::to_string(p) + "," + std::to_string(d) + "): ";
    const std::uint64_t expect = p * d - d + 1;
    const DavenportResult res = davenport_constant(p, d);
    out.require(res.constant == expect, tag + "constant " + std::to_string(res.constant));
    const auto seq = extremal_zero_sum_free(p, d);
    out.require(seq.size() + 1 == expect, tag + "extremal length");
    out.require(!exhaustive_zero_sum(seq, static_cast<long>(p)), tag + "extremal sequence has a zero sum");
    std::vector<Vector> longest;
    for (const auto& digits : res.longest_free) {
      Vector v;
      for (auto x : digits) v.push_back(Rational(static_cast<long>(x)));
      longest.push_back(v);
    }
    out.require(longest.size() + 1 == expect && !exhaustive_zero_sum(longest, static_cast<long>(p)),
                tag + "search witness not zero-sum free");
    ++out.checked;
  }
  return out;
}

struct SearchRun {
  std::vector<ExperimentRecord> records;
  Outcome proximity;
  Outcome pure_or_continuous;
};

SearchRun proximity_suite() {
  SearchRun run;
  const SearchConfig cfg = search_config();
  run.records = conjecture_search(cfg);
  Outcome& out = run.proximity;
  Outcome& cross = run.pure_or_continuous;
  out.require(run.records.size() >= 200, "fewer than 200 records");
  for (const auto& rec : run.records) {
    const std::string tag = "trial " + std::to_string(rec.trial) + ": ";
    out.require(rec.status == "ok", tag + rec.status);
    if (rec.status != "ok") continue;
    const Instance& inst = rec.instance;
    out.require(inst.n() <= 4 && inst.m() <= 6 && inst.box && *inst.box <= 6, tag + "outside the sampled family");
    for (std::size_t i = 0; i < inst.m(); ++i) {
      for (std::size_t j = 0; j < inst.n(); ++j) out.require(inst.A(i, j).abs() <= 3, tag + "entry out of range");
    }
    out.require(inst.I != inst.J, tag + "I == J");

    const Integer delta = oracle_delta(inst.constraint_matrix());
    out.require(delta == rec.delta, tag + "Delta disagrees with the oracle");
    const Rational d(static_cast<long>(index_union(inst.I, inst.J).size()));
    const Rational bound = d * Rational(delta);

    out.require(oracle_optimal(inst, inst.I, rec.w), tag + "w not optimal per the oracle");
    out.require(oracle_optimal(inst, inst.J, rec.z), tag + "z not optimal per the oracle");
    out.require(sup_distance(rec.w, rec.z) == rec.distance, tag + "distance field");
    out.require(rec.distance < bound, tag + "distance " + str(rec.distance) + " >= " + str(bound));

    // Fresh certificate, checked by the verifier after a JSON round trip and
    // by the oracle on its endpoint.
    const ProximityCertificate cert = prox_round(inst, rec.w);
    const ProximityCertificate back = certificate_from_json(Json::parse(to_json(cert).dump()));
    out.require(all_passed(verify_certificate(inst, rec.w, back)), tag + "certificate failed re-verification");
    out.require(oracle_optimal(inst, inst.J, cert.z), tag + "certificate z not optimal per the oracle");
    out.require(cert.distance == sup_distance(rec.w, cert.z) && cert.distance < bound,
                tag + "certificate distance");
    out.require(rec.distance <= cert.distance, tag + "nearest point farther than the certificate");
    ++out.checked;

    if (inst.I.empty() || inst.J.empty()) {
      const Rational n_bound = Rational(static_cast<long>(inst.n())) * Rational(delta);
      cross.require(rec.distance <= n_bound, tag + "distance " + str(rec.distance) + " > n Delta");
      cross.require(rec.thm1_applicable && rec.thm1_ok, tag + "record flags");
      ++cross.checked;
    }
  }
  cross.require(cross.checked > 0, "no trial with an empty index set");
  return run;
}

std::vector<LemmaRecord> lemma_records;

Outcome witness_suite() {
  Outcome out;
  lemma_records = lemma3_trials(kLemmaSeed, kLemmaTrials);
  out.require(lemma_records.size() == kLemmaTrials, "wrong record count");
  std::uint64_t olson = 0;
  for (const auto& rec : lemma_records) {
    const std::string tag = "trial " + std::to_string(rec.trial) + ": ";
    const std::size_t d = rec.u.front().size();
    Rational sum = 0;
    for (const auto& a : rec.alpha) sum += a;
    out.require(d <= 3 && rec.u.size() <= 6 && sum >= Rational(static_cast<long>(d)), tag + "input family");
    out.require(rec.exact.has_value(), tag + "exact search returned nothing");
    if (rec.exact) out.require(oracle_beta(rec.u, rec.alpha, *rec.exact), tag + "exact witness fails");
    if (rec.olson) {
      out.require(oracle_beta(rec.u, rec.alpha, *rec.olson), tag + "zero-sum witness fails");
      ++olson;
    }
    ++out.checked;
  }
  out.detail = out.ok ? std::to_string(olson) + " zero-sum witnesses" : out.detail;
  return out;
}

std::vector<ExperimentRecord> bimodular_records;

Outcome bimodular_suite() {
  Outcome out;
  const SearchConfig cfg = bimodular_config();
  bimodular_records = bimodular_validate(cfg);
  out.require(bimodular_records.size() >= 100, "fewer than 100 records");
  for (const auto& rec : bimodular_records) {
    const std::string tag = "trial " + std::to_string(rec.trial) + ": ";
    out.require(rec.status == "ok", tag + rec.status);
    if (rec.status != "ok") continue;
    const Instance& inst = rec.instance;
    const std::size_t n = inst.n();
    const Integer delta = oracle_delta(inst.constraint_matrix());
    out.require(delta <= 2 && delta == rec.delta, tag + "Delta " + delta.get_str());
    out.require(is_integral(inst.b), tag + "b not integral");
    const bool trivial_i = inst.I.empty() || inst.I.size() == n;
    const bool trivial_j = inst.J.empty() || inst.J.size() == n;
    out.require(trivial_i && trivial_j && inst.I != inst.J, tag + "index sets");
    out.require(oracle_optimal(inst, inst.I, rec.w), tag + "w not optimal per the oracle");
    out.require(oracle_optimal(inst, inst.J, rec.z), tag + "z not optimal per the oracle");
    out.require(rec.distance <= Rational(delta), tag + "distance " + str(rec.distance) + " > Delta");
    out.require(rec.vc_a_ok.value_or(false) && rec.vc_b_ok.value_or(false), tag + "edge property");
    ++out.checked;
  }
  return out;
}

Outcome oracle_equivalences() {
  Outcome out;
  std::mt19937_64 rng(2029);
  std::uniform_int_distribution<int> small(1, 3), rows(2, 6), coin(0, 1);

  // Simplex against vertex enumeration on boxed programs; half the right-hand
  // sides are arbitrary, so some programs are infeasible.
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = small(rng);
    const std::size_t m = rows(rng);
    Matrix a = random_int_matrix(rng, m, n, 3);
    Vector b = coin(rng) ? a * random_int_vector(rng, n, 3) : random_int_vector(rng, m, 4);
    Matrix boxed(m + 2 * n, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) boxed(i, j) = a(i, j);
    }
    for (std::size_t j = 0; j < n; ++j) {
      boxed(m + 2 * j, j) = 1;
      boxed(m + 2 * j + 1, j) = -1;
      b.push_back(5);
      b.push_back(5);
    }
    const Vector c = random_int_vector(rng, n, 3);
    const LpResult lp = lp_maximize(boxed, b, c);
    const auto brute = brute_lp(boxed, b, c);
    const std::string tag = "LP " + std::to_string(t) + ": ";
    if (!brute) {
      out.require(lp.status == LpStatus::kInfeasible, tag + "oracle infeasible, simplex " + to_string(lp.status));
    } else {
      out.require(lp.status == LpStatus::kOptimal, tag + "simplex status " + std::string(to_string(lp.status)));
      if (lp.status == LpStatus::kOptimal) {
        out.require(lp.value == brute->second, tag + "value " + str(lp.value) + " vs " + str(brute->second));
        out.require(feasible_point(boxed, b, lp.x), tag + "simplex point infeasible");
      }
    }
    ++out.checked;
  }

  std::uniform_int_distribution<int> order(1, 5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = order(rng);
    const Matrix m = random_int_matrix(rng, k, k, 6);
    out.require(det(m) == cofactor_det(m), "determinant " + std::to_string(t));
    ++out.checked;
  }

  // Zero-sum search against all 2^r - 1 subsets, r <= 12.
  const std::vector<long> primes = {2, 3, 5};
  std::uniform_int_distribution<int> length(1, 12), dim(1, 3);
  for (int t = 0; t < 600; ++t) {
    const long p = primes[t % 3];
    const std::size_t d = dim(rng);
    const std::size_t r = length(rng);
    std::vector<Vector> f;
    for (std::size_t i = 0; i < r; ++i) f.push_back(random_int_vector(rng, d, 7));
    const std::string tag = "zero-sum " + std::to_string(t) + ": ";
    try {
      const auto w = zero_sum_subset(f, static_cast<std::uint64_t>(p));
      out.require(w.has_value() == exhaustive_zero_sum(f, p), tag + "existence disagrees");
      if (w) out.require(witness_sound(f, p, *w), tag + "witness unsound");
    } catch (const std::exception& e) {
      out.require(false, tag + e.what());
    }
    ++out.checked;
  }
  return out;
}

Outcome determinism(const SearchRun& first) {
  Outcome out;
  const auto again = conjecture_search(search_config());
  out.require(to_jsonl(first.records) == to_jsonl(again), "search JSONL differs");
  out.require(to_jsonl(lemma_records) == to_jsonl(lemma3_trials(kLemmaSeed, kLemmaTrials)), "lemma JSONL differs");
  out.require(to_jsonl(bimodular_records) == to_jsonl(bimodular_validate(bimodular_config())),
              "bimodular JSONL differs");
  out.require(!to_jsonl(again).empty(), "empty output");
  out.checked = 3;
  return out;
}

bool report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& run) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = run();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    out.detail = "runtime over " + std::to_string(static_cast<int>(limit_s)) + " s" +
                 (out.ok ? "" : "; " + out.detail);
    out.ok = false;
  }
  char time_buf[32];
  std::snprintf(time_buf, sizeof time_buf, "%.2f s", secs);
  std::printf("criterion %d %s  %s: %llu checked, %s%s\n", id, out.ok ? "PASS" : "FAIL", name.c_str(),
              static_cast<unsigned long long>(out.checked), time_buf,
              out.detail.empty() ? "" : (", " + out.detail).c_str());
  std::fflush(stdout);
  return out.ok;
}

void write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  bool all = true;
  SearchRun search;
  all &= report(1, "tight family reproduction", 5, example1);
  all &= report(2, "Davenport constants", 60, davenport);
  all &= report(3, "union-size proximity suite", 600, [&] {
    search = proximity_suite();
    return search.proximity;
  });
  all &= report(4, "fractional witness agreement", 300, witness_suite);
  all &= report(5, "n Delta cross-check", 0, [&] { return search.pure_or_continuous; });
  all &= report(6, "bimodular validation", 600, bimodular_suite);
  all &= report(7, "oracle equivalences", 0, oracle_equivalences);
  all &= report(8, "determinism", 0, [&] { return determinism(search); });

  if (argc > 1) {
    const std::filesystem::path dir(argv[1]);
    std::filesystem::create_directories(dir);
    write(dir / "search.jsonl", to_jsonl(search.records));
    write(dir / "search_summary.csv", summary_csv(summarize(search.records)));
    write(dir / "lemma3.jsonl", to_jsonl(lemma_records));
    write(dir / "bimodular.jsonl", to_jsonl(bimodular_records));
    write(dir / "bimodular_summary.csv", summary_csv(summarize(bimodular_records)));
  }
  std::printf("acceptance: %s\n", all ? "all criteria pass" : "FAILURES");
  return all ? 0 : 1;
}
