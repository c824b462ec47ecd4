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

// Experiments: the tight two-variable family, randomized proximity searches
// with exact distances, the Delta <= 2 validation, and a checker for the
// Veselov-Chirkov edge properties of bimodular systems.
//
// Every trial draws from its own generator seeded by (seed, trial), so a run
// is reproducible record by record regardless of how many trials precede it.

#ifndef PROXLAB_LAB_HPP_
#define PROXLAB_LAB_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lemma3.hpp"
#include "opt.hpp"

namespace proxlab {

// A = [[-d, 0], [d, -1]], b = (-1, 0), c = (0, -1).
Instance example1_instance(long delta);

struct Example1Row {
  long delta = 0;
  Integer computed_delta;
  Vector lp_point;
  Rational lp_opt;
  Vector mip_point;  // J = {0, 1}
  Rational mip_opt;
  Vector mip_point_first;  // J = {0}
  Rational distance;        // nearest J = {0, 1} optimum to the LP optimum
  Rational distance_first;  // same for J = {0}
};

std::vector<Example1Row> run_example1(long delta_min, long delta_max);

struct SearchConfig {
  std::size_t n_min = 1, n_max = 3;
  std::size_t m_min = 1, m_max = 4;
  int entry_bound = 3;
  int box = 4;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  bool pipeline = true;  // also run the rounding construction
  bool timing = false;   // wall-clock per trial; breaks byte-identical output
};

struct ExperimentRecord {
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::string digest;  // FNV-1a of the canonical instance JSON
  Instance instance;
  std::size_t n = 0, m = 0;
  Integer delta;
  IndexSet I, J;
  std::size_t d = 0;  // |I u J|
  std::string status = "ok";  // or "refused:<reason>"
  std::uint64_t regenerated = 0;
  Vector w, z;
  Rational distance;
  std::optional<Rational> pipeline_distance;
  std::string pipeline_method;
  Rational bound_thm2, bound_thm1, bound_prop6;
  bool thm2_ok = false;
  bool thm1_applicable = false, thm1_ok = false;
  bool prop6_applicable = false, prop6_ok = false;
  std::optional<bool> vc_a_ok, vc_b_ok;
  std::optional<double> timing_ms;

  // A false applicable flag, or the rounding beating the exact nearest point.
  bool violation() const;
};

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);
std::string fnv1a_hex(const std::string& bytes);

std::vector<ExperimentRecord> conjecture_search(const SearchConfig& cfg);

// Delta <= 2 instances with integral b and I, J in {empty, [n]}. Each record
// also runs vc_check at the LP optimum.
std::vector<ExperimentRecord> bimodular_validate(const SearchConfig& cfg);

struct SummaryRow {
  Integer delta;
  std::uint64_t trials = 0;
  Rational max_distance;
  Rational max_ratio;
  std::uint64_t violations = 0;
};

// One row per Delta, increasing.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records);

struct VcEdge {
  Vector ray;                      // primitive direction of the edge
  Rational t_max;                  // edge is x* + t ray, 0 <= t <= t_max
  std::optional<Rational> t0;      // first integer point, if any
  std::optional<Vector> nearest;   // x* + t0 ray
};

struct VcResult {
  bool a_ok = false;
  bool b_ok = false;
  IndexSet tight_rows;
  std::vector<Vector> hull_vertices;  // vertices of Q
  std::vector<VcEdge> edges;
  std::uint64_t points = 0;  // integer points examined
  std::string details;
};

// Checks both edge properties at the vertex x* of the (box-closed) polyhedron.
// Throws InvalidInput unless rank = n, every n x n minor is at most 2 in
// absolute value, b is integral and x* is a vertex; Refusal past `budget`
// lattice points.
VcResult vc_check(const Instance& inst, const Vector& vertex,
                  std::uint64_t budget = kDefaultEnumerationBudget);

struct LemmaRecord {
  std::uint64_t seed = 0, trial = 0;
  std::vector<Vector> u;
  Vector alpha;
  std::optional<BetaWitness> exact;
  bool exact_ok = false;
  std::optional<BetaWitness> olson;
  bool olson_ok = false;
  std::vector<OlsonAttempt> attempts;
};

// Random (u, alpha) with sum alpha >= d, d <= d_max, k <= k_max.
std::vector<LemmaRecord> lemma3_trials(std::uint64_t seed, std::uint64_t trials,
                                       std::size_t d_max = 3, std::size_t k_max = 6);

}  // namespace proxlab

#endif  // PROXLAB_LAB_HPP_
