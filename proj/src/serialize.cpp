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

#include "serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace proxlab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Json integer_json(const Integer& v) { return v.get_str(); }

Json vectors_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json integers_json(const std::vector<Integer>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(integer_json(v));
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row_vector(i)));
  return out;
}

Json to_json(const IndexSet& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(i);
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InvalidInput("expected an integer or a rational string, got " + j.dump());
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array, got " + j.dump());
  Vector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidInput("matrix rows have different lengths");
  }
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

IndexSet index_set_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("index set must be an array");
  IndexSet out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      throw InvalidInput("index " + x.dump() + " is not a nonnegative integer");
    }
    out.push_back(x.get<std::size_t>());
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InvalidInput("index set has duplicates");
  }
  return out;
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["A"] = to_json(inst.A);
  j["b"] = to_json(inst.b);
  j["c"] = to_json(inst.c);
  j["I"] = to_json(inst.I);
  j["J"] = to_json(inst.J);
  if (inst.box) j["box"] = inst.box->get_si();
  return j;
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.A = matrix_from_json(field(j, "A"));
  inst.b = vector_from_json(field(j, "b"));
  inst.c = vector_from_json(field(j, "c"));
  if (inst.A.rows() == 0) {
    // Without rows the column count comes from c.
    inst.A = Matrix(0, inst.c.size());
  }
  inst.I = j.contains("I") ? index_set_from_json(j.at("I")) : IndexSet{};
  inst.J = j.contains("J") ? index_set_from_json(j.at("J")) : IndexSet{};
  if (j.contains("box") && !j.at("box").is_null()) {
    const Rational box = rational_from_json(j.at("box"));
    if (!box.is_integer()) throw InvalidInput("box must be an integer");
    inst.box = box.num();
  }
  inst.validate();
  return inst;
}

LemmaInput lemma_input_from_json(const Json& j) {
  LemmaInput in;
  const Json& u = field(j, "u");
  if (!u.is_array()) throw InvalidInput("\"u\" must be an array of vectors");
  for (const auto& v : u) in.u.push_back(vector_from_json(v));
  if (j.contains("alpha")) in.alpha = vector_from_json(j.at("alpha"));
  if (j.contains("p") && !j.at("p").is_null()) {
    if (!j.at("p").is_number_integer() || j.at("p").get<long long>() < 2) {
      throw InvalidInput("\"p\" must be an integer >= 2");
    }
    in.p = j.at("p").get<std::uint64_t>();
  }
  return in;
}

Json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

Json to_json(const DeltaReport& r) {
  Json j;
  j["delta"] = integer_json(r.delta);
  j["witness_rows"] = to_json(r.witness_rows);
  j["witness_cols"] = to_json(r.witness_cols);
  j["is_tu"] = r.is_tu;
  j["lemma7_eligible"] = r.lemma7_eligible;
  j["inspected"] = r.inspected;
  return j;
}

Json to_json(const SolveResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["point"] = r.status == LpStatus::kOptimal ? to_json(r.point) : Json(nullptr);
  j["value"] = r.status == LpStatus::kOptimal ? to_json(r.value) : Json(nullptr);
  j["nodes"] = r.nodes;
  return j;
}

Json to_json(const NearestResult& r) {
  Json j;
  j["point"] = to_json(r.point);
  j["distance"] = to_json(r.distance);
  j["value"] = to_json(r.value);
  j["nodes"] = r.nodes;
  return j;
}

Json to_json(const CheckList& checks) {
  Json j = Json::object();
  for (const auto& [name, ok] : checks) j[name] = ok;
  return j;
}

Json to_json(const ProximityCertificate& c) {
  Json j;
  j["method"] = c.method;
  j["I"] = to_json(c.I);
  j["J"] = to_json(c.J);
  j["D"] = to_json(c.D);
  j["w"] = to_json(c.w);
  j["z_tilde"] = to_json(c.z_tilde);
  j["rays"] = vectors_json(c.rays.rays);
  j["ray_delta_bound"] = integer_json(c.rays.delta_bound);
  j["lambda"] = to_json(c.lambda);
  j["gamma"] = to_json(c.gamma);
  j["z"] = to_json(c.z);
  j["w_tilde"] = to_json(c.w_tilde);
  j["sum_residual"] = to_json(c.sum_residual);
  j["delta"] = integer_json(c.delta);
  j["bound"] = to_json(c.bound);
  j["distance"] = to_json(c.distance);
  j["nodes"] = c.nodes;
  j["iterations"] = c.iterations;
  j["checks"] = to_json(c.checks);
  return j;
}

ProximityCertificate certificate_from_json(const Json& j) {
  ProximityCertificate c;
  c.method = field(j, "method").get<std::string>();
  c.I = index_set_from_json(field(j, "I"));
  c.J = index_set_from_json(field(j, "J"));
  c.D = index_set_from_json(field(j, "D"));
  c.w = vector_from_json(field(j, "w"));
  c.z_tilde = vector_from_json(field(j, "z_tilde"));
  for (const auto& r : field(j, "rays")) c.rays.rays.push_back(vector_from_json(r));
  c.rays.delta_bound = rational_from_json(field(j, "ray_delta_bound")).num();
  c.lambda = vector_from_json(field(j, "lambda"));
  c.gamma = vector_from_json(field(j, "gamma"));
  c.z = vector_from_json(field(j, "z"));
  c.w_tilde = vector_from_json(field(j, "w_tilde"));
  c.sum_residual = rational_from_json(field(j, "sum_residual"));
  c.delta = rational_from_json(field(j, "delta")).num();
  c.bound = rational_from_json(field(j, "bound"));
  c.distance = rational_from_json(field(j, "distance"));
  c.nodes = field(j, "nodes").get<std::uint64_t>();
  c.iterations = field(j, "iterations").get<std::uint64_t>();
  for (const auto& [name, ok] : field(j, "checks").items()) c.checks.emplace_back(name, ok.get<bool>());
  return c;
}

Json to_json(const ZeroSumWitness& w) {
  Json j;
  j["subset"] = to_json(w.subset);
  j["sum"] = to_json(w.sum);
  return j;
}

Json to_json(const DavenportResult& r) {
  Json j;
  j["constant"] = r.constant;
  Json seq = Json::array();
  for (const auto& v : r.longest_free) seq.push_back(v);
  j["longest_zero_sum_free"] = seq;
  j["nodes"] = r.nodes;
  return j;
}

Json to_json(const OlsonAttempt& a) {
  Json j;
  j["p"] = a.p;
  j["q"] = integers_json(a.q);
  j["outcome"] = a.outcome;
  return j;
}

Json to_json(const BetaWitness& w) {
  Json j;
  j["method"] = to_string(w.method);
  j["beta"] = to_json(w.beta);
  j["target"] = to_json(w.target);
  if (w.method == BetaMethod::kOlson) {
    j["p"] = w.p;
    j["q"] = integers_json(w.q);
    j["ell"] = integers_json(w.ell);
    j["epsilon"] = to_json(w.epsilon);
    Json attempts = Json::array();
    for (const auto& a : w.attempts) attempts.push_back(to_json(a));
    j["attempts"] = attempts;
  }
  if (w.method == BetaMethod::kOracle) j["candidates"] = w.candidates;
  return j;
}

Json to_json(const Example1Row& r) {
  Json j;
  j["delta"] = r.delta;
  j["computed_delta"] = integer_json(r.computed_delta);
  j["lp_point"] = to_json(r.lp_point);
  j["lp_opt"] = to_json(r.lp_opt);
  j["mip_point"] = to_json(r.mip_point);
  j["mip_opt"] = to_json(r.mip_opt);
  j["mip_point_first"] = to_json(r.mip_point_first);
  j["distance"] = to_json(r.distance);
  j["distance_first"] = to_json(r.distance_first);
  return j;
}

Json to_json(const ExperimentRecord& r) {
  Json j;
  j["seed"] = r.seed;
  j["trial"] = r.trial;
  j["digest"] = r.digest;
  j["instance"] = instance_to_json(r.instance);
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = integer_json(r.delta);
  j["I"] = to_json(r.I);
  j["J"] = to_json(r.J);
  j["union_size"] = r.d;
  j["status"] = r.status;
  j["regenerated"] = r.regenerated;
  j["w"] = to_json(r.w);
  j["z"] = to_json(r.z);
  j["distance"] = to_json(r.distance);
  j["pipeline_distance"] = optional_json(r.pipeline_distance);
  j["pipeline_method"] = r.pipeline_method;
  j["bounds"] = {{"union_delta", r.bound_thm2.str()},
                 {"n_delta", r.bound_thm1.str()},
                 {"delta", r.bound_prop6.str()}};
  Json flags;
  flags["thm2_ok"] = r.thm2_ok;
  flags["thm1_applicable"] = r.thm1_applicable;
  flags["thm1_ok"] = r.thm1_ok;
  flags["prop6_applicable"] = r.prop6_applicable;
  flags["prop6_ok"] = r.prop6_ok;
  if (r.vc_a_ok) flags["vc_a_ok"] = *r.vc_a_ok;
  if (r.vc_b_ok) flags["vc_b_ok"] = *r.vc_b_ok;
  j["flags"] = flags;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

Json to_json(const SummaryRow& r) {
  Json j;
  j["delta"] = integer_json(r.delta);
  j["trials"] = r.trials;
  j["max_distance"] = to_json(r.max_distance);
  j["max_ratio_distance_over_delta"] = to_json(r.max_ratio);
  j["violations"] = r.violations;
  return j;
}

Json to_json(const VcResult& r) {
  Json j;
  j["a_ok"] = r.a_ok;
  j["b_ok"] = r.b_ok;
  j["tight_rows"] = to_json(r.tight_rows);
  j["hull_vertices"] = vectors_json(r.hull_vertices);
  Json edges = Json::array();
  for (const auto& e : r.edges) {
    Json ej;
    ej["ray"] = to_json(e.ray);
    ej["t_max"] = to_json(e.t_max);
    ej["t0"] = optional_json(e.t0);
    ej["nearest"] = optional_json(e.nearest);
    edges.push_back(ej);
  }
  j["edges"] = edges;
  j["points"] = r.points;
  j["details"] = r.details;
  return j;
}

Json to_json(const LemmaRecord& r) {
  Json j;
  j["seed"] = r.seed;
  j["trial"] = r.trial;
  j["u"] = vectors_json(r.u);
  j["alpha"] = to_json(r.alpha);
  j["exact"] = optional_json(r.exact);
  j["exact_ok"] = r.exact_ok;
  j["olson"] = optional_json(r.olson);
  j["olson_ok"] = r.olson_ok;
  Json attempts = Json::array();
  for (const auto& a : r.attempts) attempts.push_back(to_json(a));
  j["attempts"] = attempts;
  return j;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "delta,trials,max_distance,max_ratio_distance_over_delta,violations\n";
  for (const auto& r : rows) {
    out += r.delta.get_str() + "," + std::to_string(r.trials) + "," + r.max_distance.str() + "," +
           r.max_ratio.str() + "," + std::to_string(r.violations) + "\n";
  }
  return out;
}

}  // namespace proxlab
