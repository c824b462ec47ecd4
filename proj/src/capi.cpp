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

#include "proxlab/proxlab.h"

#include <new>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lab.hpp"
#include "lemma3.hpp"
#include "proximity.hpp"
#include "serialize.hpp"
#include "subdet.hpp"
#include "zerosum.hpp"

using namespace proxlab;

struct proxlab_instance {
  Instance inst;
};

struct proxlab_result {
  Json body;
  std::string headline;   // first text line, optional
  std::string text;       // replaces the generic text rendering when set
  std::string csv;        // replaces the generic csv rendering when set
  std::vector<std::pair<std::string, std::string>> artifacts;
  mutable std::string rendered;
};

namespace {

thread_local std::string g_last_error;

// Scalars bare, strings unquoted, containers bracketed.
std::string plain(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + plain(j[i]);
    return s + "]";
  }
  if (j.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      s += (first ? "" : ", ") + k + ": " + plain(v);
      first = false;
    }
    return s + "}";
  }
  return j.dump();
}

void text_lines(const Json& j, const std::string& indent, std::string& out) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object() && !v.empty()) {
      out += indent + k + ":\n";
      text_lines(v, indent + "  ", out);
    } else {
      out += indent + k + ": " + plain(v) + "\n";
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string generic_csv(const Json& j) {
  std::string out = "key,value\n";
  for (const auto& [k, v] : j.items()) out += csv_field(k) + "," + csv_field(plain(v)) + "\n";
  return out;
}

Vector parse_csv_vector(const char* text) {
  if (text == nullptr) throw InvalidInput("missing vector");
  Vector out;
  std::string s(text);
  std::size_t start = 0;
  if (s.find_first_not_of(" \t") == std::string::npos) return out;
  while (true) {
    const std::size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    out.push_back(Rational::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

const IndexSet& pick_set(const Instance& inst, const char* set) {
  const std::string s = set ? set : "";
  if (s == "I") return inst.I;
  if (s == "J") return inst.J;
  throw InvalidInput("--set must be I or J, got \"" + s + "\"");
}

template <typename F>
proxlab_status guard(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const Refusal& e) {
    g_last_error = "refused:" + std::string(e.what());
    return PROXLAB_REFUSED;
  } catch (const InvalidInput& e) {
    g_last_error = std::string("invalid input: ") + e.what();
    return PROXLAB_INVALID_INPUT;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("invalid input: ") + e.what();
    return PROXLAB_INVALID_INPUT;
  } catch (const InternalError& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return PROXLAB_INTERNAL;
  } catch (const std::bad_alloc&) {
    g_last_error = "refused:out_of_memory: allocation failed";
    return PROXLAB_REFUSED;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return PROXLAB_INTERNAL;
  } catch (...) {
    g_last_error = "internal error: unknown exception";
    return PROXLAB_INTERNAL;
  }
}

proxlab_status emit(proxlab_result** out, proxlab_result r) {
  if (out == nullptr) throw InvalidInput("null result pointer");
  *out = new proxlab_result(std::move(r));
  return PROXLAB_OK;
}

const Instance& need(const proxlab_instance* inst) {
  if (inst == nullptr) throw InvalidInput("null instance");
  return inst->inst;
}

std::uint64_t or_default(std::uint64_t budget, std::uint64_t fallback) {
  return budget == 0 ? fallback : budget;
}

SearchConfig to_config(const proxlab_search_config* c) {
  if (c == nullptr) throw InvalidInput("null search config");
  if (c->n_min < 1 || c->n_min > c->n_max || c->m_min < 1 || c->m_min > c->m_max) {
    throw InvalidInput("need 1 <= n_min <= n_max and 1 <= m_min <= m_max");
  }
  if (c->entry_bound < 1 || c->box < 1) throw InvalidInput("entry bound and box must be >= 1");
  SearchConfig cfg;
  cfg.trials = c->trials;
  cfg.seed = c->seed;
  cfg.n_min = c->n_min;
  cfg.n_max = c->n_max;
  cfg.m_min = c->m_min;
  cfg.m_max = c->m_max;
  cfg.entry_bound = c->entry_bound;
  cfg.box = c->box;
  cfg.budget = or_default(c->budget, kDefaultEnumerationBudget);
  cfg.timing = c->timing != 0;
  return cfg;
}

Json config_json(const SearchConfig& cfg) {
  Json j;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["n"] = {cfg.n_min, cfg.n_max};
  j["m"] = {cfg.m_min, cfg.m_max};
  j["entry_bound"] = cfg.entry_bound;
  j["box"] = cfg.box;
  return j;
}

proxlab_status experiment_result(const SearchConfig& cfg, const std::vector<ExperimentRecord>& records,
                                  proxlab_result** out) {
  const auto summary = summarize(records);
  proxlab_result r;
  std::uint64_t violations = 0, refused = 0, regenerated = 0;
  for (const auto& rec : records) {
    violations += rec.violation() ? 1 : 0;
    refused += rec.status == "ok" ? 0 : 1;
    regenerated += rec.regenerated;
  }
  r.body["config"] = config_json(cfg);
  r.body["records"] = records.size();
  r.body["refused"] = refused;
  r.body["regenerated"] = regenerated;
  r.body["violations"] = violations;
  Json rows = Json::array();
  for (const auto& s : summary) rows.push_back(to_json(s));
  r.body["summary"] = rows;
  r.csv = summary_csv(summary);
  r.text = std::to_string(records.size()) + " trials, " + std::to_string(refused) + " refused, " +
           std::to_string(violations) + " violations\n";
  for (const auto& s : summary) {
    r.text += "Delta=" + s.delta.get_str() + " trials=" + std::to_string(s.trials) +
              " max_distance=" + s.max_distance.str() + " max_ratio=" + s.max_ratio.str() +
              " violations=" + std::to_string(s.violations) + "\n";
  }
  r.artifacts.emplace_back("records.jsonl", to_jsonl(records));
  r.artifacts.emplace_back("summary.csv", r.csv);
  emit(out, std::move(r));
  if (violations > 0) {
    g_last_error = "internal error: " + std::to_string(violations) + " records violate a bound";
    return PROXLAB_INTERNAL;
  }
  return PROXLAB_OK;
}

}  // namespace

extern "C" {

const char* proxlab_version(void) { return "1.0.0"; }

const char* proxlab_status_name(proxlab_status status) {
  switch (status) {
    case PROXLAB_OK:
      return "ok";
    case PROXLAB_REFUSED:
      return "refused";
    case PROXLAB_INVALID_INPUT:
      return "invalid_input";
    case PROXLAB_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* proxlab_last_error(void) { return g_last_error.c_str(); }

proxlab_status proxlab_instance_parse(const char* json, proxlab_instance** out) {
  return guard([&] {
    if (json == nullptr || out == nullptr) throw InvalidInput("null argument");
    Json j;
    try {
      j = Json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(e.what());
    }
    *out = new proxlab_instance{instance_from_json(j)};
    return PROXLAB_OK;
  });
}

proxlab_status proxlab_instance_load(const char* path, proxlab_instance** out) {
  return guard([&] {
    if (path == nullptr || out == nullptr) throw InvalidInput("null argument");
    *out = new proxlab_instance{instance_from_json(load_json_file(path))};
    return PROXLAB_OK;
  });
}

void proxlab_instance_free(proxlab_instance* inst) { delete inst; }

proxlab_status proxlab_instance_dims(const proxlab_instance* inst, size_t* rows, size_t* cols) {
  return guard([&] {
    const Instance& in = need(inst);
    if (rows) *rows = in.m();
    if (cols) *cols = in.n();
    return PROXLAB_OK;
  });
}

proxlab_status proxlab_delta(const proxlab_instance* inst, uint64_t budget, proxlab_result** out) {
  return guard([&] {
    const DeltaReport rep = max_abs_subdet(need(inst).A, or_default(budget, kDefaultSubdetBudget));
    proxlab_result r;
    r.body = to_json(rep);
    r.headline = "Delta = " + rep.delta.get_str();
    return emit(out, std::move(r));
  });
}

proxlab_status proxlab_lp(const proxlab_instance* inst, proxlab_result** out) {
  return guard([&] {
    proxlab_result r;
    r.body = to_json(lp_solve(need(inst)));
    return emit(out, std::move(r));
  });
}

proxlab_status proxlab_mip(const proxlab_instance* inst, const char* set, uint64_t budget,
                           proxlab_result** out) {
  return guard([&] {
    const Instance& in = need(inst);
    SolveOptions opts;
    opts.budget = or_default(budget, kDefaultEnumerationBudget);
    proxlab_result r;
    r.body = to_json(mip_solve(in, pick_set(in, set), opts));
    return emit(out, std::move(r));
  });
}

proxlab_status proxlab_nearest(const proxlab_instance* inst, const char* set, const char* target,
                               uint64_t budget, proxlab_result** out) {
  return guard([&] {
    const Instance& in = need(inst);
    SolveOptions opts;
    opts.budget = or_default(budget, kDefaultEnumerationBudget);
    const Vector t = parse_csv_vector(target);
    if (t.size() != in.n()) throw InvalidInput("target has the wrong length");
    proxlab_result r;
    r.body = to_json(nearest_optimal(in, pick_set(in, set), t, opts));
    r.headline = "distance = " + r.body["distance"].get<std::string>();
    return emit(out, std::move(r));
  });
}

proxlab_status proxlab_prox(const proxlab_instance* inst, const char* z_tilde, uint64_t budget,
                            proxlab_result** out) {
  return guard([&] {
    const Instance& in = need(inst);
    ProximityOptions opts;
    opts.budget = or_default(budget, kDefaultEnumerationBudget);
    SolveOptions sopts;
    sopts.budget = opts.budget;
    const SolveResult w = mip_solve(in, in.I, sopts);
    if (w.status != LpStatus::kOptimal) throw Refusal("no_optimum", "the I-program has no optimum");
    std::optional<Vector> zt;
    if (z_tilde != nullptr) zt = parse_csv_vector(z_tilde);
    const ProximityCertificate cert = prox_round(in, w.point, zt, opts);
    const CheckList again = verify_certificate(in, w.point, cert, opts);
    proxlab_result r;
    r.body["certificate"] = to_json(cert);
    r.body["verified"] = all_passed(again);
    r.headline = "distance " + cert.distance.str() + " < bound " + cert.bound.str() + " (" +
                 cert.method + ", " + (all_passed(again) ? "verified" : "NOT verified") + ")";
    if (!all_passed(again)) throw InternalError("certificate failed independent re-verification");
    return emit(out, std::move(r));
  });
}

proxlab_status proxlab_verify_certificate(const proxlab_instance* inst, const char* certificate_json,
                                          proxlab_result** out) {
  return guard([&] {
    const Instance& in = need(inst);
    if (certificate_json == nullptr) throw InvalidInput("null certificate");
    Json j;
    try {
      j = Json::parse(certificate_json);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(e.what());
    }
    if (j.contains("certificate")) j = j.at("certificate");
    const ProximityCertificate cert = certificate_from_json(j);
    const CheckList checks = verify_certificate(in, cert.w, cert);
    proxlab_result r;
    r.body["verified"] = all_passed(checks);
    r.body["checks"] = to_json(checks);
    return emit(out, std::move(r));
  });
}

proxlab_status proxlab_zerosum(const char* vectors_json, uint64_t p, proxlab_result** out) {
  return guard([&] {
    if (vectors_json == nullptr) throw InvalidInput("null vector file");
    const LemmaInput in = lemma_input_from_json(Json::parse(vectors_json));
    const std::uint64_t prime = p != 0 ? p : in.p.value_or(0);
    if (prime == 0) throw InvalidInput("zero-sum search needs p");
    if (in.u.empty()) throw InvalidInput("\"u\" is empty");
    const auto w = zero_sum_subset(in.u, prime);
    const std::size_t d = in.u.front().size();
    proxlab_result r;
    r.body["p"] = prime;
    r.body["d"] = d;
    r.body["r"] = in.u.size();
    r.body["davenport_bound"] = olson_bound(prime, d);
    r.body["found"] = w.has_value();
    r.body["witness"] = w ? to_json(*w) : Json(nullptr);
    r.headline = w ? "zero-sum subsequence " + plain(to_json(w->subset))
                   : std::string("no zero-sum subsequence");
    return emit(out, std::move(r));
  });
}

proxlab_status proxlab_davenport(uint64_t p, uint64_t d, uint64_t budget, proxlab_result** out) {
  return guard([&] {
    const std::uint64_t b = or_default(budget, kDefaultDavenportBudget);
    const DavenportResult res = davenport_constant(p, d, b);
    const std::uint64_t formula = olson_bound(p, d);
    proxlab_result r;
    r.body = to_json(res);
    r.body["formula"] = formula;
    r.body["matches_formula"] = res.constant == formula;
    try {
      Json seq = Json::array();
      for (const auto& v : extremal_zero_sum_free(p, d, b)) seq.push_back(to_json(v));
      r.body["extremal_sequence"] = seq;
      r.body["extremal_verified"] = true;
    } catch (const Refusal&) {
      r.body["extremal_sequence"] = nullptr;
      r.body["extremal_verified"] = false;
    }
    r.headline = std::to_string(res.constant);
    if (res.constant != formula) {
      throw InternalError("Davenport constant " + std::to_string(res.constant) + " differs from pd - d + 1 = " +
                          std::to_string(formula));
    }
    return emit(out, std::move(r));
  });
}

proxlab_status proxlab_lemma3(const char* vectors_json, uint64_t budget, proxlab_result** out) {
  return guard([&] {
    if (vectors_json == nullptr) throw InvalidInput("null vector file");
    const LemmaInput in = lemma_input_from_json(Json::parse(vectors_json));
    const std::size_t d = check_lemma_input(in.u, in.alpha);
    Rational sum = 0;
    for (const auto& a : in.alpha) sum += a;
    const auto exact = solve_exact(in.u, in.alpha, or_default(budget, kDefaultCandidateBudget));
    std::vector<std::uint64_t> primes;
    if (in.p) primes.push_back(*in.p);
    const OlsonRun olson = solve_olson_attempts(in.u, in.alpha, primes);
    proxlab_result r;
    r.body["d"] = d;
    r.body["k"] = in.u.size();
    r.body["sum_alpha"] = sum.str();
    r.body["guaranteed"] = sum >= Rational(static_cast<long>(d));
    r.body["exact"] = exact ? to_json(*exact) : Json(nullptr);
    r.body["exact_verified"] = exact && verify_beta(in.u, in.alpha, *exact);
    r.body["olson"] = olson.witness ? to_json(*olson.witness) : Json(nullptr);
    r.body["olson_verified"] = olson.witness && verify_beta(in.u, in.alpha, *olson.witness);
    Json attempts = Json::array();
    for (const auto& a : olson.attempts) attempts.push_back(to_json(a));
    r.body["attempts"] = attempts;
    r.headline = exact ? "beta = " + plain(to_json(exact->beta)) + ", target " +
                             plain(to_json(exact->target))
                       : std::string("no witness");
    return emit(out, std::move(r));
  });
}

proxlab_status proxlab_example1(long delta_max, proxlab_result** out) {
  return guard([&] {
    const auto rows = run_example1(1, delta_max);
    proxlab_result r;
    r.body["rows"] = Json::array();
    r.text = "delta Delta lp_optimum mip_optimum distance\n";
    r.csv = "delta,computed_delta,lp_point,lp_opt,mip_point,mip_opt,distance,distance_first\n";
    for (const auto& row : rows) {
      r.body["rows"].push_back(to_json(row));
      const std::string lp = "(" + row.lp_point[0].str() + "," + row.lp_point[1].str() + ")";
      const std::string mip = "(" + row.mip_point[0].str() + "," + row.mip_point[1].str() + ")";
      r.text += std::to_string(row.delta) + " " + row.computed_delta.get_str() + " " + lp + " " + mip +
                " " + row.distance.str() + "\n";
      r.csv += std::to_string(row.delta) + "," + row.computed_delta.get_str() + "," + csv_field(lp) +
               "," + row.lp_opt.str() + "," + csv_field(mip) + "," + row.mip_opt.str() + "," +
               row.distance.str() + "," + row.distance_first.str() + "\n";
    }
    return emit(out, std::move(r));
  });
}

void proxlab_search_config_default(proxlab_search_config* cfg) {
  if (cfg == nullptr) return;
  const SearchConfig d;
  cfg->trials = d.trials;
  cfg->seed = d.seed;
  cfg->n_min = static_cast<uint32_t>(d.n_min);
  cfg->n_max = static_cast<uint32_t>(d.n_max);
  cfg->m_min = static_cast<uint32_t>(d.m_min);
  cfg->m_max = static_cast<uint32_t>(d.m_max);
  cfg->entry_bound = d.entry_bound;
  cfg->box = d.box;
  cfg->budget = 0;
  cfg->timing = 0;
}

proxlab_status proxlab_search(const proxlab_search_config* cfg, proxlab_result** out) {
  return guard([&] {
    const SearchConfig c = to_config(cfg);
    return experiment_result(c, conjecture_search(c), out);
  });
}

proxlab_status proxlab_bimodular(const proxlab_search_config* cfg, proxlab_result** out) {
  return guard([&] {
    const SearchConfig c = to_config(cfg);
    return experiment_result(c, bimodular_validate(c), out);
  });
}

proxlab_status proxlab_vc_check(const proxlab_instance* inst, const char* vertex, uint64_t budget,
                                proxlab_result** out) {
  return guard([&] {
    const VcResult res =
        vc_check(need(inst), parse_csv_vector(vertex), or_default(budget, kDefaultEnumerationBudget));
    proxlab_result r;
    r.body = to_json(res);
    r.headline = std::string("(a) ") + (res.a_ok ? "holds" : "FAILS") + ", (b) " +
                 (res.b_ok ? "holds" : "FAILS");
    if (!res.a_ok || !res.b_ok) throw InternalError("edge property failed: " + res.details);
    return emit(out, std::move(r));
  });
}

const char* proxlab_result_render(const proxlab_result* res, proxlab_format format) {
  if (res == nullptr) return "";
  switch (format) {
    case PROXLAB_FORMAT_JSON:
      res->rendered = res->body.dump(2) + "\n";
      break;
    case PROXLAB_FORMAT_CSV:
      res->rendered = res->csv.empty() ? generic_csv(res->body) : res->csv;
      break;
    case PROXLAB_FORMAT_TEXT:
    default:
      if (!res->text.empty()) {
        res->rendered = res->text;
      } else {
        res->rendered = res->headline.empty() ? "" : res->headline + "\n";
        text_lines(res->body, "", res->rendered);
      }
  }
  return res->rendered.c_str();
}

size_t proxlab_result_artifact_count(const proxlab_result* res) {
  return res ? res->artifacts.size() : 0;
}

const char* proxlab_result_artifact_name(const proxlab_result* res, size_t i) {
  return res && i < res->artifacts.size() ? res->artifacts[i].first.c_str() : nullptr;
}

const char* proxlab_result_artifact_data(const proxlab_result* res, size_t i) {
  return res && i < res->artifacts.size() ? res->artifacts[i].second.c_str() : nullptr;
}

void proxlab_result_free(proxlab_result* res) { delete res; }

}  // extern "C"
