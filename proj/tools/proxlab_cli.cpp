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

// proxlab: command-line front end over the C API in proxlab/proxlab.h.
// Exit codes are the library status codes (0 ok, 1 refused, 2 invalid
// input, 3 internal failure).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "proxlab/proxlab.h"

namespace {

struct Globals {
  std::string out;
  std::string format = "text";
  uint64_t budget = 0;
  uint64_t seed = 1;
};

// Owns one instance handle; exits through the status path on failure.
class InstanceHandle {
 public:
  InstanceHandle() = default;
  ~InstanceHandle() { proxlab_instance_free(ptr_); }
  InstanceHandle(const InstanceHandle&) = delete;
  InstanceHandle& operator=(const InstanceHandle&) = delete;
  proxlab_status load(const std::string& path) { return proxlab_instance_load(path.c_str(), &ptr_); }
  const proxlab_instance* get() const { return ptr_; }

 private:
  proxlab_instance* ptr_ = nullptr;
};

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

bool write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int fail(proxlab_status status) {
  std::string msg = proxlab_last_error();
  for (char& ch : msg) ch = ch == '\n' ? ' ' : ch;
  std::cerr << msg << "\n";
  return status;
}

// Prints or writes the result, frees it, and maps the status to an exit code.
int finish(proxlab_status status, proxlab_result* res, const Globals& g, bool out_is_dir) {
  if (res == nullptr) return fail(status);
  static const std::map<std::string, proxlab_format> kFormats = {
      {"text", PROXLAB_FORMAT_TEXT}, {"json", PROXLAB_FORMAT_JSON}, {"csv", PROXLAB_FORMAT_CSV}};
  const std::string rendered = proxlab_result_render(res, kFormats.at(g.format));
  int code = status;
  if (g.out.empty()) {
    std::cout << rendered;
  } else if (out_is_dir) {
    std::error_code ec;
    std::filesystem::create_directories(g.out, ec);
    for (size_t i = 0; i < proxlab_result_artifact_count(res); ++i) {
      const auto path = std::filesystem::path(g.out) / proxlab_result_artifact_name(res, i);
      if (!write_file(path, proxlab_result_artifact_data(res, i))) {
        std::cerr << "invalid input: cannot write " << path.string() << "\n";
        code = PROXLAB_INVALID_INPUT;
      }
    }
    std::cout << rendered;
  } else if (!write_file(g.out, rendered)) {
    std::cerr << "invalid input: cannot write " << g.out << "\n";
    code = PROXLAB_INVALID_INPUT;
  }
  if (status != PROXLAB_OK) fail(status);
  proxlab_result_free(res);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proxlab: exact proximity experiments for mixed-integer programs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(proxlab_version()));

  Globals g;
  app.add_option("--out", g.out, "Output file (directory for search and bimodular)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--budget", g.budget, "Enumeration budget, 0 for the default");
  app.add_option("--seed", g.seed, "Random seed");

  std::string file, set = "I", target, vertex, vectors, certificate, z_tilde;
  uint64_t p = 0, d = 0, trials = 100;
  long delta_max = 10;
  proxlab_search_config cfg;
  proxlab_search_config_default(&cfg);

  auto* delta = app.add_subcommand("delta", "Largest absolute subdeterminant of A");
  delta->add_option("file", file, "Instance JSON")->required();
  auto* lp = app.add_subcommand("lp", "Solve the linear relaxation");
  lp->add_option("file", file, "Instance JSON")->required();
  auto* mip = app.add_subcommand("mip", "Solve the mixed program with integer set I or J");
  mip->add_option("file", file, "Instance JSON")->required();
  mip->add_option("--set", set, "I or J")->check(CLI::IsMember({"I", "J"}));
  auto* nearest = app.add_subcommand("nearest", "Optimal point nearest to a target in the infinity norm");
  nearest->add_option("file", file, "Instance JSON")->required();
  nearest->add_option("--set", set, "I or J")->check(CLI::IsMember({"I", "J"}));
  nearest->add_option("--target", target, "Comma-separated rationals")->required();
  auto* prox = app.add_subcommand("prox", "Certified rounding of the I-optimum to a J-optimum");
  prox->add_option("file", file, "Instance JSON")->required();
  prox->add_option("--z-tilde", z_tilde, "Known J-optimum, comma-separated");
  auto* verify = app.add_subcommand("verify", "Re-check a certificate written by prox --format json");
  verify->add_option("file", file, "Instance JSON")->required();
  verify->add_option("--certificate", certificate, "Certificate JSON file")->required();
  auto* zerosum = app.add_subcommand("zerosum", "Zero-sum subsequence modulo p");
  zerosum->add_option("--p", p, "Prime modulus (overrides the file)");
  zerosum->add_option("--file", vectors, "Vector JSON")->required();
  auto* davenport = app.add_subcommand("davenport", "Davenport constant of (Z/pZ)^d by search");
  davenport->add_option("--p", p, "Prime")->required();
  davenport->add_option("--d", d, "Rank")->required();
  auto* lemma3 = app.add_subcommand("lemma3", "Fractional zero-sum witness beta");
  lemma3->add_option("--file", vectors, "Vector JSON with u and alpha")->required();
  auto* example1 = app.add_subcommand("example1", "Tight family with distance delta - 1");
  example1->add_option("--delta-max", delta_max, "Largest delta")->check(CLI::PositiveNumber);
  auto* search = app.add_subcommand("search", "Random search for proximity bound violations");
  auto* bimodular = app.add_subcommand("bimodular", "Random validation on instances with Delta <= 2");
  for (auto* sub : {search, bimodular}) {
    sub->add_option("--trials", trials, "Number of trials");
    sub->add_option("--n-min", cfg.n_min, "Fewest variables");
    sub->add_option("--n-max", cfg.n_max, "Most variables");
    sub->add_option("--m-min", cfg.m_min, "Fewest rows");
    sub->add_option("--m-max", cfg.m_max, "Most rows");
    sub->add_option("--entry-bound", cfg.entry_bound, "Entries of A lie in [-bound, bound]");
    sub->add_option("--box", cfg.box, "Box radius U");
    sub->add_flag("--timing", cfg.timing, "Record wall-clock times");
  }
  auto* vc = app.add_subcommand("vc-check", "Edge property of the integer hull near an LP vertex");
  vc->add_option("file", file, "Instance JSON")->required();
  vc->add_option("--vertex", vertex, "LP vertex, comma-separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : PROXLAB_INVALID_INPUT;
  }

  proxlab_result* res = nullptr;
  proxlab_status st = PROXLAB_OK;
  InstanceHandle inst;
  const bool needs_instance = !file.empty();
  if (needs_instance && (st = inst.load(file)) != PROXLAB_OK) return fail(st);

  std::string text;
  if (*delta) {
    st = proxlab_delta(inst.get(), g.budget, &res);
  } else if (*lp) {
    st = proxlab_lp(inst.get(), &res);
  } else if (*mip) {
    st = proxlab_mip(inst.get(), set.c_str(), g.budget, &res);
  } else if (*nearest) {
    st = proxlab_nearest(inst.get(), set.c_str(), target.c_str(), g.budget, &res);
  } else if (*prox) {
    st = proxlab_prox(inst.get(), z_tilde.empty() ? nullptr : z_tilde.c_str(), g.budget, &res);
  } else if (*verify) {
    if (!read_file(certificate, text)) {
      std::cerr << "invalid input: cannot read " << certificate << "\n";
      return PROXLAB_INVALID_INPUT;
    }
    st = proxlab_verify_certificate(inst.get(), text.c_str(), &res);
  } else if (*zerosum || *lemma3) {
    if (!read_file(vectors, text)) {
      std::cerr << "invalid input: cannot read " << vectors << "\n";
      return PROXLAB_INVALID_INPUT;
    }
    st = *zerosum ? proxlab_zerosum(text.c_str(), p, &res) : proxlab_lemma3(text.c_str(), g.budget, &res);
  } else if (*davenport) {
    st = proxlab_davenport(p, d, g.budget, &res);
  } else if (*example1) {
    st = proxlab_example1(delta_max, &res);
  } else if (*search || *bimodular) {
    cfg.trials = trials;
    cfg.seed = g.seed;
    cfg.budget = g.budget;
    // Bimodular instances are rare among wide entries; default to {-1,0,1}.
    if (*bimodular && bimodular->count("--entry-bound") == 0) cfg.entry_bound = 1;
    st = *search ? proxlab_search(&cfg, &res) : proxlab_bimodular(&cfg, &res);
    return finish(st, res, g, true);
  } else if (*vc) {
    st = proxlab_vc_check(inst.get(), vertex.c_str(), g.budget, &res);
  }
  return finish(st, res, g, false);
}
