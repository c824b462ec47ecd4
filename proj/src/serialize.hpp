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

// JSON encodings. Rationals are written as strings ("3", "-1/2") so no value
// ever passes through a floating-point type; integers are accepted on input.

#ifndef PROXLAB_SERIALIZE_HPP_
#define PROXLAB_SERIALIZE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lab.hpp"
#include "lemma3.hpp"
#include "opt.hpp"
#include "proximity.hpp"
#include "subdet.hpp"
#include "zerosum.hpp"

namespace proxlab {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const IndexSet& s);

Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
// Sorted; throws InvalidInput on negative, non-integer or duplicate entries.
IndexSet index_set_from_json(const Json& j);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);  // validated

struct LemmaInput {
  std::vector<Vector> u;
  Vector alpha;
  std::optional<std::uint64_t> p;
};
LemmaInput lemma_input_from_json(const Json& j);

// Reads a whole file; InvalidInput when it cannot be opened or parsed.
Json load_json_file(const std::string& path);

Json to_json(const DeltaReport& r);
Json to_json(const SolveResult& r);
Json to_json(const NearestResult& r);
Json to_json(const CheckList& checks);
Json to_json(const ProximityCertificate& c);
ProximityCertificate certificate_from_json(const Json& j);
Json to_json(const ZeroSumWitness& w);
Json to_json(const DavenportResult& r);
Json to_json(const OlsonAttempt& a);
Json to_json(const BetaWitness& w);
Json to_json(const Example1Row& r);
Json to_json(const ExperimentRecord& r);
Json to_json(const SummaryRow& r);
Json to_json(const VcResult& r);
Json to_json(const LemmaRecord& r);

// Records one per line, newline-terminated.
template <typename T>
std::string to_jsonl(const std::vector<T>& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows);

}  // namespace proxlab

#endif  // PROXLAB_SERIALIZE_HPP_
