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

#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "oracles.hpp"
#include "proximity.hpp"

using namespace proxlab;

namespace {

Instance example1(int delta, IndexSet i, IndexSet j) {
  Instance inst;
  inst.A = Matrix{{-delta, 0}, {delta, -1}};
  inst.b = {-1, 0};
  inst.c = {0, -1};
  inst.I = std::move(i);
  inst.J = std::move(j);
  return inst;
}

bool check_value(const CheckList& checks, const std::string& name) {
  for (const auto& [n, ok] : checks) {
    if (n == name) return ok;
  }
  FAIL("missing check " << name);
  return false;
}

IndexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  IndexSet s;
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (coin(rng)) s.push_back(j);
  }
  return s;
}

}  // namespace

TEST_CASE("prox_round on the tight family") {
  const Instance inst = example1(3, {}, {0, 1});
  const Vector w{Rational(1, 3), 1};
  const ProximityCertificate cert = prox_round(inst, w);
  CHECK(cert.z == Vector{1, 3});
  CHECK(cert.distance == 2);
  CHECK(cert.bound == 6);
  CHECK(cert.delta == 3);
  CHECK(cert.rays.rays == std::vector<Vector>{{0, -1}, {1, 3}});
  CHECK(cert.lambda == Vector{0, Rational(2, 3)});
  CHECK(cert.sum_residual == Rational(2, 3));
  CHECK(all_passed(cert.checks));
  CHECK(all_passed(verify_certificate(inst, w, cert)));
}

TEST_CASE("prox_round trivial cases") {
  const Instance same = example1(3, {0, 1}, {0, 1});
  ProximityCertificate cert = prox_round(same, Vector{1, 3});
  CHECK(cert.method == "identity");
  CHECK(cert.z == Vector{1, 3});
  CHECK(cert.distance == 0);

  // w = z~: nothing to round.
  const Instance inst = example1(3, {0}, {0, 1});
  cert = prox_round(inst, Vector{1, 3});
  CHECK(cert.method == "direct");
  CHECK(cert.z == Vector{1, 3});
  CHECK(cert.distance == 0);

  CHECK_THROWS_AS(prox_round(inst, Vector{1, 4}), InvalidInput);
  CHECK_THROWS_AS(prox_round(inst, Vector{1, 3}, Vector{2, 6}), InvalidInput);
}

TEST_CASE("verify_certificate flags tampering") {
  const Instance inst = example1(3, {}, {0, 1});
  const Vector w{Rational(1, 3), 1};
  const ProximityCertificate cert = prox_round(inst, w);

  ProximityCertificate off_lattice = cert;
  off_lattice.gamma[1] = Rational(1, 2);
  CHECK_FALSE(check_value(verify_certificate(inst, w, off_lattice), "gamma_lattice"));

  ProximityCertificate small_delta = cert;
  small_delta.delta = 2;
  CHECK_FALSE(check_value(verify_certificate(inst, w, small_delta), "ray_norms"));
  CHECK_FALSE(check_value(verify_certificate(inst, w, small_delta), "delta_exact"));

  ProximityCertificate far = cert;
  far.distance = 7;
  CHECK_FALSE(check_value(verify_certificate(inst, w, far), "distance_chain"));
}

TEST_CASE("property: rounding verifies on random boxed instances") {
  std::mt19937_64 rng(707);
  int maximizer_runs = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t m = 1 + trial % 4;
    Instance inst;
    inst.A = proxlab::testing::random_int_matrix(rng, m, n, 3);
    const Vector x0 = proxlab::testing::random_int_vector(rng, n, 3);
    inst.b = inst.A * x0;
    inst.c = proxlab::testing::random_int_vector(rng, n, 3);
    inst.box = 4;
    do {
      inst.I = random_subset(rng, n);
      inst.J = random_subset(rng, n);
    } while (inst.I == inst.J);

    const Vector w = mip_solve(inst, inst.I).point;
    const ProximityCertificate exact = prox_round(inst, w);
    CHECK(all_passed(exact.checks));
    CHECK(exact.distance < exact.bound);
    if (inst.I.empty() || inst.J.empty()) {
      CHECK(exact.distance <= Rational(static_cast<long>(n)) * Rational(exact.delta));
    }
    if (exact.method == "maximizer") ++maximizer_runs;

    ProximityOptions fallback;
    fallback.force_fallback = true;
    const ProximityCertificate iter = prox_round(inst, w, std::nullopt, fallback);
    CHECK(all_passed(iter.checks));
    CHECK(iter.sum_residual >= exact.sum_residual);
    CHECK(dot(inst.c, iter.z) == dot(inst.c, exact.z));
  }
  CHECK(maximizer_runs > 10);
}
