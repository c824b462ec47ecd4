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

// Rounding between the optima of two integrality patterns on one polyhedron.
//
// Given w optimal for the I-program and z~ optimal for the J-program, write
// y = z~ - w as a conic combination sum lambda_i v^i of integer generators of
// the cone of directions that keep the sign pattern of A y. Moving back along
// a part gamma of that combination whose D-projection is integral (D = I u J)
// yields
//
//   z  = z~ - sum gamma_i v^i   (feasible, integral on J, still optimal)
//   w~ = w  + sum gamma_i v^i   (feasible, integral on I)
//
// and once sum(lambda_i - gamma_i) < |D| the distance ||w - z|| is below
// |D| * Delta(A).

#ifndef PROXLAB_PROXIMITY_HPP_
#define PROXLAB_PROXIMITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cones.hpp"
#include "opt.hpp"

namespace proxlab {

struct ProximityOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;  // gamma maximization nodes
  std::uint64_t subdet_budget = kDefaultSubdetBudget;
  std::uint64_t fallback_iterations = 1000;
  bool force_fallback = false;  // skip the exact maximization
};

using CheckList = std::vector<std::pair<std::string, bool>>;

struct ProximityCertificate {
  // "identity" (I = J), "direct" (w = z~), "maximizer", or "iterative".
  std::string method;
  IndexSet I, J, D;
  Vector w, z_tilde;
  RaySet rays;
  Vector lambda, gamma;
  Vector z, w_tilde;
  Rational sum_residual;
  Integer delta;
  Rational bound;
  Rational distance;
  std::uint64_t nodes = 0;
  std::uint64_t iterations = 0;
  CheckList checks;
};

// w must be optimal for the I-program; z~ is computed by mip_solve when absent.
// Throws InvalidInput if w or z~ is not optimal, Refusal when an optimum does
// not exist or a budget runs out, and InternalError if a guarantee fails.
ProximityCertificate prox_round(const Instance& inst, const Vector& w,
                                const std::optional<Vector>& z_tilde = std::nullopt,
                                const ProximityOptions& opts = {});

// Re-derives every inequality from scratch. Never throws for a malformed
// certificate; failures show up as false entries.
CheckList verify_certificate(const Instance& inst, const Vector& w,
                             const ProximityCertificate& cert,
                             const ProximityOptions& opts = {});

bool all_passed(const CheckList& checks);

}  // namespace proxlab

#endif  // PROXLAB_PROXIMITY_HPP_
