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

#ifndef PROXLAB_ERRORS_HPP_
#define PROXLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace proxlab {

// Malformed or inconsistent input (bad dimensions, parse failures, indices
// out of range). Maps to exit code 2 at the C boundary.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

class DimensionError : public InvalidInput {
 public:
  explicit DimensionError(const std::string& what) : InvalidInput(what) {}
};

class SingularMatrix : public std::domain_error {
 public:
  explicit SingularMatrix(const std::string& what) : std::domain_error(what) {}
};

// A computation that was declined rather than approximated: enumeration
// budgets, unbounded relaxations without a box, and similar. `reason` is a
// short machine-parsable token such as "budget_exceeded".
class Refusal : public std::runtime_error {
 public:
  Refusal(std::string reason, const std::string& detail)
      : std::runtime_error(reason + ": " + detail), reason_(std::move(reason)) {}
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

// A guarantee from the underlying theory did not hold. Always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace proxlab

#endif  // PROXLAB_ERRORS_HPP_
