// Copyright 2026 The QLAN Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qlan {

/// Precondition violated on a pure operation (unknown vertex, bad gate, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A forced measurement outcome whose Born probability is (numerically) zero.
class ImpossibleOutcomeError : public std::runtime_error {
 public:
  ImpossibleOutcomeError(std::size_t measurement_index, const std::string& what)
      : std::runtime_error(what), measurement_index_(measurement_index) {}

  std::size_t measurement_index() const noexcept { return measurement_index_; }

 private:
  std::size_t measurement_index_;
};

/// The measurement or correction protocol reached a state it cannot continue from.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scenario document rejected. `field()` names the offending JSON path.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A sweep would exceed the configured run budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("sweep requires " + std::to_string(required) +
                           " runs, budget is " + std::to_string(budget)),
        required_(required) {}

  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace qlan
