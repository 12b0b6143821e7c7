// Copyright 2026 The Authors.
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace tropflag {

// Caller passed arguments that violate an operation's contract (bad ranks,
// mismatched dimensions, malformed input). Maps to CLI exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the mathematical domain of the operation
// (all-infinite point, rank-zero deletion, rank-deficient matrix).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration exceeded its node budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, long long nodes_visited,
                long long cells_found)
      : std::runtime_error(what),
        nodes_visited_(nodes_visited),
        cells_found_(cells_found) {}

  long long nodes_visited() const { return nodes_visited_; }
  long long cells_found() const { return cells_found_; }

 private:
  long long nodes_visited_;
  long long cells_found_;
};

// Two routes that must agree disagreed. Always a library defect.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tropflag
