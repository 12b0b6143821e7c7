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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tropflag/quotient.hpp"

namespace tropflag::cli {

// Exit codes shared by every subcommand.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

// Test seams.
struct Hooks {
  std::optional<TheoremAPredicates> theorem_a;
};

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Hooks& hooks = {});

}  // namespace tropflag::cli
