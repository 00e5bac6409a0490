// Copyright 2026 The kpell Authors
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

#ifndef KPELL_TOOLS_CLI_HPP_
#define KPELL_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "kpell/metrics.hpp"
#include "kpell/words.hpp"

namespace kpell::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudget = 3,
  kInternal = 4,
};

struct VerifyOptions {
  unsigned n_max = 6;
  std::vector<unsigned> k_set{2, 3};
  std::uint64_t budget = kDefaultVertexBudget;
  std::uint64_t bfs_budget = kDefaultBfsBudget;
  std::uint64_t cube_budget = 5'000;
  std::uint64_t median_budget = kDefaultMatrixBudget;
  std::uint64_t hamilton_budget = 50'000;
  std::uint64_t median_sample = 100'000;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  // Wall-clock timings make the report nondeterministic, so they are opt-in.
  bool timings = false;
};

using Json = nlohmann::ordered_json;

// Runs every check for every (n, k) in range and returns the report.
Json run_verify(const VerifyOptions& options);
// True unless some check has status "fail".
bool report_passed(const Json& report);
std::string render_verify_text(const Json& report);

// Metrics summary for one graph:
// {"n","k","radius","diameter","center_size","center_matches_prediction",
//  "median_checked","median_unique","seed"}.
Json metrics_report(unsigned n, unsigned k, std::uint64_t seed, unsigned threads, std::uint64_t bfs_budget,
                    std::uint64_t median_budget);

// "2,3", "2-6" or a mix such as "2,4-6".
std::vector<unsigned> parse_k_set(const std::string& text);

// Default vertex budget, honoring KPELL_BUDGET.
std::uint64_t default_budget();

// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kpell::cli

#endif  // KPELL_TOOLS_CLI_HPP_
