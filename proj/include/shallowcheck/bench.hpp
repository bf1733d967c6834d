// Copyright 2026 The shallowcheck Authors
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

// Seeded timing runs over random brickwork circuits, written as CSV.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shallowcheck/description.hpp"

namespace shallowcheck {

enum class BenchMode { Describe, Weak, Strong, Inequiv };

std::string to_string(BenchMode mode);
std::optional<BenchMode> parse_bench_mode(std::string_view text);

struct BenchRecord {
  BenchMode mode = BenchMode::Describe;
  int n = 0;
  int depth = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  double seconds = 0.0;
  int max_support = 0;
  /// NaN for describe rows; +inf when the run hit a capacity limit.
  double max_linf = 0.0;
  bool capacity_error = false;
};

struct NRange {
  int first = 0;
  int last = 0;
  int step = 1;

  std::vector<int> values() const;
};

/// Parses "a:b:step" (inclusive) or a single integer.
NRange parse_n_range(std::string_view text);

struct BenchConfig {
  BenchMode mode = BenchMode::Describe;
  NRange n_range{10, 10, 1};
  int depth = 3;
  int trials = 1;
  std::uint64_t seed = 0;
  DescriptionOptions options;
};

/// Seed of trial `trial` at width `n`.
std::uint64_t trial_seed(std::uint64_t master, int n, int trial);

/// Times a single trial; only the core call sits inside the clock.
BenchRecord run_trial(BenchMode mode, int n, int depth, int trial, std::uint64_t seed,
                      const DescriptionOptions& options = {});

std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline constexpr std::string_view kBenchCsvHeader = "mode,n,depth,trial,seed,seconds,max_support,max_linf";

std::string to_csv_row(const BenchRecord& r);

/// Appends rows to `path`, writing the header when the file is new or empty.
/// The file is replaced atomically.
void append_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records);

}  // namespace shallowcheck
