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

#include "shallowcheck/bench.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <new>

#include "shallowcheck/equivalence.hpp"
#include "shallowcheck/errors.hpp"
#include "shallowcheck/io.hpp"

namespace shallowcheck {
namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("invalid integer \"" + std::string(text) + "\"");
  }
  return value;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string to_string(BenchMode mode) {
  switch (mode) {
    case BenchMode::Describe:
      return "describe";
    case BenchMode::Weak:
      return "weak";
    case BenchMode::Strong:
      return "strong";
    case BenchMode::Inequiv:
      return "inequiv";
  }
  return "unknown";
}

std::optional<BenchMode> parse_bench_mode(std::string_view text) {
  for (BenchMode m : {BenchMode::Describe, BenchMode::Weak, BenchMode::Strong, BenchMode::Inequiv}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

std::vector<int> NRange::values() const {
  std::vector<int> out;
  for (int n = first; n <= last; n += step) out.push_back(n);
  return out;
}

NRange parse_n_range(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  NRange r;
  if (parts.size() == 1) {
    r.first = r.last = parse_int(parts[0]);
  } else if (parts.size() == 2 || parts.size() == 3) {
    r.first = parse_int(parts[0]);
    r.last = parse_int(parts[1]);
    r.step = parts.size() == 3 ? parse_int(parts[2]) : 1;
  } else {
    throw DomainError("n-range must look like a:b:step");
  }
  if (r.step <= 0 || r.first < 1 || r.last < r.first) throw DomainError("n-range must satisfy 1 <= a <= b, step > 0");
  return r;
}

std::uint64_t trial_seed(std::uint64_t master, int n, int trial) {
  return derive_seed(derive_seed(master, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(trial));
}

BenchRecord run_trial(BenchMode mode, int n, int depth, int trial, std::uint64_t seed,
                      const DescriptionOptions& options) {
  BenchRecord rec;
  rec.mode = mode;
  rec.n = n;
  rec.depth = depth;
  rec.trial = trial;
  rec.seed = seed;
  using clock = std::chrono::steady_clock;
  const Circuit u = random_circuit(n, depth, seed);
  auto start = clock::now();
  try {
    switch (mode) {
      case BenchMode::Describe: {
        start = clock::now();
        for_each_projection(u, options, [&](int, LocalProjection&& p) {
          rec.max_support = std::max(rec.max_support, p.support_size());
        });
        rec.seconds = std::chrono::duration<double>(clock::now() - start).count();
        rec.max_linf = std::numeric_limits<double>::quiet_NaN();
        break;
      }
      case BenchMode::Weak:
      case BenchMode::Strong:
      case BenchMode::Inequiv: {
        const Circuit v = mode == BenchMode::Inequiv ? random_circuit(n, depth, derive_seed(seed, 1))
                                                     : random_circuit(n, depth, seed);
        start = clock::now();
        const EquivalenceReport r = mode == BenchMode::Strong ? check_strong(u, v, kDefaultEquivalenceThreshold, options)
                                                              : check_weak(u, v, kDefaultEquivalenceThreshold, options);
        rec.seconds = std::chrono::duration<double>(clock::now() - start).count();
        rec.max_support = r.max_support;
        rec.max_linf = r.max_linf;
        break;
      }
    }
  } catch (const CapacityError&) {
    rec.seconds = std::chrono::duration<double>(clock::now() - start).count();
    rec.capacity_error = true;
    rec.max_support = 0;
    rec.max_linf = std::numeric_limits<double>::infinity();
  } catch (const std::bad_alloc&) {
    rec.seconds = std::chrono::duration<double>(clock::now() - start).count();
    rec.capacity_error = true;
    rec.max_support = 0;
    rec.max_linf = std::numeric_limits<double>::infinity();
  }
  return rec;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.depth < 0 || config.trials < 0) throw DomainError("depth and trials must be non-negative");
  std::vector<BenchRecord> out;
  for (int n : config.n_range.values()) {
    for (int trial = 0; trial < config.trials; ++trial) {
      out.push_back(run_trial(config.mode, n, config.depth, trial, trial_seed(config.seed, n, trial), config.options));
    }
  }
  return out;
}

std::string to_csv_row(const BenchRecord& r) {
  return to_string(r.mode) + "," + std::to_string(r.n) + "," + std::to_string(r.depth) + "," +
         std::to_string(r.trial) + "," + std::to_string(r.seed) + "," + format_double(r.seconds) + "," +
         std::to_string(r.max_support) + "," + format_double(r.max_linf);
}

void append_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records) {
  std::string contents;
  if (std::filesystem::exists(path)) contents = io::read_file(path);
  if (contents.empty()) {
    contents = std::string(kBenchCsvHeader) + "\n";
  } else if (contents.back() != '\n') {
    contents += '\n';
  }
  for (const BenchRecord& r : records) contents += to_csv_row(r) + "\n";
  io::write_file_atomic(path, contents);
}

}  // namespace shallowcheck
