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

// shallowcheck <describe|equiv|assert|random|simulate|bench> [args]
//
// Exit codes: 0 success / equivalent / assertions hold, 1 inequivalent /
// assertion failed or aborted, 2 usage, schema or validation error, 3 capacity
// error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <new>
#include <optional>
#include <string>

#include "shallowcheck/assertion.hpp"
#include "shallowcheck/bench.hpp"
#include "shallowcheck/description.hpp"
#include "shallowcheck/equivalence.hpp"
#include "shallowcheck/errors.hpp"
#include "shallowcheck/io.hpp"
#include "shallowcheck/oracle.hpp"

namespace sc = shallowcheck;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

sc::DescriptionOptions options_from_env() {
  sc::DescriptionOptions opts;
  if (const char* env = std::getenv("SHALLOWCHECK_SUPPORT_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (*end != '\0' || cap < 1 || cap > 62) {
      throw sc::SchemaError(std::string("SHALLOWCHECK_SUPPORT_CAP must be a positive integer, got \"") + env + "\"");
    }
    opts.support_cap = static_cast<int>(cap);
  }
  return opts;
}

sc::Circuit load_valid_circuit(const std::string& path) {
  sc::Circuit c = sc::io::load_circuit(path);
  const auto violations = sc::validate(c);
  if (!violations.empty()) {
    std::string msg = path + ": invalid circuit";
    for (const auto& v : violations) {
      msg += "\n  layer " + std::to_string(v.layer) + ", gate " + std::to_string(v.gate) + " [" + v.rule + "]: " +
             v.message;
    }
    throw ValidationFailure(msg);
  }
  return c;
}

void emit(const sc::io::json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    sc::io::write_file_atomic(out_path, text);
  }
}

int cmd_describe(const std::string& circuit_path, const std::string& out_path) {
  const sc::Circuit c = load_valid_circuit(circuit_path);
  const sc::Description d = sc::compute_description(c, options_from_env());
  emit(sc::io::to_json(d), out_path);
  return kExitOk;
}

int cmd_equiv(const std::string& a, const std::string& b, const std::string& mode, double threshold,
              const std::string& report_path) {
  const sc::Circuit c0 = load_valid_circuit(a);
  const sc::Circuit c1 = load_valid_circuit(b);
  const auto opts = options_from_env();
  const sc::EquivalenceReport r =
      mode == "strong" ? sc::check_strong(c0, c1, threshold, opts) : sc::check_weak(c0, c1, threshold, opts);
  const auto j = sc::io::to_json(r);
  std::cout << j.dump(2) << "\n";
  if (!report_path.empty()) sc::io::write_file_atomic(report_path, j.dump(2) + "\n");
  if (r.near_threshold) std::cerr << "warning: max_linf is within a factor of ten of the threshold\n";
  return r.equivalent() ? kExitOk : kExitNegative;
}

struct AssertArgs {
  std::string circuit;
  std::string assertions;
  double threshold = sc::kDefaultAssertionThreshold;
  bool runtime = false;
  int runs = 1;
  std::uint64_t seed = 0;
  double noise = 0.0;
  std::string report;
};

int cmd_assert(const AssertArgs& args) {
  const sc::Circuit c = load_valid_circuit(args.circuit);
  const sc::AssertionTuple a = sc::io::load_assertions(args.assertions);
  for (const auto& p : a.projections) {
    if (p.support().back() >= c.n_qubits) throw sc::SchemaError("assertion support exceeds the circuit width");
  }
  sc::io::json out;
  bool ok = true;
  if (!args.runtime) {
    const auto verdicts = sc::verify_static(c, a, args.threshold, options_from_env());
    out = sc::io::to_json(verdicts);
    for (const auto& v : verdicts) ok = ok && v.holds;
  } else {
    if (args.runs < 1) throw sc::SchemaError("--runs must be positive");
    sc::io::json reports = sc::io::json::array();
    int aborts = 0;
    for (int run = 0; run < args.runs; ++run) {
      sc::Rng rng(sc::derive_seed(args.seed, static_cast<std::uint64_t>(run)));
      const sc::StateVector state = sc::simulate_with_depolarizing(c, args.noise, rng);
      const sc::RuntimeResult r = sc::runtime_assert(state, c.n_qubits, a, rng);
      if (!r.passed) ++aborts;
      reports.push_back(sc::io::to_json(r));
    }
    out = {{"reports", std::move(reports)}, {"abort_count", aborts}, {"run_count", args.runs}};
    ok = aborts == 0;
  }
  std::cout << out.dump(2) << "\n";
  if (!args.report.empty()) sc::io::write_file_atomic(args.report, out.dump(2) + "\n");
  return ok ? kExitOk : kExitNegative;
}

int cmd_random(int n, int depth, std::uint64_t seed, const std::string& out_path) {
  if (n < 1 || depth < 0) throw sc::SchemaError("--n must be positive and --depth non-negative");
  emit(sc::io::to_json(sc::random_circuit(n, depth, seed)), out_path);
  return kExitOk;
}

int cmd_simulate(const std::string& circuit_path, const std::string& out_path) {
  const sc::Circuit c = load_valid_circuit(circuit_path);
  const sc::StateVector state = sc::oracle::simulate(c);
  emit(sc::io::state_to_json(state, c.n_qubits), out_path);
  return kExitOk;
}

int cmd_bench(const std::string& mode, const std::string& n_range, int depth, int trials, std::uint64_t seed,
              const std::string& csv) {
  sc::BenchConfig config;
  const auto m = sc::parse_bench_mode(mode);
  if (!m) throw sc::SchemaError("unknown bench mode \"" + mode + "\"");
  config.mode = *m;
  config.n_range = sc::parse_n_range(n_range);
  config.depth = depth;
  config.trials = trials;
  config.seed = seed;
  config.options = options_from_env();
  const auto records = sc::run_bench(config);
  if (csv.empty()) {
    std::cout << sc::kBenchCsvHeader << "\n";
    for (const auto& r : records) std::cout << sc::to_csv_row(r) << "\n";
  } else {
    sc::append_csv(csv, records);
  }
  int capacity_rows = 0;
  for (const auto& r : records) capacity_rows += r.capacity_error ? 1 : 0;
  if (capacity_rows > 0) std::cerr << capacity_rows << " row(s) exceeded the support cap\n";
  return kExitOk;
}

template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const sc::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::bad_alloc&) {
    std::cerr << "capacity error: out of memory\n";
    return kExitCapacity;
  } catch (const ValidationFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const sc::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const sc::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constraint-based descriptions and equivalence checks for shallow quantum circuits"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string circuit, out;
  auto* describe = app.add_subcommand("describe", "Compute the local-projection description of a circuit");
  describe->add_option("circuit", circuit, "Circuit JSON")->required();
  describe->add_option("-o,--out", out, "Output path (stdout if omitted)");
  describe->callback([&] { action = [&] { return cmd_describe(circuit, out); }; });

  std::string a_path, b_path, mode = "weak", report;
  double threshold = sc::kDefaultEquivalenceThreshold;
  auto* equiv = app.add_subcommand("equiv", "Check weak or strong equivalence of two circuits");
  equiv->add_option("a", a_path, "First circuit")->required();
  equiv->add_option("b", b_path, "Second circuit")->required();
  equiv->add_option("--mode", mode, "weak or strong")->check(CLI::IsMember({"weak", "strong"}));
  equiv->add_option("--threshold", threshold, "L-infinity residual threshold");
  equiv->add_option("--report", report, "Also write the report JSON here");
  equiv->callback([&] { action = [&] { return cmd_equiv(a_path, b_path, mode, threshold, report); }; });

  AssertArgs assert_args;
  auto* assert_cmd = app.add_subcommand("assert", "Check local-projection assertions on a circuit output");
  assert_cmd->add_option("circuit", assert_args.circuit, "Circuit JSON")->required();
  assert_cmd->add_option("assertions", assert_args.assertions, "Assertion JSON")->required();
  assert_cmd->add_option("--threshold", assert_args.threshold, "Static L-infinity threshold");
  assert_cmd->add_flag("--runtime", assert_args.runtime, "Simulate measurements instead of checking statically");
  assert_cmd->add_option("--runs", assert_args.runs, "Runtime repetitions");
  assert_cmd->add_option("--seed", assert_args.seed, "Runtime master seed");
  assert_cmd->add_option("--noise", assert_args.noise, "Depolarizing probability per gate")
      ->check(CLI::Range(0.0, 1.0));
  assert_cmd->add_option("--report", assert_args.report, "Also write the JSON result here");
  assert_cmd->callback([&] { action = [&] { return cmd_assert(assert_args); }; });

  int n = 0, depth = 3;
  std::uint64_t seed = 0;
  std::string random_out;
  auto* random = app.add_subcommand("random", "Generate a seeded Haar-random brickwork circuit");
  random->add_option("--n", n, "Qubit count")->required();
  random->add_option("--depth", depth, "Layer count");
  random->add_option("--seed", seed, "Seed");
  random->add_option("-o,--out", random_out, "Output path (stdout if omitted)");
  random->callback([&] { action = [&] { return cmd_random(n, depth, seed, random_out); }; });

  std::string sim_circuit, sim_out;
  auto* simulate = app.add_subcommand("simulate", "Dense state-vector simulation for small circuits");
  simulate->add_option("circuit", sim_circuit, "Circuit JSON")->required();
  simulate->add_option("-o,--out", sim_out, "Output path (stdout if omitted)");
  simulate->callback([&] { action = [&] { return cmd_simulate(sim_circuit, sim_out); }; });

  std::string bench_mode = "describe", n_range = "10:10:1", csv;
  int bench_depth = 3, trials = 1;
  std::uint64_t bench_seed = 0;
  auto* bench = app.add_subcommand("bench", "Time seeded random circuits and write CSV rows");
  bench->add_option("--mode", bench_mode, "describe, weak, strong or inequiv")
      ->check(CLI::IsMember({"describe", "weak", "strong", "inequiv"}));
  bench->add_option("--n-range", n_range, "a:b:step, inclusive");
  bench->add_option("--depth", bench_depth, "Layer count");
  bench->add_option("--trials", trials, "Trials per n");
  bench->add_option("--seed", bench_seed, "Master seed");
  bench->add_option("--csv", csv, "Append rows to this CSV (stdout if omitted)");
  bench->callback([&] { action = [&] { return cmd_bench(bench_mode, n_range, bench_depth, trials, bench_seed, csv); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  return guarded(action);
}
