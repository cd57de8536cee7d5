// Copyright 2026 The maxcover Authors
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

// maxcover command line: generate, solve, exact, verify, bench.
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxcover/maxcover.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliError {
  mc_status status;
};

void Check(mc_status status) {
  if (status != MC_OK) throw CliError{status};
}

// Owns a string returned by the library.
struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { mc_string_free(p); }
};

struct InstanceGuard {
  mc_instance* p = nullptr;
  InstanceGuard() = default;
  InstanceGuard(InstanceGuard&& other) noexcept : p(other.p) { other.p = nullptr; }
  InstanceGuard(const InstanceGuard&) = delete;
  InstanceGuard& operator=(const InstanceGuard&) = delete;
  ~InstanceGuard() { mc_instance_free(p); }
};

void WriteText(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw CliError{MC_IO};
  }
  out << text;
}

InstanceGuard Load(const std::string& path, std::optional<std::size_t> k) {
  InstanceGuard inst;
  Check(mc_instance_load(path.c_str(), &inst.p));
  if (k) Check(mc_instance_set_k(inst.p, *k));
  return inst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized maximum coverage over black-box sets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mc_version()));

  // generate
  mc_generate_params gp;
  mc_generate_params_default(&gp);
  std::string gen_kind, gen_out, gen_twin_out;
  auto* generate = app.add_subcommand("generate", "Write a synthetic instance file");
  generate->add_option("kind", gen_kind, "random|disjoint|overlap-chain|twin|rectangles")
      ->required()
      ->check(CLI::IsMember({"random", "disjoint", "overlap-chain", "twin", "rectangles"}));
  generate->add_option("--n", gp.n, "number of sets");
  generate->add_option("--m", gp.m, "set size (random: maximum set size)");
  generate->add_option("--k", gp.k, "budget stored in the file");
  generate->add_option("--d", gp.d, "twin: number of blocks");
  generate->add_option("--universe", gp.universe, "random: universe size (0 = 2m)");
  generate->add_option("--overlap", gp.overlap, "overlap-chain: shared elements");
  generate->add_option("--dim", gp.dim, "rectangles: dimension");
  generate->add_option("--extent", gp.extent, "rectangles: coordinate range");
  generate->add_option("--alpha-l", gp.alpha_l);
  generate->add_option("--alpha-r", gp.alpha_r);
  generate->add_option("--delta-l", gp.delta_l);
  generate->add_option("--delta-r", gp.delta_r);
  generate->add_option("--seed", gp.seed);
  generate->add_option("-o,--out", gen_out, "output path (default stdout)");
  generate->add_option("--twin-out", gen_twin_out, "twin: path for L'");

  // solve
  mc_solve_options so;
  mc_solve_options_default(&so);
  std::string solve_file, solve_strategy = "single", solve_backend = "sorted", solve_out;
  std::optional<std::uint64_t> solve_seed;
  std::optional<std::size_t> solve_k;
  auto* solve = app.add_subcommand("solve", "Run the randomized greedy solver");
  solve->add_option("file", solve_file)->required();
  solve->add_option("--epsilon", so.epsilon, "target accuracy")->check(CLI::Range(0.0, 1.0));
  solve->add_option("--xi", so.xi, "use this xi directly instead of deriving it");
  solve->add_option("--gamma", so.gamma, "failure probability")->check(CLI::Range(0.0, 1.0));
  solve->add_option("--k", solve_k, "override the file's budget");
  solve->add_option("--strategy", solve_strategy)
      ->check(CLI::IsMember({"multi", "single", "single-sort"}));
  solve->add_option("--backend", solve_backend)
      ->check(CLI::IsMember({"sorted", "unsorted", "btree", "hash", "rect"}));
  solve->add_option("--seed", solve_seed);
  solve->add_option("--trials", so.trials)->check(CLI::PositiveNumber);
  solve->add_option("--threads", so.threads, "0 = sequential");
  solve->add_option("-o,--out", solve_out, "CSV path (default stdout)");

  // exact
  std::string exact_file, exact_method = "brute-force";
  std::optional<std::size_t> exact_k;
  std::uint64_t exact_cap = 1'000'000;
  auto* exact = app.add_subcommand("exact", "Exact greedy or brute-force optimum");
  exact->add_option("file", exact_file)->required();
  exact->add_option("--method", exact_method)
      ->check(CLI::IsMember({"greedy", "brute-force"}));
  exact->add_option("--k", exact_k, "override the file's budget");
  exact->add_option("--cap", exact_cap, "maximum number of k-subsets to enumerate");

  // verify
  std::string verify_suite = "all", verify_out;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  verify->add_option("suite", verify_suite,
                     "ratio|sandwich|estimator|counters|formulas|uniformity|"
                     "equivalence|reduction|twin|greedy-floor|all");
  verify->add_option("--seed", verify_seed);
  verify->add_option("-o,--out", verify_out, "JSON path (default stdout)");

  // bench
  mc_bench_options bo;
  mc_bench_options_default(&bo);
  std::string bench_strategies = "multi,single", bench_backend = "sorted", bench_out;
  std::vector<std::uint64_t> bench_sizes = {1'000, 10'000, 100'000};
  auto* bench = app.add_subcommand("bench", "Cost counters across set sizes");
  bench->add_option("--n", bo.n);
  bench->add_option("--k", bo.k);
  bench->add_option("--xi", bo.xi);
  bench->add_option("--gamma", bo.gamma);
  bench->add_option("--strategies", bench_strategies, "comma separated");
  bench->add_option("--backend", bench_backend)
      ->check(CLI::IsMember({"sorted", "unsorted", "btree", "hash"}));
  bench->add_option("--sizes", bench_sizes)->delimiter(',');
  bench->add_option("--seed", bo.seed);
  bench->add_option("-o,--out", bench_out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*generate) {
      InstanceGuard primary, twin;
      Check(mc_generate(gen_kind.c_str(), &gp, &primary.p, &twin.p));
      OwnedString text;
      Check(mc_instance_to_text(primary.p, &text.p));
      WriteText(gen_out, text.p);
      if (twin.p != nullptr) {
        OwnedString twin_text;
        Check(mc_instance_to_text(twin.p, &twin_text.p));
        if (gen_twin_out.empty()) {
          std::cerr << "note: twin L' not written (use --twin-out)\n";
        } else {
          WriteText(gen_twin_out, twin_text.p);
        }
      }
      return kExitPass;
    }
    if (*solve) {
      InstanceGuard inst = Load(solve_file, solve_k);
      so.strategy = solve_strategy.c_str();
      so.backend = solve_backend.c_str();
      if (solve_seed) {
        so.has_seed = 1;
        so.seed = *solve_seed;
      }
      mc_report* raw = nullptr;
      Check(mc_solve(inst.p, &so, &raw));
      OwnedString csv;
      const mc_status status = mc_report_csv(raw, &csv.p);
      mc_report_free(raw);
      Check(status);
      WriteText(solve_out, csv.p);
      return kExitPass;
    }
    if (*exact) {
      InstanceGuard inst = Load(exact_file, exact_k);
      std::size_t n = 0, k = 0;
      Check(mc_instance_info(inst.p, &n, &k));
      std::vector<std::size_t> indices(k);
      std::size_t count = 0;
      std::uint64_t coverage = 0;
      Check(mc_exact(inst.p, exact_method.c_str(), exact_cap, indices.data(), indices.size(),
                     &count, &coverage));
      std::cout << "method," << exact_method << "\nselected,";
      for (std::size_t i = 0; i < count; ++i) std::cout << (i ? ";" : "") << indices[i];
      std::cout << "\ncoverage," << coverage << "\n";
      return kExitPass;
    }
    if (*verify) {
      int passed = 0;
      OwnedString json;
      Check(mc_verify(verify_suite.c_str(), verify_seed, &passed, &json.p));
      WriteText(verify_out, json.p);
      if (verify_out.empty() || verify_out == "-") std::fputs("\n", stdout);
      return passed ? kExitPass : kExitFail;
    }
    if (*bench) {
      bo.strategies = bench_strategies.c_str();
      bo.backend = bench_backend.c_str();
      bo.set_sizes = bench_sizes.data();
      bo.set_size_count = bench_sizes.size();
      int independent = 0;
      OwnedString csv;
      Check(mc_bench(&bo, &independent, &csv.p));
      WriteText(bench_out, csv.p);
      std::cerr << "counters independent of m: " << (independent ? "yes" : "no") << "\n";
      return independent ? kExitPass : kExitFail;
    }
  } catch (const CliError& e) {
    if (e.status != MC_IO || *mc_last_error() != '\0') {
      std::cerr << "error (" << mc_status_name(e.status) << "): " << mc_last_error() << "\n";
    }
    return kExitUsage;
  }
  return kExitUsage;
}
