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

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "maxcover/harness.hpp"
#include "maxcover/parallel.hpp"

namespace maxcover::harness {

namespace {

double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string Real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

SolveReport Solve(const InstanceFile& file, const SolveOptions& options) {
  if (options.trials == 0) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  GreedyParams params =
      options.xi ? GreedyParams::FromXi(*options.xi, options.gamma, file.k, options.strategy)
                 : GreedyParams::FromEpsilon(options.epsilon, options.gamma,
                                             file.bias.beta(), file.k, options.strategy);
  const bool parallel_trials = options.trials > 1 && options.threads > 1;
  params.threads = parallel_trials ? 0 : options.threads;

  SolveReport report;
  report.xi = params.xi;
  report.epsilon_prime = params.epsilon_prime;
  report.gamma = params.gamma;
  report.strategy = std::string(StrategyName(options.strategy));
  report.backend = std::string(BackendName(options.backend));
  report.seed = options.seed.value_or(file.seed);

  std::optional<std::vector<ElementList>> sets;
  try {
    sets = MaterializeSets(file, options.materialize_cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCapExceeded) throw;
  }
  std::optional<std::uint64_t> optimum;
  if (sets && file.k >= 1 && file.k <= sets->size() &&
      Binomial(sets->size(), file.k) <= options.brute_force_cap) {
    optimum = BruteForceOptimum(*sets, file.k, options.brute_force_cap).coverage;
  }

  const Rng root(report.seed);
  report.trials.resize(options.trials);
  ParallelFor(options.trials, parallel_trials ? options.threads : 0, [&](std::size_t t) {
    const auto start = std::chrono::steady_clock::now();
    const Rng trial_rng = root.split(t);
    Rng build_rng = trial_rng.split(0);
    CoverageInstance instance = BuildInstance(file, options.backend, build_rng);
    TrialReport& tr = report.trials[t];
    tr.trial = t;
    tr.result = ApproximateMaximumCover(instance, params, trial_rng.split(1));
    if (sets) tr.coverage = UnionSize(*sets, tr.result.selected);
    tr.optimum = optimum;
    if (tr.coverage && optimum && *optimum > 0) {
      tr.ratio = static_cast<double>(*tr.coverage) / static_cast<double>(*optimum);
    }
    tr.wall_ms = MillisSince(start);
  });
  return report;
}

std::string SolveReport::ToCsv() const {
  std::ostringstream out;
  out << "trial,strategy,backend,seed,xi,epsilon_prime,gamma,samples_per_estimate,"
         "selected,z,z_rounded,coverage,optimum,ratio,steps,random_draws,"
         "membership_queries,wall_ms\n";
  for (const auto& t : trials) {
    out << t.trial << ',' << strategy << ',' << backend << ',' << seed << ','
        << Real(xi) << ',' << Real(epsilon_prime) << ',' << Real(gamma) << ','
        << t.result.samples_per_estimate << ',';
    for (std::size_t j = 0; j < t.result.selected.size(); ++j) {
      out << (j ? ";" : "") << t.result.selected[j];
    }
    out << ',' << Real(t.result.z) << ',' << t.result.z_rounded << ',';
    if (t.coverage) out << *t.coverage;
    out << ',';
    if (t.optimum) out << *t.optimum;
    out << ',';
    if (t.ratio) out << Real(*t.ratio);
    out << ',' << t.result.counters.steps << ',' << t.result.counters.random_draws << ','
        << t.result.counters.membership_queries << ',' << Real(t.wall_ms) << '\n';
  }
  return out.str();
}

ExactSolution SolveExact(const InstanceFile& file, ExactMethod method,
                         std::uint64_t cap) {
  const auto sets = MaterializeSets(file);
  return method == ExactMethod::kGreedy ? ExactGreedy(sets, file.k)
                                        : BruteForceOptimum(sets, file.k, cap);
}

BenchReport Bench(const BenchOptions& options) {
  BenchReport report;
  std::map<Strategy, std::vector<CostCounters>> by_strategy;
  for (Strategy s : options.strategies) {
    for (std::uint64_t m : options.set_sizes) {
      GeneratorParams gp;
      gp.n = options.n;
      gp.m = m;
      gp.k = options.k;
      gp.seed = options.seed;
      const InstanceFile file = Generate(GeneratorKind::kDisjoint, gp).primary;
      const Rng root(options.seed);
      Rng build_rng = root.split(0);
      CoverageInstance instance = BuildInstance(file, options.backend, build_rng);
      const auto params = GreedyParams::FromXi(options.xi, options.gamma, options.k, s);
      const auto start = std::chrono::steady_clock::now();
      const CoverageResult r = ApproximateMaximumCover(instance, params, root.split(1));
      report.rows.push_back({std::string(StrategyName(s)), m, r.counters, MillisSince(start)});
      by_strategy[s].push_back(r.counters);
    }
  }
  report.counters_independent_of_m = true;
  for (const auto& [s, rows] : by_strategy) {
    for (const auto& c : rows) {
      if (c.random_draws != rows.front().random_draws ||
          c.membership_queries != rows.front().membership_queries) {
        report.counters_independent_of_m = false;
      }
    }
  }
  return report;
}

std::string BenchReport::ToCsv() const {
  std::ostringstream out;
  out << "strategy,m,steps,random_draws,membership_queries,wall_ms\n";
  for (const auto& r : rows) {
    out << r.strategy << ',' << r.m << ',' << r.counters.steps << ','
        << r.counters.random_draws << ',' << r.counters.membership_queries << ','
        << Real(r.wall_ms) << '\n';
  }
  return out.str();
}

}  // namespace maxcover::harness
