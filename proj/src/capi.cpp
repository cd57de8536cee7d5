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

#include "maxcover/maxcover.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "maxcover/harness.hpp"

struct mc_instance {
  maxcover::harness::InstanceFile file;
};

struct mc_report {
  maxcover::harness::SolveReport report;
};

namespace {

using maxcover::Error;
using maxcover::ErrorCode;
namespace h = maxcover::harness;

thread_local std::string last_error;

mc_status Fail(mc_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs fn, translating exceptions to status codes.
template <class Fn>
mc_status Guard(Fn&& fn) {
  try {
    fn();
    return MC_OK;
  } catch (const Error& e) {
    return Fail(static_cast<mc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(MC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(MC_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void RequireNonNull(const void* p, const char* what) {
  if (p == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
  }
}

maxcover::Strategy StrategyOrThrow(const char* name) {
  RequireNonNull(name, "strategy");
  auto s = maxcover::ParseStrategy(name);
  if (!s) throw Error(ErrorCode::kInvalidArgument, std::string("unknown strategy '") + name + "'");
  return *s;
}

h::BackendKind BackendOrThrow(const char* name) {
  RequireNonNull(name, "backend");
  auto b = h::ParseBackend(name);
  if (!b) throw Error(ErrorCode::kInvalidArgument, std::string("unknown backend '") + name + "'");
  return *b;
}

}  // namespace

extern "C" {

const char* mc_version(void) { return "1.0.0"; }

const char* mc_last_error(void) { return last_error.c_str(); }

const char* mc_status_name(mc_status status) {
  switch (status) {
    case MC_OK: return "ok";
    case MC_INTERNAL: return "internal";
    default:
      if (status >= MC_INVALID_ARGUMENT && status <= MC_IO) {
        return maxcover::ErrorCodeName(static_cast<ErrorCode>(status)).data();
      }
      return "unknown";
  }
}

void mc_string_free(char* s) { std::free(s); }

mc_status mc_instance_parse(const char* text, mc_instance** out) {
  return Guard([&] {
    RequireNonNull(text, "text");
    RequireNonNull(out, "out");
    *out = new mc_instance{h::ParseInstance(text)};
  });
}

mc_status mc_instance_load(const char* path, mc_instance** out) {
  return Guard([&] {
    RequireNonNull(path, "path");
    RequireNonNull(out, "out");
    *out = new mc_instance{h::LoadInstance(path)};
  });
}

mc_status mc_instance_save(const mc_instance* inst, const char* path) {
  return Guard([&] {
    RequireNonNull(inst, "instance");
    RequireNonNull(path, "path");
    h::SaveInstance(inst->file, path);
  });
}

mc_status mc_instance_to_text(const mc_instance* inst, char** out) {
  return Guard([&] {
    RequireNonNull(inst, "instance");
    RequireNonNull(out, "out");
    *out = CopyString(h::EmitInstance(inst->file));
  });
}

mc_status mc_instance_info(const mc_instance* inst, size_t* set_count, size_t* k) {
  return Guard([&] {
    RequireNonNull(inst, "instance");
    if (set_count) *set_count = inst->file.sets.size();
    if (k) *k = inst->file.k;
  });
}

mc_status mc_instance_set_k(mc_instance* inst, size_t k) {
  return Guard([&] {
    RequireNonNull(inst, "instance");
    if (k < 1 || k > inst->file.sets.size()) {
      throw Error(ErrorCode::kInvalidArgument, "k must satisfy 1 <= k <= n");
    }
    inst->file.k = k;
  });
}

void mc_instance_free(mc_instance* inst) { delete inst; }

void mc_generate_params_default(mc_generate_params* params) {
  if (params == nullptr) return;
  const h::GeneratorParams d;
  *params = {d.n,    d.m,      d.k,       d.d,       d.universe, d.overlap, d.dim,
             d.extent, 0.0,    0.0,       0.0,       0.0,        d.seed};
}

mc_status mc_generate(const char* kind, const mc_generate_params* params,
                      mc_instance** primary, mc_instance** twin) {
  return Guard([&] {
    RequireNonNull(kind, "kind");
    RequireNonNull(params, "params");
    RequireNonNull(primary, "primary");
    auto k = h::ParseGenerator(kind);
    if (!k) throw Error(ErrorCode::kInvalidArgument, std::string("unknown generator '") + kind + "'");
    h::GeneratorParams gp;
    gp.n = params->n;
    gp.m = params->m;
    gp.k = params->k;
    gp.d = params->d;
    gp.universe = params->universe;
    gp.overlap = params->overlap;
    gp.dim = params->dim;
    gp.extent = params->extent;
    gp.bias = {params->alpha_l, params->alpha_r, params->delta_l, params->delta_r};
    gp.seed = params->seed;
    h::GeneratedInstances g = h::Generate(*k, gp);
    *primary = new mc_instance{std::move(g.primary)};
    if (twin) *twin = g.twin ? new mc_instance{std::move(*g.twin)} : nullptr;
  });
}

void mc_solve_options_default(mc_solve_options* options) {
  if (options == nullptr) return;
  const h::SolveOptions d;
  *options = {d.epsilon, 0.0, d.gamma, "single", "sorted", 0, 0, d.trials, d.threads};
}

mc_status mc_solve(const mc_instance* inst, const mc_solve_options* options,
                   mc_report** out) {
  return Guard([&] {
    RequireNonNull(inst, "instance");
    RequireNonNull(options, "options");
    RequireNonNull(out, "out");
    h::SolveOptions o;
    o.epsilon = options->epsilon;
    if (options->xi > 0.0) o.xi = options->xi;
    o.gamma = options->gamma;
    o.strategy = StrategyOrThrow(options->strategy);
    o.backend = BackendOrThrow(options->backend);
    if (options->has_seed) o.seed = options->seed;
    o.trials = options->trials;
    o.threads = options->threads;
    *out = new mc_report{h::Solve(inst->file, o)};
  });
}

size_t mc_report_trial_count(const mc_report* report) {
  return report == nullptr ? 0 : report->report.trials.size();
}

mc_status mc_report_trial(const mc_report* report, size_t trial, mc_trial_summary* out) {
  return Guard([&] {
    RequireNonNull(report, "report");
    RequireNonNull(out, "out");
    if (trial >= report->report.trials.size()) {
      throw Error(ErrorCode::kInvalidArgument, "trial index out of range");
    }
    const auto& t = report->report.trials[trial];
    out->z = t.result.z;
    out->z_rounded = t.result.z_rounded;
    out->coverage = t.coverage ? static_cast<int64_t>(*t.coverage) : -1;
    out->optimum = t.optimum ? static_cast<int64_t>(*t.optimum) : -1;
    out->ratio = t.ratio ? *t.ratio : std::numeric_limits<double>::quiet_NaN();
    out->samples_per_estimate = t.result.samples_per_estimate;
    out->steps = t.result.counters.steps;
    out->random_draws = t.result.counters.random_draws;
    out->membership_queries = t.result.counters.membership_queries;
    out->selected_count = t.result.selected.size();
  });
}

mc_status mc_report_selected(const mc_report* report, size_t trial, size_t* indices,
                             size_t capacity) {
  return Guard([&] {
    RequireNonNull(report, "report");
    if (trial >= report->report.trials.size()) {
      throw Error(ErrorCode::kInvalidArgument, "trial index out of range");
    }
    const auto& sel = report->report.trials[trial].result.selected;
    if (capacity > 0) RequireNonNull(indices, "indices");
    for (size_t i = 0; i < sel.size() && i < capacity; ++i) indices[i] = sel[i];
  });
}

mc_status mc_report_csv(const mc_report* report, char** out) {
  return Guard([&] {
    RequireNonNull(report, "report");
    RequireNonNull(out, "out");
    *out = CopyString(report->report.ToCsv());
  });
}

void mc_report_free(mc_report* report) { delete report; }

mc_status mc_exact(const mc_instance* inst, const char* method, uint64_t cap,
                   size_t* indices, size_t capacity, size_t* count, uint64_t* coverage) {
  return Guard([&] {
    RequireNonNull(inst, "instance");
    RequireNonNull(method, "method");
    h::ExactMethod m;
    if (std::strcmp(method, "greedy") == 0) {
      m = h::ExactMethod::kGreedy;
    } else if (std::strcmp(method, "brute-force") == 0) {
      m = h::ExactMethod::kBruteForce;
    } else {
      throw Error(ErrorCode::kInvalidArgument, std::string("unknown method '") + method + "'");
    }
    const auto sol = h::SolveExact(inst->file, m, cap == 0 ? maxcover::kDefaultBruteForceCap : cap);
    if (capacity > 0) RequireNonNull(indices, "indices");
    for (size_t i = 0; i < sol.indices.size() && i < capacity; ++i) indices[i] = sol.indices[i];
    if (count) *count = sol.indices.size();
    if (coverage) *coverage = sol.coverage;
  });
}

mc_status mc_verify(const char* suite, uint64_t seed, int* passed, char** json) {
  return Guard([&] {
    RequireNonNull(suite, "suite");
    const auto report = h::Verify(suite, seed);
    if (passed) *passed = report.passed() ? 1 : 0;
    if (json) *json = CopyString(report.ToJson());
  });
}

void mc_bench_options_default(mc_bench_options* options) {
  if (options == nullptr) return;
  static const uint64_t kSizes[] = {1'000, 10'000, 100'000};
  const h::BenchOptions d;
  *options = {d.n, d.k, d.xi, d.gamma, "multi,single", "sorted", kSizes, 3, d.seed};
}

mc_status mc_bench(const mc_bench_options* options, int* independent_of_m, char** csv) {
  return Guard([&] {
    RequireNonNull(options, "options");
    h::BenchOptions o;
    o.n = options->n;
    o.k = options->k;
    o.xi = options->xi;
    o.gamma = options->gamma;
    o.backend = BackendOrThrow(options->backend);
    o.seed = options->seed;
    RequireNonNull(options->strategies, "strategies");
    o.strategies.clear();
    std::string list = options->strategies;
    for (std::size_t start = 0; start <= list.size();) {
      std::size_t end = list.find(',', start);
      if (end == std::string::npos) end = list.size();
      const std::string name = list.substr(start, end - start);
      o.strategies.push_back(StrategyOrThrow(name.c_str()));
      start = end + 1;
    }
    if (options->set_size_count > 0) RequireNonNull(options->set_sizes, "set_sizes");
    o.set_sizes.assign(options->set_sizes, options->set_sizes + options->set_size_count);
    const auto report = h::Bench(o);
    if (independent_of_m) *independent_of_m = report.counters_independent_of_m ? 1 : 0;
    if (csv) *csv = CopyString(report.ToCsv());
  });
}

}  // extern "C"
