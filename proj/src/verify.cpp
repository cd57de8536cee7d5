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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "json.hpp"
#include "maxcover/backends.hpp"
#include "maxcover/btree.hpp"
#include "maxcover/estimation.hpp"
#include "maxcover/harness.hpp"
#include "maxcover/parallel.hpp"

namespace maxcover::harness {

namespace {

// Binomial slack used by every probabilistic criterion: a failure
// probability p observed over `trials` independent trials.
double FailureThreshold(double p, std::size_t trials) {
  return p + 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

std::size_t Workers() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::string Fraction(std::size_t num, std::size_t den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

CriterionResult Criterion(std::string id, std::string name, bool passed,
                          double measured, double threshold, std::string detail) {
  return {std::move(id), std::move(name), passed, measured, threshold, std::move(detail)};
}

// ---------------------------------------------------------------------------
// Shared random-instance trials (ratio, sandwich, greedy floor)

constexpr std::size_t kRatioTrials = 200;
constexpr double kRatioXi = 0.2;
constexpr double kRatioGamma = 0.1;

struct RatioTrial {
  std::uint64_t coverage = 0;
  std::uint64_t optimum = 0;
  std::uint64_t greedy = 0;
  double z = 0.0;
};

std::vector<RatioTrial> RunRatioTrials(std::uint64_t seed) {
  const Rng root = Rng(seed).split(1);
  std::vector<RatioTrial> out(kRatioTrials);
  ParallelFor(kRatioTrials, Workers(), [&](std::size_t t) {
    GeneratorParams gp;
    gp.n = 15;
    gp.m = 40;
    gp.k = 3;
    gp.universe = 100;
    gp.seed = root.split(t).seed();
    const InstanceFile file = Generate(GeneratorKind::kRandom, gp).primary;
    SolveOptions options;
    options.xi = kRatioXi;
    options.gamma = kRatioGamma;
    options.strategy = Strategy::kSingleRound;
    const TrialReport r = Solve(file, options).trials.front();
    out[t].coverage = r.coverage.value();
    out[t].optimum = r.optimum.value();
    out[t].z = r.result.z;
    out[t].greedy = ExactGreedy(MaterializeSets(file), file.k).coverage;
  });
  return out;
}

CriterionResult RatioCriterion(const std::vector<RatioTrial>& trials) {
  const double floor = 1.0 - std::exp(-1.0);
  std::size_t failures = 0;
  for (const auto& t : trials) {
    if (static_cast<double>(t.coverage) < floor * static_cast<double>(t.optimum)) ++failures;
  }
  const double frac = static_cast<double>(failures) / static_cast<double>(trials.size());
  const double threshold = FailureThreshold(kRatioGamma, trials.size());
  return Criterion("1", "approximation ratio (1-1/e) vs brute force", frac <= threshold,
                   frac, threshold,
                   Fraction(failures, trials.size()) + " trials below (1-1/e)C*");
}

CriterionResult SandwichCriterion(const std::vector<RatioTrial>& trials) {
  std::size_t failures = 0;
  for (const auto& t : trials) {
    const double c = static_cast<double>(t.coverage);
    if (t.z < (1.0 - kRatioXi) * c || t.z > (1.0 + kRatioXi) * c) ++failures;
  }
  const double frac = static_cast<double>(failures) / static_cast<double>(trials.size());
  const double threshold = FailureThreshold(kRatioGamma, trials.size());
  return Criterion("2", "estimate sandwich (1-eps)|uH| <= z <= (1+eps)|uH|",
                   frac <= threshold, frac, threshold,
                   Fraction(failures, trials.size()) + " trials with z outside the band");
}

// greedy * k^k >= (k^k - (k-1)^k) * C*, in exact integer arithmetic.
bool GreedyFloorHolds(std::uint64_t greedy, std::uint64_t optimum, std::uint64_t k) {
  unsigned __int128 kk = 1;
  unsigned __int128 km1 = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    kk *= k;
    km1 *= k - 1;
  }
  return static_cast<unsigned __int128>(greedy) * kk >=
         (kk - km1) * static_cast<unsigned __int128>(optimum);
}

// ---------------------------------------------------------------------------
// Estimator

CriterionResult EstimatorCriterion(std::uint64_t seed) {
  constexpr std::size_t kTrials = 500;
  constexpr double kGamma = 0.1;
  constexpr std::uint64_t kB = 100;
  const std::vector<std::uint64_t> differences = {0, 10, 50, 100};
  const std::vector<double> epsilons = {0.1, 0.3};
  const std::vector<std::pair<std::string, BiasProfile>> profiles = {
      {"zero", BiasProfile{}}, {"skewed", BiasProfile{0.1, 0.2, 0.05, 0.1}}};

  struct Config {
    std::uint64_t diff;
    double eps;
    std::size_t profile;
  };
  std::vector<Config> configs;
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    for (double eps : epsilons) {
      for (std::uint64_t d : differences) configs.push_back({d, eps, p});
    }
  }

  std::vector<std::size_t> failures(configs.size(), 0);
  const Rng root = Rng(seed).split(3);
  ParallelFor(configs.size(), Workers(), [&](std::size_t c) {
    const Config& cfg = configs[c];
    const BiasProfile& bias = profiles[cfg.profile].second;
    std::vector<Element> b_items(kB);
    for (std::uint64_t i = 0; i < kB; ++i) b_items[i] = i + 1;
    auto b_backend = std::make_shared<SortedArraySet>(b_items);
    for (std::size_t t = 0; t < kTrials; ++t) {
      Rng rng = root.split(c).split(t);
      // A keeps kB - diff members of B (a random subset) plus outside extras.
      std::vector<Element> shuffled = b_items;
      std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
      std::vector<Element> a_items(shuffled.begin(),
                                   shuffled.begin() + static_cast<std::ptrdiff_t>(kB - cfg.diff));
      for (std::uint64_t j = 0; j < 20; ++j) a_items.push_back(1000 + j);
      auto meter = std::make_shared<CostMeter>();
      const SetHandle b = MakeHandle(0, b_backend, bias, rng, meter);
      const SetHandle a = MakeHandle(1, std::make_shared<SortedArraySet>(a_items), bias,
                                     rng, meter);
      const SetHandle* selected[] = {&a};
      const DiffEstimate est =
          ApproximateDifference(selected, b, b.reported_size(), cfg.eps, kGamma, rng);
      if (!WithinDifferenceEnvelope(est.s, static_cast<double>(cfg.diff),
                                    static_cast<double>(kB), cfg.eps, bias)) {
        ++failures[c];
      }
    }
  });

  const double threshold = FailureThreshold(kGamma, kTrials);
  double worst = 0.0;
  std::ostringstream detail;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const double frac = static_cast<double>(failures[c]) / kTrials;
    worst = std::max(worst, frac);
    detail << (c ? "; " : "") << profiles[configs[c].profile].first
           << " eps=" << configs[c].eps << " diff=" << configs[c].diff << ": "
           << Fraction(failures[c], kTrials);
  }
  return Criterion("3", "set-difference estimator envelope", worst <= threshold, worst,
                   threshold, detail.str());
}

// ---------------------------------------------------------------------------
// Counters

// Forwards to another backend and counts the draw and membership calls the
// handle layer makes, independently of the CostMeter.
class CountingBackend final : public SetBackend {
 public:
  explicit CountingBackend(std::shared_ptr<SetBackend> inner) : inner_(std::move(inner)) {}
  std::string_view kind() const override { return inner_->kind(); }
  std::uint64_t size() const override { return inner_->size(); }
  Element at(std::uint64_t index) const override {
    ++draws_;
    return inner_->at(index);
  }
  Element random_element(Rng& rng) const override {
    ++draws_;
    return inner_->random_element(rng);
  }
  bool contains(Element x) const override {
    ++queries_;
    return inner_->contains(x);
  }
  bool contains(Element x, std::uint64_t& comparisons) const override {
    ++queries_;
    return inner_->contains(x, comparisons);
  }
  std::unique_ptr<SetBackend> clone() const override {
    return std::make_unique<CountingBackend>(inner_->clone());
  }
  std::uint64_t draws() const { return draws_; }
  std::uint64_t queries() const { return queries_; }

 private:
  std::shared_ptr<SetBackend> inner_;
  mutable std::atomic<std::uint64_t> draws_{0};
  mutable std::atomic<std::uint64_t> queries_{0};
};

struct CounterRun {
  CostCounters counters;
  std::uint64_t wrapper_draws = 0;
  std::uint64_t wrapper_queries = 0;
  std::uint64_t w = 0;
};

CounterRun RunCounted(const InstanceFile& file, Strategy s, double xi, double gamma,
                      const Rng& rng) {
  std::vector<std::shared_ptr<CountingBackend>> wrapped;
  std::vector<std::shared_ptr<SetBackend>> backends;
  for (const auto& items : MaterializeSets(file)) {
    wrapped.push_back(std::make_shared<CountingBackend>(std::make_shared<SortedArraySet>(items)));
    backends.push_back(wrapped.back());
  }
  Rng build = rng.split(0);
  CoverageInstance instance =
      CoverageInstance::FromBackends(std::move(backends), file.k, file.bias, build);
  const auto params = GreedyParams::FromXi(xi, gamma, file.k, s);
  const CoverageResult r = ApproximateMaximumCover(instance, params, rng.split(1));
  CounterRun out;
  out.counters = r.counters;
  out.w = r.samples_per_estimate;
  for (const auto& b : wrapped) {
    out.wrapper_draws += b->draws();
    out.wrapper_queries += b->queries();
  }
  return out;
}

std::vector<CriterionResult> CounterCriteria(std::uint64_t seed) {
  constexpr std::size_t kInstances = 20;
  constexpr double kXi = 0.5;
  constexpr double kGamma = 0.2;
  const Rng root = Rng(seed).split(4);

  bool single_exact = true, multi_exact = true, q_bound = true, wrapper_match = true;
  std::uint64_t multi_realized_r = 0, multi_stated_r = 0;
  std::ostringstream single_detail, multi_detail, q_detail;
  for (std::size_t t = 0; t < kInstances; ++t) {
    GeneratorParams gp;
    gp.n = 15;
    gp.m = 40;
    gp.k = 3;
    gp.universe = 100;
    gp.seed = root.split(t).seed();
    if (t % 2 == 1) gp.bias = BiasProfile{0.1, 0.2, 0.05, 0.1};
    const InstanceFile file = Generate(GeneratorKind::kRandom, gp).primary;
    const std::uint64_t n = file.sets.size(), k = file.k;
    const double eps_prime = kXi / (4.0 * static_cast<double>(k));
    const Rng rng = root.split(1000 + t);

    const CounterRun single = RunCounted(file, Strategy::kSingleRound, kXi, kGamma, rng);
    const std::uint64_t g = SharedSampleBudget(eps_prime, kGamma, k, n);
    if (single.counters.random_draws != n * g) {
      single_exact = false;
      single_detail << " instance " << t << ": R=" << single.counters.random_draws
                    << " n*g=" << n * g << ";";
    }
    if (single.counters.membership_queries > k * n * g) {
      q_bound = false;
      q_detail << " single instance " << t << ": Q=" << single.counters.membership_queries
               << " > " << k * n * g << ";";
    }

    const CounterRun multi = RunCounted(file, Strategy::kMultiRound, kXi, kGamma, rng);
    const std::uint64_t w =
        SampleCount(eps_prime, kGamma / (4.0 * static_cast<double>(k * n)));
    multi_stated_r = k * n * w;
    multi_realized_r = multi.counters.random_draws;
    if (multi.counters.random_draws != k * n * w) multi_exact = false;
    if (multi.counters.membership_queries > k * n * w) {
      q_bound = false;
      q_detail << " multi instance " << t << ": Q=" << multi.counters.membership_queries
               << " > " << k * n * w << ";";
    }
    for (const CounterRun* run : {&single, &multi}) {
      if (run->wrapper_draws != run->counters.random_draws ||
          run->wrapper_queries != run->counters.membership_queries) {
        wrapper_match = false;
      }
    }
    if (t == 0) {
      std::uint64_t remaining_sum = 0;
      for (std::uint64_t j = 0; j < k; ++j) remaining_sum += n - j;
      multi_detail << "n=" << n << " k=" << k << " w=" << w << ": R=" << multi_realized_r
                   << ", k*n*w=" << multi_stated_r
                   << ", w*sum_{j<k}(n-j)=" << w * remaining_sum;
    }
  }

  std::vector<CriterionResult> out;
  out.push_back(Criterion("4a", "single-round random_draws == n*g", single_exact,
                          single_exact ? 1 : 0, 1,
                          single_exact ? std::to_string(kInstances) + " instances exact"
                                       : single_detail.str()));
  out.push_back(Criterion("4b", "multi-round random_draws == k*n*sample_count(eps', gamma/(4kn))",
                          multi_exact, static_cast<double>(multi_realized_r),
                          static_cast<double>(multi_stated_r), multi_detail.str()));
  out.push_back(Criterion("4c", "membership_queries <= k*n*w", q_bound, q_bound ? 1 : 0, 1,
                          q_bound ? "all runs within bound" : q_detail.str()));
  out.push_back(Criterion("4d", "meter matches independent call-count wrapper", wrapper_match,
                          wrapper_match ? 1 : 0, 1,
                          wrapper_match ? "R and Q agree on every run" : "mismatch"));

  BenchOptions bench;
  bench.seed = seed;
  const BenchReport report = Bench(bench);
  std::ostringstream bench_detail;
  for (const auto& row : report.rows) {
    bench_detail << row.strategy << " m=" << row.m << " R=" << row.counters.random_draws
                 << " Q=" << row.counters.membership_queries << "; ";
  }
  out.push_back(Criterion("bench", "R and Q independent of m in {1e3,1e4,1e5}",
                          report.counters_independent_of_m,
                          report.counters_independent_of_m ? 1 : 0, 1, bench_detail.str()));
  return out;
}

// ---------------------------------------------------------------------------
// Formulas

CriterionResult FormulaCriterion(std::uint64_t seed) {
  constexpr std::size_t kDraws = 1000;
  Rng rng = Rng(seed).split(5);
  auto open_unit = [&rng] {
    double v = 0.0;
    while (v <= 0.0) v = rng.unit();
    return v;
  };
  std::size_t bad_w = 0, bad_g = 0, g_checked = 0;
  for (std::size_t i = 0; i < kDraws; ++i) {
    const double eps = open_unit();
    const double gamma = open_unit();
    const std::uint64_t w = SampleCount(eps, gamma);
    const double log_q = std::log(4.0 / gamma);
    if (!SampleCountSufficient(eps, log_q, w) ||
        (w > 0 && SampleCountSufficient(eps, log_q, w - 1))) {
      ++bad_w;
    }
    const std::uint64_t n = rng.uniform(1, 60);
    const std::uint64_t k = rng.uniform(1, n);
    const SubsetCount h = SubsetCountHStar(k, n);
    if (h.saturated) continue;
    ++g_checked;
    const double direct_gamma =
        gamma / (static_cast<double>(n) * static_cast<double>(h.value));
    if (SharedSampleBudget(eps, gamma, k, n) != SampleCount(eps, direct_gamma)) ++bad_g;
  }
  return Criterion("5", "sample_count minimality and log-space g", bad_w == 0 && bad_g == 0,
                   static_cast<double>(bad_w + bad_g), 0,
                   "w mismatches " + Fraction(bad_w, kDraws) + ", g mismatches " +
                       Fraction(bad_g, g_checked));
}

// ---------------------------------------------------------------------------
// Uniformity

CriterionResult UniformityCriterion(std::uint64_t seed) {
  constexpr std::size_t kElements = 64;
  constexpr std::size_t kDraws = 64'000;
  const double quantile = boost::math::quantile(
      boost::math::chi_squared_distribution<double>(kElements - 1), 0.999);

  std::vector<Element> items(kElements);
  for (std::size_t i = 0; i < kElements; ++i) items[i] = 10 * i + 3;

  bool passed = true;
  double worst = 0.0;
  std::ostringstream detail;
  for (std::size_t order : {std::size_t{4}, CountedBTree::kDefaultOrder}) {
    const CountedBTree tree(items, order);
    Rng rng = Rng(seed).split(6).split(order);
    std::vector<std::uint64_t> hits(kElements, 0);
    for (std::size_t i = 0; i < kDraws; ++i) {
      const Element x = tree.random_element(rng);
      ++hits[(x - 3) / 10];
    }
    const double expected = static_cast<double>(kDraws) / kElements;
    double chi2 = 0.0;
    for (auto h : hits) chi2 += (h - expected) * (h - expected) / expected;
    worst = std::max(worst, chi2);

    bool exact = true;
    const auto dist = tree.ExactDrawDistribution();
    if (dist.size() != kElements) exact = false;
    for (const auto& [x, p] : dist) {
      if (p.first != 1 || p.second != kElements) exact = false;
    }
    passed = passed && chi2 < quantile && exact;
    detail << "order " << order << " height " << tree.height() << ": chi2=" << chi2
           << (exact ? ", exact partition uniform" : ", exact partition NOT uniform") << "; ";
  }
  return Criterion("6", "B-tree sampler uniformity", passed, worst, quantile, detail.str());
}

// ---------------------------------------------------------------------------
// Strategy equivalence

CriterionResult EquivalenceCriterion(std::uint64_t seed) {
  constexpr std::size_t kInstances = 50;
  const Rng root = Rng(seed).split(7);
  std::atomic<std::size_t> mismatches{0};
  ParallelFor(kInstances, Workers(), [&](std::size_t t) {
    GeneratorParams gp;
    gp.n = 10;
    gp.m = 30;
    gp.k = 3;
    gp.seed = root.split(t).seed();
    const InstanceFile file = Generate(GeneratorKind::kRandom, gp).primary;
    SolveOptions options;
    options.xi = 0.5;
    options.gamma = 0.2;
    options.backend = BackendKind::kUnsorted;
    options.strategy = Strategy::kSingleRound;
    const auto plain = Solve(file, options).trials.front().result;
    options.strategy = Strategy::kSingleRoundSortOnSelect;
    const auto sorted = Solve(file, options).trials.front().result;
    if (plain.selected != sorted.selected || plain.z != sorted.z) ++mismatches;
  });
  return Criterion("7", "single-round and sort-on-select agree on H and z",
                   mismatches == 0, static_cast<double>(mismatches.load()), 0,
                   Fraction(mismatches, kInstances) + " instances differ");
}

// ---------------------------------------------------------------------------
// Equal-size reduction

CriterionResult ReductionCriterion(std::uint64_t seed) {
  constexpr std::size_t kInstances = 100;
  Rng rng = Rng(seed).split(8);
  std::size_t mismatches = 0;
  std::ostringstream detail;
  for (std::size_t t = 0; t < kInstances; ++t) {
    const std::size_t n = rng.uniform(1, 8);
    std::vector<ElementList> sets(n);
    for (auto& s : sets) {
      const std::size_t size = rng.uniform(1, 8);
      std::vector<Element> pool(12);
      for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i + 1;
      std::shuffle(pool.begin(), pool.end(), rng.engine());
      s.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    }
    const auto padded = EqualSizePad(sets, PadMode::kSetCover);
    const std::size_t original = BruteForceMinCover(sets);
    const std::size_t reduced = BruteForceMinCover(padded);
    if (original + 1 != reduced) {
      ++mismatches;
      if (mismatches <= 3) {
        detail << "instance " << t << ": " << original << " vs " << reduced << "; ";
      }
    }
  }
  return Criterion("8", "min cover(original) == min cover(padded) - 1", mismatches == 0,
                   static_cast<double>(mismatches), 0,
                   Fraction(mismatches, kInstances) + " mismatches " + detail.str());
}

// ---------------------------------------------------------------------------
// Twins

constexpr std::size_t kTwinTrials = 100;
constexpr double kTwinXi = 0.2;
constexpr double kTwinGamma = 0.1;

struct TwinTrial {
  std::uint64_t opt_l = 0, opt_prime = 0;
  std::uint64_t greedy_l = 0, greedy_prime = 0;
  std::uint64_t coverage = 0;
};

std::vector<TwinTrial> RunTwinTrials(std::uint64_t seed) {
  const Rng root = Rng(seed).split(9);
  std::vector<TwinTrial> out(kTwinTrials);
  ParallelFor(kTwinTrials, Workers(), [&](std::size_t t) {
    GeneratorParams gp;
    gp.n = 8;
    gp.m = 12;
    gp.d = 4;
    gp.k = 4;
    gp.seed = root.split(t).seed();
    const GeneratedInstances twins = Generate(GeneratorKind::kTwin, gp);
    const auto l = MaterializeSets(twins.primary);
    const auto prime = MaterializeSets(*twins.twin);
    out[t].opt_l = BruteForceOptimum(l, 4).coverage;
    out[t].opt_prime = BruteForceOptimum(prime, 4).coverage;
    out[t].greedy_l = ExactGreedy(l, 4).coverage;
    out[t].greedy_prime = ExactGreedy(prime, 4).coverage;
    SolveOptions options;
    options.xi = kTwinXi;
    options.gamma = kTwinGamma;
    options.strategy = Strategy::kSingleRound;
    out[t].coverage = Solve(*twins.twin, options).trials.front().coverage.value();
  });
  return out;
}

CriterionResult TwinCriterion(const std::vector<TwinTrial>& trials) {
  std::size_t wrong_optima = 0, misses = 0;
  for (const auto& t : trials) {
    if (t.opt_l != 3 || t.opt_prime != 12) ++wrong_optima;
    if (t.coverage != 12) ++misses;
  }
  const double frac = static_cast<double>(misses) / static_cast<double>(trials.size());
  const double threshold = FailureThreshold(kTwinGamma, trials.size());
  return Criterion("9", "twin optima 3 and 12; single-round reaches 12 on L'",
                   wrong_optima == 0 && frac <= threshold, frac, threshold,
                   Fraction(wrong_optima, trials.size()) + " twins with wrong optima, " +
                       Fraction(misses, trials.size()) + " runs below 12");
}

CriterionResult GreedyFloorCriterion(const std::vector<RatioTrial>& ratio,
                                     const std::vector<TwinTrial>& twins) {
  std::size_t checked = 0, violations = 0;
  for (const auto& t : ratio) {
    ++checked;
    if (!GreedyFloorHolds(t.greedy, t.optimum, 3)) ++violations;
  }
  for (const auto& t : twins) {
    checked += 2;
    if (!GreedyFloorHolds(t.greedy_l, t.opt_l, 4)) ++violations;
    if (!GreedyFloorHolds(t.greedy_prime, t.opt_prime, 4)) ++violations;
  }
  return Criterion("10", "exact greedy >= (1-(1-1/k)^k) C*", violations == 0,
                   static_cast<double>(violations), 0,
                   Fraction(violations, checked) + " instances violate the floor");
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.passed; });
}

std::string VerifyReport::ToJson() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["criteria"] = nlohmann::json::array();
  for (const auto& c : criteria) {
    j["criteria"].push_back({{"id", c.id},
                             {"name", c.name},
                             {"passed", c.passed},
                             {"measured", c.measured},
                             {"threshold", c.threshold},
                             {"detail", c.detail}});
  }
  return j.dump(2);
}

std::vector<std::string> SuiteNames() {
  return {"ratio",       "sandwich",  "estimator", "counters", "formulas", "uniformity",
          "equivalence", "reduction", "twin",      "greedy-floor", "all"};
}

VerifyReport Verify(std::string_view suite, std::uint64_t seed) {
  const auto names = SuiteNames();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(suite) + "'");
  }
  VerifyReport report;
  report.suite = std::string(suite);
  const bool all = suite == "all";
  auto want = [&](std::string_view name) { return all || suite == name; };

  std::optional<std::vector<RatioTrial>> ratio;
  std::optional<std::vector<TwinTrial>> twins;
  if (want("ratio") || want("sandwich") || want("greedy-floor")) ratio = RunRatioTrials(seed);
  if (want("twin") || want("greedy-floor")) twins = RunTwinTrials(seed);

  if (want("ratio")) report.criteria.push_back(RatioCriterion(*ratio));
  if (want("sandwich")) report.criteria.push_back(SandwichCriterion(*ratio));
  if (want("estimator")) report.criteria.push_back(EstimatorCriterion(seed));
  if (want("counters")) {
    for (auto& c : CounterCriteria(seed)) report.criteria.push_back(std::move(c));
  }
  if (want("formulas")) report.criteria.push_back(FormulaCriterion(seed));
  if (want("uniformity")) report.criteria.push_back(UniformityCriterion(seed));
  if (want("equivalence")) report.criteria.push_back(EquivalenceCriterion(seed));
  if (want("reduction")) report.criteria.push_back(ReductionCriterion(seed));
  if (want("twin")) report.criteria.push_back(TwinCriterion(*twins));
  if (want("greedy-floor")) report.criteria.push_back(GreedyFloorCriterion(*ratio, *twins));
  return report;
}

}  // namespace maxcover::harness
