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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>

#include "json.hpp"
#include "maxcover/estimation.hpp"
#include "maxcover/harness.hpp"

namespace maxcover::harness {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

std::string MessageOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(InstanceFileTest, RoundTrip) {
  InstanceFile f;
  f.k = 2;
  f.seed = 123456789012345ULL;
  f.bias = {0.1, 0.2, 0.3, 1.0 / 3.0};
  f.sets.push_back(ExplicitSet{{5, 1, 18446744073709551615ULL}});
  f.sets.push_back(RectangleSet{{-3, 0}, {2, 7}});
  f.sets.push_back(ExplicitSet{{42}});
  EXPECT_EQ(ParseInstance(EmitInstance(f)), f);

  GeneratorParams gp;
  gp.seed = 77;
  for (auto kind : {GeneratorKind::kRandom, GeneratorKind::kDisjoint,
                    GeneratorKind::kOverlapChain, GeneratorKind::kRectangles}) {
    const InstanceFile g = Generate(kind, gp).primary;
    EXPECT_EQ(ParseInstance(EmitInstance(g)), g) << GeneratorName(kind);
  }
}

TEST(InstanceFileTest, CommentsAndBlankLines) {
  const InstanceFile f = ParseInstance(
      "# header\nmaxcover-instance 1\n\nk 1  # budget\nseed 0\nbias 0 0 0 0\n"
      "sets 1\nexplicit 2 4 5\n");
  EXPECT_EQ(f.sets.size(), 1u);
  EXPECT_EQ(std::get<ExplicitSet>(f.sets[0]).elements, (std::vector<Element>{4, 5}));
}

TEST(InstanceFileTest, ParseErrorsCarryLineNumbers) {
  const std::string head = "maxcover-instance 1\nk 1\nseed 0\nbias 0 0 0 0\n";
  struct Case {
    std::string text;
    std::string needle;
  };
  const Case cases[] = {
      {"", "empty"},
      {"maxcover-instance 2\n", "line 1: unsupported format version"},
      {"maxcover-instance 1\nk x\n", "line 2: expected integer"},
      {head + "sets 1\nexplicit 3 1 2 2\n", "line 6: duplicate element 2"},
      {head + "sets 1\nexplicit 3 1 2\n", "line 6: explicit set declares 3"},
      {head + "sets 2\nexplicit 1 1\n", "expected 2 sets, got 1"},
      {head + "sets 1\nexplicit 1 1\nexplicit 1 2\n", "line 7: trailing content"},
      {head + "sets 1\nrectangle 1 5 4\n", "lo > hi"},
      {head + "sets 1\ncircle 3\n", "unknown set kind"},
      {"maxcover-instance 1\nk 1\nseed 0\nbias 0 1.5 0 0\n", "line 4"},
  };
  for (const auto& c : cases) {
    try {
      ParseInstance(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << c.text;
      EXPECT_NE(std::string(e.what()).find(c.needle), std::string::npos)
          << "message '" << e.what() << "' lacks '" << c.needle << "'";
    }
  }
}

TEST(InstanceFileTest, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "maxcover_harness_test.txt";
  const InstanceFile f = Generate(GeneratorKind::kRandom, {}).primary;
  SaveInstance(f, path.string());
  EXPECT_EQ(LoadInstance(path.string()), f);
  std::filesystem::remove(path);
  EXPECT_EQ(CodeOf([&] { LoadInstance(path.string()); }), ErrorCode::kIo);
}

TEST(GenerateTest, DeterministicPerSeed) {
  GeneratorParams gp;
  gp.seed = 5;
  EXPECT_EQ(EmitInstance(Generate(GeneratorKind::kRandom, gp).primary),
            EmitInstance(Generate(GeneratorKind::kRandom, gp).primary));
  GeneratorParams other = gp;
  other.seed = 6;
  EXPECT_NE(EmitInstance(Generate(GeneratorKind::kRandom, gp).primary),
            EmitInstance(Generate(GeneratorKind::kRandom, other).primary));
}

TEST(GenerateTest, RandomRespectsBounds) {
  GeneratorParams gp;
  gp.n = 30;
  gp.m = 12;
  gp.universe = 40;
  const InstanceFile f = Generate(GeneratorKind::kRandom, gp).primary;
  ASSERT_EQ(f.sets.size(), 30u);
  for (const auto& s : f.sets) {
    const auto& e = std::get<ExplicitSet>(s).elements;
    EXPECT_GE(e.size(), 1u);
    EXPECT_LE(e.size(), 12u);
    EXPECT_EQ(std::set<Element>(e.begin(), e.end()).size(), e.size());
    for (Element x : e) {
      EXPECT_GE(x, 1u);
      EXPECT_LE(x, 40u);
    }
  }
}

TEST(GenerateTest, DisjointOptimum) {
  for (std::size_t k = 1; k <= 5; ++k) {
    GeneratorParams gp;
    gp.n = 5;
    gp.m = 10;
    gp.k = k;
    const InstanceFile f = Generate(GeneratorKind::kDisjoint, gp).primary;
    EXPECT_EQ(SolveExact(f, ExactMethod::kBruteForce).coverage, 10 * k);
  }
}

TEST(GenerateTest, OverlapChain) {
  GeneratorParams gp;
  gp.n = 4;
  gp.m = 5;
  gp.overlap = 2;
  gp.k = 2;
  const InstanceFile f = Generate(GeneratorKind::kOverlapChain, gp).primary;
  EXPECT_EQ(std::get<ExplicitSet>(f.sets[1]).elements, (std::vector<Element>{4, 5, 6, 7, 8}));
  const auto sets = MaterializeSets(f);
  const std::vector<std::size_t> all = {0, 1, 2, 3};
  EXPECT_EQ(UnionSize(sets, all), 5u + 3 * 3);
}

TEST(GenerateTest, TwinOptima) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorParams gp;
    gp.n = 8;
    gp.m = 12;
    gp.d = 4;
    gp.k = 4;
    gp.seed = seed;
    const GeneratedInstances g = Generate(GeneratorKind::kTwin, gp);
    ASSERT_TRUE(g.twin.has_value());
    ASSERT_EQ(g.block_indices.size(), 4u);
    EXPECT_EQ(SolveExact(g.primary, ExactMethod::kBruteForce).coverage, 3u);
    EXPECT_EQ(SolveExact(*g.twin, ExactMethod::kBruteForce).coverage, 12u);
    // Every set of both lists has m/d elements.
    for (const auto* f : {&g.primary, &*g.twin}) {
      for (const auto& s : f->sets) EXPECT_EQ(std::get<ExplicitSet>(s).elements.size(), 3u);
    }
  }
}

TEST(GenerateTest, ConstraintMessages) {
  GeneratorParams gp;
  gp.n = 8;
  gp.m = 10;
  gp.d = 4;
  gp.k = 4;
  EXPECT_NE(MessageOf([&] { Generate(GeneratorKind::kTwin, gp); }).find("d divides m"),
            std::string::npos);
  gp.m = 12;
  gp.d = 12;
  EXPECT_NE(MessageOf([&] { Generate(GeneratorKind::kTwin, gp); }).find("d <= n"),
            std::string::npos);
  gp.d = 4;
  gp.k = 9;
  EXPECT_NE(MessageOf([&] { Generate(GeneratorKind::kTwin, gp); }).find("k <= n"),
            std::string::npos);
  gp.k = 0;
  EXPECT_EQ(CodeOf([&] { Generate(GeneratorKind::kTwin, gp); }), ErrorCode::kInvalidArgument);
  GeneratorParams chain;
  chain.overlap = chain.m;
  EXPECT_NE(MessageOf([&] { Generate(GeneratorKind::kOverlapChain, chain); }).find("overlap < m"),
            std::string::npos);
}

TEST(BuildInstanceTest, BackendCompatibility) {
  const InstanceFile explicit_file = Generate(GeneratorKind::kRandom, {}).primary;
  for (auto b : {BackendKind::kSorted, BackendKind::kUnsorted, BackendKind::kBTree,
                 BackendKind::kHash}) {
    Rng rng(1);
    const CoverageInstance inst = BuildInstance(explicit_file, b, rng);
    EXPECT_EQ(inst.handle(0).backend().kind(), BackendName(b));
  }
  Rng rng(1);
  EXPECT_EQ(CodeOf([&] { BuildInstance(explicit_file, BackendKind::kRect, rng); }),
            ErrorCode::kTypeMismatch);

  InstanceFile mixed;
  mixed.sets.push_back(RectangleSet{{0}, {3}});
  mixed.sets.push_back(RectangleSet{{0, 0}, {1, 1}});
  EXPECT_EQ(CodeOf([&] { BuildInstance(mixed, BackendKind::kRect, rng); }),
            ErrorCode::kTypeMismatch);
  for (auto b : {BackendKind::kRect, BackendKind::kSorted}) {
    Rng r2(1);
    const InstanceFile rects = Generate(GeneratorKind::kRectangles, {}).primary;
    EXPECT_EQ(BuildInstance(rects, b, r2).handle(0).backend().kind(), "rect");
  }
}

TEST(SolveTest, DisjointRatioIsOne) {
  GeneratorParams gp;
  gp.n = 5;
  gp.m = 10;
  gp.k = 2;
  const InstanceFile f = Generate(GeneratorKind::kDisjoint, gp).primary;
  SolveOptions o;
  o.xi = 0.5;
  o.gamma = 0.2;
  o.trials = 3;
  const SolveReport r = Solve(f, o);
  ASSERT_EQ(r.trials.size(), 3u);
  for (const auto& t : r.trials) {
    EXPECT_EQ(t.coverage, 20u);
    EXPECT_EQ(t.optimum, 20u);
    EXPECT_EQ(t.ratio, 1.0);
  }
}

TEST(SolveTest, StableAndThreadIndependent) {
  GeneratorParams gp;
  gp.n = 12;
  gp.m = 25;
  gp.k = 3;
  gp.seed = 4;
  const InstanceFile f = Generate(GeneratorKind::kRandom, gp).primary;
  for (Strategy s : {Strategy::kMultiRound, Strategy::kSingleRound}) {
    SolveOptions o;
    o.xi = 0.5;
    o.gamma = 0.2;
    o.strategy = s;
    o.trials = 4;
    const SolveReport a = Solve(f, o);
    o.threads = 3;
    const SolveReport b = Solve(f, o);
    for (std::size_t t = 0; t < 4; ++t) {
      EXPECT_EQ(a.trials[t].result.selected, b.trials[t].result.selected);
      EXPECT_EQ(a.trials[t].result.z, b.trials[t].result.z);
      EXPECT_EQ(a.trials[t].result.counters, b.trials[t].result.counters);
    }
    o.trials = 1;
    o.threads = 0;
    EXPECT_EQ(Solve(f, o).ToCsv().substr(0, 200), Solve(f, o).ToCsv().substr(0, 200));
  }
}

TEST(SolveTest, SingleRoundDrawsEqualNTimesG) {
  const InstanceFile f = Generate(GeneratorKind::kRandom, {}).primary;
  SolveOptions o;
  o.xi = 0.5;
  o.gamma = 0.2;
  const auto r = Solve(f, o).trials.front().result;
  const std::uint64_t n = f.sets.size();
  EXPECT_EQ(r.counters.random_draws, n * SharedSampleBudget(0.5 / (4.0 * f.k), 0.2, f.k, n));
}

TEST(SolveTest, CapsDowngradeColumns) {
  GeneratorParams gp;
  gp.n = 30;
  gp.m = 5;
  gp.k = 10;
  const InstanceFile f = Generate(GeneratorKind::kRandom, gp).primary;
  SolveOptions o;
  o.xi = 0.9;
  o.gamma = 0.5;
  o.brute_force_cap = 1000;
  auto t = Solve(f, o).trials.front();
  EXPECT_TRUE(t.coverage.has_value());
  EXPECT_FALSE(t.optimum.has_value());
  EXPECT_FALSE(t.ratio.has_value());
  o.materialize_cap = 5;
  t = Solve(f, o).trials.front();
  EXPECT_FALSE(t.coverage.has_value());
  const std::string csv = Solve(f, o).ToCsv();
  EXPECT_NE(csv.find("trial,strategy,backend"), std::string::npos);
}

TEST(SolveTest, DerivedXiFromEpsilon) {
  InstanceFile f;
  f.k = 1;
  f.sets.push_back(ExplicitSet{{1, 2, 3}});
  f.sets.push_back(ExplicitSet{{4}});
  SolveOptions o;
  o.epsilon = 0.5;
  o.gamma = 0.5;
  const SolveReport r = Solve(f, o);
  EXPECT_DOUBLE_EQ(r.xi, DeriveXi(0.5, 1.0, 1));
  EXPECT_DOUBLE_EQ(r.epsilon_prime, r.xi / 4);
  EXPECT_EQ(r.trials.front().result.selected, (std::vector<std::size_t>{0}));
}

TEST(VerifyTest, UnknownSuite) {
  EXPECT_EQ(CodeOf([] { Verify("speed", 1); }), ErrorCode::kInvalidArgument);
}

TEST(VerifyTest, FastSuitesProduceJson) {
  for (const char* suite : {"formulas", "reduction", "uniformity"}) {
    const VerifyReport r = Verify(suite, 1);
    EXPECT_TRUE(r.passed()) << suite;
    const auto j = nlohmann::json::parse(r.ToJson());
    EXPECT_EQ(j["suite"], suite);
    EXPECT_EQ(j["passed"], true);
    ASSERT_EQ(j["criteria"].size(), 1u);
    EXPECT_TRUE(j["criteria"][0].contains("threshold"));
  }
}

TEST(BenchTest, CountersIndependentOfSetSize) {
  BenchOptions o;
  o.set_sizes = {100, 1000, 5000};
  const BenchReport r = Bench(o);
  EXPECT_EQ(r.rows.size(), 6u);
  EXPECT_TRUE(r.counters_independent_of_m);
  EXPECT_NE(r.ToCsv().find("strategy,m,steps"), std::string::npos);
}

}  // namespace
}  // namespace maxcover::harness
