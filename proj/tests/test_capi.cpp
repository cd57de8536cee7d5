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

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "maxcover/maxcover.h"

namespace {

std::string Take(char* s) {
  std::string out = s ? s : "";
  mc_string_free(s);
  return out;
}

const char kThreeSets[] =
    "maxcover-instance 1\nk 1\nseed 3\nbias 0 0 0 0\nsets 3\n"
    "explicit 2 1 2\nexplicit 3 3 4 5\nexplicit 1 9\n";

TEST(CApiTest, ParseInfoAndText) {
  mc_instance* inst = nullptr;
  ASSERT_EQ(mc_instance_parse(kThreeSets, &inst), MC_OK);
  size_t n = 0, k = 0;
  ASSERT_EQ(mc_instance_info(inst, &n, &k), MC_OK);
  EXPECT_EQ(n, 3u);
  EXPECT_EQ(k, 1u);
  ASSERT_EQ(mc_instance_set_k(inst, 2), MC_OK);
  char* text = nullptr;
  ASSERT_EQ(mc_instance_to_text(inst, &text), MC_OK);
  EXPECT_NE(Take(text).find("k 2"), std::string::npos);
  mc_instance_free(inst);
  mc_instance_free(nullptr);
}

TEST(CApiTest, ErrorsSetStatusAndMessage) {
  mc_instance* inst = nullptr;
  EXPECT_EQ(mc_instance_parse("maxcover-instance 1\nk 1\nseed 0\nbias 0 0 0 0\nsets 1\n"
                              "explicit 2 4 4\n",
                              &inst),
            MC_PARSE);
  EXPECT_EQ(inst, nullptr);
  EXPECT_NE(std::string(mc_last_error()).find("duplicate"), std::string::npos);
  EXPECT_STREQ(mc_status_name(MC_PARSE), "parse error");
  EXPECT_EQ(mc_instance_parse(nullptr, &inst), MC_INVALID_ARGUMENT);
  EXPECT_EQ(mc_instance_load("/nonexistent/maxcover.txt", &inst), MC_IO);

  mc_generate_params gp;
  mc_generate_params_default(&gp);
  gp.n = 8;
  gp.m = 10;
  gp.d = 4;
  gp.k = 4;
  mc_instance* twin = nullptr;
  EXPECT_EQ(mc_generate("twin", &gp, &inst, &twin), MC_INVALID_ARGUMENT);
  EXPECT_NE(std::string(mc_last_error()).find("d divides m"), std::string::npos);
  EXPECT_EQ(mc_generate("spiral", &gp, &inst, nullptr), MC_INVALID_ARGUMENT);
}

TEST(CApiTest, SolveAndReport) {
  mc_instance* inst = nullptr;
  ASSERT_EQ(mc_instance_parse(kThreeSets, &inst), MC_OK);
  mc_solve_options o;
  mc_solve_options_default(&o);
  o.xi = 0.5;
  o.gamma = 0.2;
  o.trials = 2;
  o.strategy = "multi";
  o.backend = "btree";
  mc_report* r = nullptr;
  ASSERT_EQ(mc_solve(inst, &o, &r), MC_OK) << mc_last_error();
  ASSERT_EQ(mc_report_trial_count(r), 2u);
  for (size_t t = 0; t < 2; ++t) {
    mc_trial_summary s;
    ASSERT_EQ(mc_report_trial(r, t, &s), MC_OK);
    EXPECT_EQ(s.selected_count, 1u);
    EXPECT_EQ(s.coverage, 3);
    EXPECT_EQ(s.optimum, 3);
    EXPECT_DOUBLE_EQ(s.ratio, 1.0);
    size_t idx[4] = {99, 99, 99, 99};
    ASSERT_EQ(mc_report_selected(r, t, idx, 4), MC_OK);
    EXPECT_EQ(idx[0], 1u);
  }
  mc_trial_summary s;
  EXPECT_EQ(mc_report_trial(r, 5, &s), MC_INVALID_ARGUMENT);
  char* csv = nullptr;
  ASSERT_EQ(mc_report_csv(r, &csv), MC_OK);
  EXPECT_EQ(Take(csv).rfind("trial,strategy", 0), 0u);
  mc_report_free(r);

  o.strategy = "quantum";
  EXPECT_EQ(mc_solve(inst, &o, &r), MC_INVALID_ARGUMENT);
  o.strategy = "single";
  o.backend = "rect";
  EXPECT_EQ(mc_solve(inst, &o, &r), MC_TYPE_MISMATCH);
  mc_instance_free(inst);
}

TEST(CApiTest, GenerateTwinAndExact) {
  mc_generate_params gp;
  mc_generate_params_default(&gp);
  gp.n = 8;
  gp.m = 12;
  gp.d = 4;
  gp.k = 4;
  mc_instance* l = nullptr;
  mc_instance* lp = nullptr;
  ASSERT_EQ(mc_generate("twin", &gp, &l, &lp), MC_OK);
  ASSERT_NE(lp, nullptr);
  size_t idx[8];
  size_t count = 0;
  uint64_t cov = 0;
  ASSERT_EQ(mc_exact(l, "brute-force", 0, idx, 8, &count, &cov), MC_OK);
  EXPECT_EQ(count, 4u);
  EXPECT_EQ(cov, 3u);
  ASSERT_EQ(mc_exact(lp, "brute-force", 0, idx, 8, &count, &cov), MC_OK);
  EXPECT_EQ(cov, 12u);
  ASSERT_EQ(mc_exact(lp, "greedy", 0, idx, 8, &count, &cov), MC_OK);
  EXPECT_EQ(cov, 12u);
  EXPECT_EQ(mc_exact(lp, "brute-force", 3, idx, 8, &count, &cov), MC_CAP_EXCEEDED);
  mc_instance_free(l);
  mc_instance_free(lp);

  mc_instance* only = nullptr;
  mc_instance* none = reinterpret_cast<mc_instance*>(1);
  ASSERT_EQ(mc_generate("disjoint", &gp, &only, &none), MC_OK);
  EXPECT_EQ(none, nullptr);
  mc_instance_free(only);
}

TEST(CApiTest, VerifyAndBench) {
  int passed = 0;
  char* json = nullptr;
  ASSERT_EQ(mc_verify("formulas", 1, &passed, &json), MC_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_NE(Take(json).find("\"suite\""), std::string::npos);
  EXPECT_EQ(mc_verify("nope", 1, &passed, &json), MC_INVALID_ARGUMENT);

  mc_bench_options b;
  mc_bench_options_default(&b);
  const uint64_t sizes[] = {100, 2000};
  b.set_sizes = sizes;
  b.set_size_count = 2;
  int independent = 0;
  char* csv = nullptr;
  ASSERT_EQ(mc_bench(&b, &independent, &csv), MC_OK) << mc_last_error();
  EXPECT_EQ(independent, 1);
  EXPECT_FALSE(Take(csv).empty());
  EXPECT_GT(std::strlen(mc_version()), 0u);
}

}  // namespace
