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

// Monte Carlo estimation of |B - (A_1 u ... u A_u)| and the sample-size
// arithmetic behind it.

#ifndef MAXCOVER_ESTIMATION_HPP_
#define MAXCOVER_ESTIMATION_HPP_

#include <cstdint>
#include <span>

#include "maxcover/core.hpp"

namespace maxcover {

// mu(x) = exp(-x^2 / 2).
double Mu(double x);

// True iff mu(epsilon/3)^w <= gamma/4, evaluated in log space.
bool SampleCountSufficient(double epsilon, double log_inv_quarter_gamma,
                           std::uint64_t w);

// Least w with mu(epsilon/3)^w <= gamma/4, i.e. ceil(18 ln(4/gamma) / eps^2)
// corrected against the inequality itself. Throws kDomain unless both
// arguments lie in (0, 1).
std::uint64_t SampleCount(double epsilon, double gamma);

// Least w with w * (epsilon/3)^2 / 2 >= log_inv_quarter_gamma, where the
// right side is ln(4/gamma') for some (possibly tiny) gamma'.
std::uint64_t SampleCountFromLog(double epsilon, double log_inv_quarter_gamma);

// h*(k, n) = sum_{i=0..k} C(n, i), the number of subsets of {1..n} of size
// at most k.
struct SubsetCount {
  std::uint64_t value = 0;  // saturates at 2^63 - 1
  bool saturated = false;
  double log_value = 0.0;   // ln h*(k, n), exact-in-log-space either way
};
SubsetCount SubsetCountHStar(std::uint64_t k, std::uint64_t n);

// g(eps, gamma, k, n) = SampleCount(eps, gamma / (n h*(k, n))), computed in
// log space.
std::uint64_t SharedSampleBudget(double epsilon, double gamma, std::uint64_t k,
                                 std::uint64_t n);

struct DiffEstimate {
  std::uint64_t t = 0;  // samples outside the union
  std::uint64_t w = 0;  // samples drawn
  double s = 0.0;       // (t / w) * s2
};

// Draws w samples from `b` and counts those outside the union of `selected`.
// Union membership short-circuits set by set in selection order, so at most
// |selected| * w membership queries are issued.
std::uint64_t RandomTest(std::span<const SetHandle* const> selected,
                         const SetHandle& b, std::uint64_t w, Rng& rng);

// s = (t/w) * s2 with w = SampleCount(epsilon, gamma).
DiffEstimate ApproximateDifference(std::span<const SetHandle* const> selected,
                                   const SetHandle& b, double s2,
                                   double epsilon, double gamma, Rng& rng);

// Checks (1-aL)(1-dL)|B-A| - eps|B| <= s <= (1+aR)(1+dR)|B-A| + eps|B|.
bool WithinDifferenceEnvelope(double s, double exact_difference,
                              double exact_b, double epsilon,
                              const BiasProfile& bias);

}  // namespace maxcover

#endif  // MAXCOVER_ESTIMATION_HPP_
