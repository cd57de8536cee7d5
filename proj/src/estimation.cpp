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

#include "maxcover/estimation.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace maxcover {

namespace {

void RequireOpenUnit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw Error(ErrorCode::kDomain,
                std::string(name) + " must lie in (0, 1), got " + std::to_string(v));
  }
}

constexpr std::uint64_t kSaturation = std::numeric_limits<std::int64_t>::max();

// ln sum_i exp(terms_i)
double LogSumExp(const std::vector<double>& terms) {
  double top = -std::numeric_limits<double>::infinity();
  for (double t : terms) top = std::max(top, t);
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - top);
  return top + std::log(acc);
}

}  // namespace

double Mu(double x) { return std::exp(-0.5 * x * x); }

bool SampleCountSufficient(double epsilon, double log_inv_quarter_gamma,
                           std::uint64_t w) {
  const double third = epsilon / 3.0;
  // ln(mu(eps/3)^w) = -w (eps/3)^2 / 2 <= ln(gamma/4)
  return static_cast<double>(w) * third * third / 2.0 >= log_inv_quarter_gamma;
}

std::uint64_t SampleCountFromLog(double epsilon, double log_inv_quarter_gamma) {
  RequireOpenUnit(epsilon, "epsilon");
  const double closed = std::ceil(18.0 * log_inv_quarter_gamma / (epsilon * epsilon));
  if (!(closed < 9.0e18)) {
    throw Error(ErrorCode::kOverflow, "sample count exceeds 64-bit range");
  }
  std::uint64_t w = closed < 1.0 ? 1 : static_cast<std::uint64_t>(closed);
  while (!SampleCountSufficient(epsilon, log_inv_quarter_gamma, w)) ++w;
  while (w > 1 && SampleCountSufficient(epsilon, log_inv_quarter_gamma, w - 1)) --w;
  return w;
}

std::uint64_t SampleCount(double epsilon, double gamma) {
  RequireOpenUnit(epsilon, "epsilon");
  RequireOpenUnit(gamma, "gamma");
  return SampleCountFromLog(epsilon, std::log(4.0 / gamma));
}

SubsetCount SubsetCountHStar(std::uint64_t k, std::uint64_t n) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kDomain, "h* needs 1 <= k <= n");
  }
  SubsetCount out;
  // Exact running sum while it fits; binomials via C(n,i) = C(n,i-1)(n-i+1)/i.
  unsigned __int128 binom = 1;
  unsigned __int128 sum = 1;
  for (std::uint64_t i = 1; i <= k && !out.saturated; ++i) {
    binom = binom * (n - i + 1) / i;
    sum += binom;
    if (binom > kSaturation || sum > kSaturation) out.saturated = true;
  }
  if (!out.saturated) {
    out.value = static_cast<std::uint64_t>(sum);
    out.log_value = std::log(static_cast<double>(out.value));
    return out;
  }
  out.value = kSaturation;
  std::vector<double> terms;
  terms.reserve(k + 1);
  const double nd = static_cast<double>(n);
  for (std::uint64_t i = 0; i <= k; ++i) {
    const double id = static_cast<double>(i);
    terms.push_back(std::lgamma(nd + 1) - std::lgamma(id + 1) -
                    std::lgamma(nd - id + 1));
  }
  out.log_value = LogSumExp(terms);
  return out;
}

std::uint64_t SharedSampleBudget(double epsilon, double gamma, std::uint64_t k,
                                 std::uint64_t n) {
  RequireOpenUnit(epsilon, "epsilon");
  RequireOpenUnit(gamma, "gamma");
  const SubsetCount h = SubsetCountHStar(k, n);
  const double log_term = std::log(4.0 / gamma) + std::log(static_cast<double>(n)) +
                          h.log_value;
  return SampleCountFromLog(epsilon, log_term);
}

std::uint64_t RandomTest(std::span<const SetHandle* const> selected,
                         const SetHandle& b, std::uint64_t w, Rng& rng) {
  if (w < 1) throw Error(ErrorCode::kInvalidArgument, "w must be >= 1");
  std::vector<Element> samples(w);
  b.random_elements(rng, samples);
  std::vector<std::unique_ptr<QueryBatch>> batches;
  batches.reserve(selected.size());
  for (const SetHandle* a : selected) batches.push_back(std::make_unique<QueryBatch>(*a));
  std::uint64_t t = 0;
  for (Element x : samples) {
    bool covered = false;
    for (auto& batch : batches) {
      if (batch->member(x)) {
        covered = true;
        break;
      }
    }
    if (!covered) ++t;
  }
  return t;
}

DiffEstimate ApproximateDifference(std::span<const SetHandle* const> selected,
                                   const SetHandle& b, double s2,
                                   double epsilon, double gamma, Rng& rng) {
  DiffEstimate est;
  est.w = SampleCount(epsilon, gamma);
  est.t = RandomTest(selected, b, est.w, rng);
  est.s = static_cast<double>(est.t) / static_cast<double>(est.w) * s2;
  return est;
}

bool WithinDifferenceEnvelope(double s, double exact_difference,
                              double exact_b, double epsilon,
                              const BiasProfile& bias) {
  const double lower = (1.0 - bias.alpha_l) * (1.0 - bias.delta_l) * exact_difference -
                       epsilon * exact_b;
  const double upper = (1.0 + bias.alpha_r) * (1.0 + bias.delta_r) * exact_difference +
                       epsilon * exact_b;
  return lower <= s && s <= upper;
}

}  // namespace maxcover
