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

#include "maxcover/core.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace maxcover {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kEmptySet: return "empty set";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kInfeasibleSkew: return "infeasible skew";
    case ErrorCode::kCapExceeded: return "cap exceeded";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kTypeMismatch: return "type mismatch";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

// splitmix64 finalizer.
std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(Mix64(seed_ ^ Mix64(stream ^ 0xd1b54a32d192ed03ULL)));
}

void BiasProfile::Validate() const {
  for (double v : {alpha_l, alpha_r, delta_l, delta_r}) {
    if (!(v >= 0.0 && v < 1.0)) {
      throw Error(ErrorCode::kDomain,
                  "bias parameters must lie in [0, 1), got " +
                      std::to_string(v));
    }
  }
}

double BiasProfile::beta() const {
  return (1.0 - alpha_l) * (1.0 - delta_l) /
         ((1.0 + alpha_r) * (1.0 + delta_r));
}

Element SetBackend::random_element(Rng& rng) const {
  const std::uint64_t n = size();
  if (n == 0) throw Error(ErrorCode::kEmptySet, "random draw from empty set");
  return at(rng.uniform(0, n - 1));
}

std::vector<Element> SetBackend::materialize() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::uint64_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

SkewedSampler::SkewedSampler(std::uint64_t m, double alpha_l, double alpha_r)
    : m_(m), low_count_(m / 2) {
  if (!(alpha_l >= 0.0 && alpha_l < 1.0 && alpha_r >= 0.0 && alpha_r < 1.0)) {
    throw Error(ErrorCode::kDomain, "skew parameters must lie in [0, 1)");
  }
  if (m == 0) {
    low_mass_ = low_probability_ = high_probability_ = 0.0;
    return;
  }
  const double md = static_cast<double>(m);
  const double low = static_cast<double>(low_count_);
  const double high = md - low;
  // Excess mass moved onto the high half: low * alpha_l / m, spread over
  // `high` members, must not exceed alpha_r / m per member.
  if (low * alpha_l > alpha_r * high + 1e-12) {
    throw Error(ErrorCode::kInfeasibleSkew,
                "skew infeasible: floor(m/2)*alpha_l > alpha_r*ceil(m/2) for m=" +
                    std::to_string(m));
  }
  low_probability_ = (1.0 - alpha_l) / md;
  low_mass_ = low * low_probability_;
  high_probability_ = (1.0 - low_mass_) / high;
}

Element SkewedSampler::Draw(const SetBackend& backend, Rng& rng) const {
  if (m_ == 0) throw Error(ErrorCode::kEmptySet, "random draw from empty set");
  if (low_count_ > 0 && rng.unit() < low_mass_) {
    return backend.at(rng.uniform(0, low_count_ - 1));
  }
  return backend.at(rng.uniform(low_count_, m_ - 1));
}

SetHandle::SetHandle(std::size_t set_id, std::shared_ptr<SetBackend> backend,
                     double reported_size, std::optional<SkewedSampler> skew,
                     std::shared_ptr<CostMeter> meter)
    : set_id_(set_id),
      backend_(std::move(backend)),
      reported_size_(reported_size),
      skew_(std::move(skew)),
      meter_(std::move(meter)) {
  if (!backend_ || !meter_) {
    throw Error(ErrorCode::kInvalidArgument, "handle needs backend and meter");
  }
}

Element SetHandle::random_element(Rng& rng) const {
  if (backend_->empty()) {
    throw Error(ErrorCode::kEmptySet,
                "random draw from empty set " + std::to_string(set_id_));
  }
  meter_->AddDraw();
  return skew_ ? skew_->Draw(*backend_, rng) : backend_->random_element(rng);
}

void SetHandle::random_elements(Rng& rng, std::span<Element> out) const {
  if (out.empty()) return;
  if (backend_->empty()) {
    throw Error(ErrorCode::kEmptySet,
                "random draw from empty set " + std::to_string(set_id_));
  }
  meter_->AddDraws(out.size());
  if (skew_) {
    for (auto& x : out) x = skew_->Draw(*backend_, rng);
  } else {
    for (auto& x : out) x = backend_->random_element(rng);
  }
}

bool SetHandle::member(Element x) const {
  std::uint64_t comparisons = 0;
  return member(x, comparisons);
}

bool SetHandle::member(Element x, std::uint64_t& comparisons) const {
  std::uint64_t local = 0;
  const bool found = backend_->contains(x, local);
  meter_->AddQuery(local);
  comparisons += local;
  return found;
}

SetHandle MakeHandle(std::size_t set_id, std::shared_ptr<SetBackend> backend,
                     const BiasProfile& bias, Rng& rng,
                     std::shared_ptr<CostMeter> meter) {
  bias.Validate();
  const auto exact = static_cast<double>(backend->size());
  double reported = exact;
  if (exact > 0 && (bias.delta_l > 0.0 || bias.delta_r > 0.0)) {
    const double lo = (1.0 - bias.delta_l) * exact;
    const double hi = (1.0 + bias.delta_r) * exact;
    reported = std::clamp(lo + (hi - lo) * rng.unit(), lo, hi);
  }
  std::optional<SkewedSampler> skew;
  if (bias.alpha_l > 0.0 || bias.alpha_r > 0.0) {
    skew.emplace(backend->size(), bias.alpha_l, bias.alpha_r);
  }
  return SetHandle(set_id, std::move(backend), reported, std::move(skew),
                   std::move(meter));
}

CoverageInstance::CoverageInstance(std::vector<SetHandle> handles,
                                   std::size_t k, BiasProfile bias,
                                   std::shared_ptr<CostMeter> meter,
                                   bool allow_empty)
    : handles_(std::move(handles)),
      k_(k),
      bias_(bias),
      meter_(std::move(meter)) {
  bias_.Validate();
  if (handles_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "instance needs at least one set");
  }
  if (k_ < 1 || k_ > handles_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must satisfy 1 <= k <= n (k=" + std::to_string(k_) +
                    ", n=" + std::to_string(handles_.size()) + ")");
  }
  if (!meter_) meter_ = std::make_shared<CostMeter>();
  if (!allow_empty) {
    for (const auto& h : handles_) {
      if (h.empty()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "set " + std::to_string(h.set_id()) + " is empty");
      }
    }
  }
}

CoverageInstance CoverageInstance::FromBackends(
    std::vector<std::shared_ptr<SetBackend>> backends, std::size_t k,
    const BiasProfile& bias, Rng& rng, bool allow_empty) {
  auto meter = std::make_shared<CostMeter>();
  std::vector<SetHandle> handles;
  handles.reserve(backends.size());
  for (std::size_t i = 0; i < backends.size(); ++i) {
    handles.push_back(MakeHandle(i, std::move(backends[i]), bias, rng, meter));
  }
  return CoverageInstance(std::move(handles), k, bias, std::move(meter),
                          allow_empty);
}

std::uint64_t CoverageInstance::max_set_size() const {
  std::uint64_t m = 0;
  for (const auto& h : handles_) m = std::max(m, h.exact_size());
  return m;
}

}  // namespace maxcover
