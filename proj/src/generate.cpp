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
#include <numeric>

#include "maxcover/harness.hpp"

namespace maxcover::harness {

namespace {

void Require(bool ok, const std::string& constraint) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, "invalid parameters: need " + constraint);
}

// `count` distinct values from [0, range), in random order.
std::vector<std::uint64_t> SampleDistinct(std::uint64_t range, std::size_t count,
                                          Rng& rng) {
  std::vector<std::uint64_t> pool(range);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[rng.uniform(i, range - 1)]);
  }
  pool.resize(count);
  return pool;
}

ExplicitSet Interval(Element first, std::size_t length) {
  ExplicitSet s;
  s.elements.resize(length);
  std::iota(s.elements.begin(), s.elements.end(), first);
  return s;
}

}  // namespace

std::string_view GeneratorName(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kRandom: return "random";
    case GeneratorKind::kDisjoint: return "disjoint";
    case GeneratorKind::kOverlapChain: return "overlap-chain";
    case GeneratorKind::kTwin: return "twin";
    case GeneratorKind::kRectangles: return "rectangles";
  }
  return "?";
}

std::optional<GeneratorKind> ParseGenerator(std::string_view name) {
  for (auto kind : {GeneratorKind::kRandom, GeneratorKind::kDisjoint,
                    GeneratorKind::kOverlapChain, GeneratorKind::kTwin,
                    GeneratorKind::kRectangles}) {
    if (GeneratorName(kind) == name) return kind;
  }
  return std::nullopt;
}

GeneratedInstances Generate(GeneratorKind kind, const GeneratorParams& params) {
  Require(params.n >= 1, "n >= 1");
  Require(params.k >= 1 && params.k <= params.n, "1 <= k <= n");
  params.bias.Validate();

  Rng rng(params.seed);
  GeneratedInstances out;
  InstanceFile& file = out.primary;
  file.k = params.k;
  file.seed = params.seed;
  file.bias = params.bias;

  switch (kind) {
    case GeneratorKind::kRandom: {
      Require(params.m >= 1, "m >= 1");
      const std::uint64_t universe = params.universe == 0 ? 2 * params.m : params.universe;
      Require(universe >= params.m, "universe >= m");
      for (std::size_t i = 0; i < params.n; ++i) {
        const std::size_t size = rng.uniform(1, params.m);
        ExplicitSet s;
        for (std::uint64_t v : SampleDistinct(universe, size, rng)) s.elements.push_back(v + 1);
        file.sets.emplace_back(std::move(s));
      }
      break;
    }
    case GeneratorKind::kDisjoint:
      Require(params.m >= 1, "m >= 1");
      for (std::size_t i = 0; i < params.n; ++i) {
        file.sets.emplace_back(Interval(i * params.m + 1, params.m));
      }
      break;
    case GeneratorKind::kOverlapChain: {
      Require(params.m >= 1, "m >= 1");
      Require(params.overlap < params.m, "overlap < m");
      const std::size_t stride = params.m - params.overlap;
      for (std::size_t i = 0; i < params.n; ++i) {
        file.sets.emplace_back(Interval(i * stride + 1, params.m));
      }
      break;
    }
    case GeneratorKind::kTwin: {
      Require(params.d >= 1, "d >= 1");
      Require(params.m >= params.d && params.m % params.d == 0, "d divides m");
      Require(params.d <= params.n, "d <= n");
      const std::size_t block = params.m / params.d;
      for (std::size_t i = 0; i < params.n; ++i) file.sets.emplace_back(Interval(1, block));
      out.block_indices.clear();
      for (std::uint64_t v : SampleDistinct(params.n, params.d, rng)) {
        out.block_indices.push_back(static_cast<std::size_t>(v));
      }
      std::sort(out.block_indices.begin(), out.block_indices.end());
      InstanceFile prime = file;
      for (std::size_t j = 0; j < params.d; ++j) {
        prime.sets[out.block_indices[j]] = Interval(j * block + 1, block);
      }
      out.twin = std::move(prime);
      break;
    }
    case GeneratorKind::kRectangles: {
      Require(params.dim >= 1 && params.dim <= 8, "1 <= dim <= 8");
      Require(params.extent >= 1, "extent >= 1");
      for (std::size_t i = 0; i < params.n; ++i) {
        RectangleSet r;
        for (std::size_t j = 0; j < params.dim; ++j) {
          const auto lo = rng.uniform_signed(0, params.extent - 1);
          r.lo.push_back(lo);
          r.hi.push_back(rng.uniform_signed(lo, params.extent - 1));
        }
        file.sets.emplace_back(std::move(r));
      }
      break;
    }
  }
  return out;
}

}  // namespace maxcover::harness
