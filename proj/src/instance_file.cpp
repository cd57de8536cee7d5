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

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "maxcover/backends.hpp"
#include "maxcover/btree.hpp"
#include "maxcover/harness.hpp"

namespace maxcover::harness {

namespace {

std::string FormatReal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class LineParser {
 public:
  explicit LineParser(std::string_view text) : text_(text) {}

  // Next non-blank line with comments stripped, split on whitespace.
  bool Next(std::vector<std::string_view>& tokens) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(line_no_) + ": " + what);
  }

  template <class T>
  T Integer(std::string_view token) const {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      Fail("expected integer, got '" + std::string(token) + "'");
    }
    return value;
  }

  double Real(std::string_view token) const {
    std::string copy(token);
    char* end = nullptr;
    const double v = std::strtod(copy.c_str(), &end);
    if (end != copy.c_str() + copy.size()) {
      Fail("expected real, got '" + copy + "'");
    }
    return v;
  }

  void Expect(const std::vector<std::string_view>& tokens, std::string_view key,
              std::size_t count) const {
    if (tokens[0] != key) {
      Fail("expected '" + std::string(key) + "', got '" + std::string(tokens[0]) + "'");
    }
    if (tokens.size() != count) {
      Fail("'" + std::string(key) + "' takes " + std::to_string(count - 1) + " value(s)");
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

}  // namespace

std::string EmitInstance(const InstanceFile& file) {
  std::ostringstream out;
  out << "maxcover-instance " << file.format_version << "\n";
  out << "k " << file.k << "\n";
  out << "seed " << file.seed << "\n";
  out << "bias " << FormatReal(file.bias.alpha_l) << ' '
      << FormatReal(file.bias.alpha_r) << ' ' << FormatReal(file.bias.delta_l)
      << ' ' << FormatReal(file.bias.delta_r) << "\n";
  out << "sets " << file.sets.size() << "\n";
  for (const auto& spec : file.sets) {
    if (const auto* e = std::get_if<ExplicitSet>(&spec)) {
      out << "explicit " << e->elements.size();
      for (Element x : e->elements) out << ' ' << x;
    } else {
      const auto& r = std::get<RectangleSet>(spec);
      out << "rectangle " << r.lo.size();
      for (auto v : r.lo) out << ' ' << v;
      for (auto v : r.hi) out << ' ' << v;
    }
    out << "\n";
  }
  return out.str();
}

InstanceFile ParseInstance(std::string_view text) {
  LineParser p(text);
  std::vector<std::string_view> t;
  InstanceFile file;

  if (!p.Next(t)) p.Fail("empty instance file");
  p.Expect(t, "maxcover-instance", 2);
  file.format_version = p.Integer<int>(t[1]);
  if (file.format_version != kFormatVersion) {
    p.Fail("unsupported format version " + std::to_string(file.format_version));
  }
  if (!p.Next(t)) p.Fail("missing 'k'");
  p.Expect(t, "k", 2);
  file.k = p.Integer<std::size_t>(t[1]);
  if (!p.Next(t)) p.Fail("missing 'seed'");
  p.Expect(t, "seed", 2);
  file.seed = p.Integer<std::uint64_t>(t[1]);
  if (!p.Next(t)) p.Fail("missing 'bias'");
  p.Expect(t, "bias", 5);
  file.bias = {p.Real(t[1]), p.Real(t[2]), p.Real(t[3]), p.Real(t[4])};
  try {
    file.bias.Validate();
  } catch (const Error& e) {
    p.Fail(e.what());
  }
  if (!p.Next(t)) p.Fail("missing 'sets'");
  p.Expect(t, "sets", 2);
  const auto count = p.Integer<std::size_t>(t[1]);

  for (std::size_t i = 0; i < count; ++i) {
    if (!p.Next(t)) p.Fail("expected " + std::to_string(count) + " sets, got " + std::to_string(i));
    if (t[0] == "explicit") {
      if (t.size() < 2) p.Fail("'explicit' needs a count");
      const auto size = p.Integer<std::size_t>(t[1]);
      if (t.size() != size + 2) p.Fail("explicit set declares " + std::to_string(size) + " elements");
      ExplicitSet e;
      e.elements.reserve(size);
      std::unordered_set<Element> seen;
      for (std::size_t j = 0; j < size; ++j) {
        const auto x = p.Integer<Element>(t[j + 2]);
        if (!seen.insert(x).second) p.Fail("duplicate element " + std::to_string(x));
        e.elements.push_back(x);
      }
      file.sets.emplace_back(std::move(e));
    } else if (t[0] == "rectangle") {
      if (t.size() < 2) p.Fail("'rectangle' needs a dimension");
      const auto dim = p.Integer<std::size_t>(t[1]);
      if (dim < 1 || t.size() != 2 * dim + 2) p.Fail("rectangle needs dim, dim lows and dim highs");
      RectangleSet r;
      for (std::size_t j = 0; j < dim; ++j) r.lo.push_back(p.Integer<std::int64_t>(t[2 + j]));
      for (std::size_t j = 0; j < dim; ++j) r.hi.push_back(p.Integer<std::int64_t>(t[2 + dim + j]));
      for (std::size_t j = 0; j < dim; ++j) {
        if (r.lo[j] > r.hi[j]) p.Fail("rectangle has lo > hi");
      }
      file.sets.emplace_back(std::move(r));
    } else {
      p.Fail("unknown set kind '" + std::string(t[0]) + "'");
    }
  }
  if (p.Next(t)) p.Fail("trailing content after " + std::to_string(count) + " sets");
  return file;
}

InstanceFile LoadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str());
}

void SaveInstance(const InstanceFile& file, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << EmitInstance(file);
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

std::vector<ElementList> MaterializeSets(const InstanceFile& file,
                                         std::uint64_t cap) {
  std::uint64_t total = 0;
  std::vector<ElementList> out;
  out.reserve(file.sets.size());
  for (const auto& spec : file.sets) {
    if (const auto* e = std::get_if<ExplicitSet>(&spec)) {
      total += e->elements.size();
      if (total > cap) break;
      out.push_back(e->elements);
    } else {
      const auto& r = std::get<RectangleSet>(spec);
      const std::uint64_t size = LatticeRectangle::Cardinality(r.lo, r.hi);
      if (size > cap || total + size > cap) {
        total = cap + 1;
        break;
      }
      total += size;
      out.push_back(LatticeRectangle(r.lo, r.hi).materialize());
    }
  }
  if (total > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "instance has more than " + std::to_string(cap) + " elements");
  }
  return out;
}

std::string_view BackendName(BackendKind kind) {
  switch (kind) {
    case BackendKind::kSorted: return "sorted";
    case BackendKind::kUnsorted: return "unsorted";
    case BackendKind::kBTree: return "btree";
    case BackendKind::kHash: return "hash";
    case BackendKind::kRect: return "rect";
  }
  return "?";
}

std::optional<BackendKind> ParseBackend(std::string_view name) {
  for (auto kind : {BackendKind::kSorted, BackendKind::kUnsorted, BackendKind::kBTree,
                    BackendKind::kHash, BackendKind::kRect}) {
    if (BackendName(kind) == name) return kind;
  }
  return std::nullopt;
}

CoverageInstance BuildInstance(const InstanceFile& file, BackendKind backend,
                               Rng& rng) {
  std::vector<std::shared_ptr<SetBackend>> backends;
  backends.reserve(file.sets.size());
  std::size_t rect_dim = 0;
  for (std::size_t i = 0; i < file.sets.size(); ++i) {
    const auto& spec = file.sets[i];
    if (const auto* r = std::get_if<RectangleSet>(&spec)) {
      if (rect_dim != 0 && r->lo.size() != rect_dim) {
        throw Error(ErrorCode::kTypeMismatch,
                    "rectangles of different dimensions in one instance");
      }
      rect_dim = r->lo.size();
      backends.push_back(std::make_shared<LatticeRectangle>(r->lo, r->hi));
      continue;
    }
    const auto& items = std::get<ExplicitSet>(spec).elements;
    switch (backend) {
      case BackendKind::kSorted:
        backends.push_back(std::make_shared<SortedArraySet>(items));
        break;
      case BackendKind::kUnsorted:
        backends.push_back(std::make_shared<UnsortedArraySet>(items));
        break;
      case BackendKind::kBTree:
        backends.push_back(std::make_shared<CountedBTree>(items));
        break;
      case BackendKind::kHash:
        backends.push_back(std::make_shared<BucketHashSet>(items, Mix64(file.seed + i)));
        break;
      case BackendKind::kRect:
        throw Error(ErrorCode::kTypeMismatch,
                    "backend 'rect' cannot hold explicit set " + std::to_string(i));
    }
  }
  return CoverageInstance::FromBackends(std::move(backends), file.k, file.bias, rng);
}

}  // namespace maxcover::harness
