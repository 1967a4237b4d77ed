// Copyright 2026 The gsmon Authors.
//
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

#include "gsmon/instances/rel_models.hpp"
#include "gsmon/rng.hpp"

namespace gsmon {

RelModelBase::RelModelBase(std::string name,
                           std::vector<std::pair<std::string, Carrier>> sorts) {
  name_ = std::move(name);
  sorts_manifest_ = nlohmann::json::object();
  for (auto& [s, c] : sorts) {
    sorts_.push_back(s);
    sorts_manifest_[s] = c.labels;
    carriers_.emplace(s, std::move(c));
  }
}

Carrier RelModelBase::carrier(const ObjectExpr& x) const {
  std::vector<const Carrier*> parts;
  for (const auto& s : x.word) {
    auto it = carriers_.find(s);
    if (it == carriers_.end())
      throw Error(ErrorKind::UnknownName, "sort '" + s + "' in model '" + name_ + "'");
    parts.push_back(&it->second);
  }
  return product_carrier(parts);
}

Morphism RelModelBase::rel(const ObjectExpr& dom, const ObjectExpr& cod,
                           std::vector<std::pair<int, int>> pairs) const {
  RelPairs p;
  p.dom_size = size_of(dom);
  p.cod_size = size_of(cod);
  p.pairs = std::move(pairs);
  p.normalize();
  Morphism m;
  m.dom = dom;
  m.cod = cod;
  m.payload = std::move(p);
  return m;
}

std::optional<CategoryModel::HomEnum> RelModelBase::enumerate_relations(const ObjectExpr& x,
                                                                        const ObjectExpr& y,
                                                                        int cap,
                                                                        uint64_t seed) const {
  const int dn = size_of(x), cn = size_of(y);
  const int bits = dn * cn;
  HomEnum out;
  auto from_mask = [&](uint64_t mask) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < bits; ++i)
      if (mask >> i & 1) pairs.emplace_back(i / cn, i % cn);
    return rel(x, y, std::move(pairs));
  };
  if (bits <= 20) {
    const uint64_t total = 1ULL << bits;
    if (total <= static_cast<uint64_t>(cap)) {
      for (uint64_t m = 0; m < total; ++m) out.morphisms.push_back(from_mask(m));
      return out;
    }
  }
  if (bits > 62 || (1ULL << bits) > static_cast<uint64_t>(cap)) {
    out.truncated = true;
    Rng rng(seed);
    std::vector<uint64_t> masks;
    // Always include the empty and full relations; they witness most failures.
    masks.push_back(0);
    if (bits <= 62) masks.push_back((1ULL << bits) - 1);
    while (static_cast<int>(masks.size()) < cap) {
      uint64_t m = rng.next();
      if (bits < 64) m &= (1ULL << bits) - 1;
      masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (uint64_t m : masks) out.morphisms.push_back(from_mask(m));
    return out;
  }
  return out;
}

FinRelModel::FinRelModel(std::vector<std::pair<std::string, Carrier>> sorts)
    : RelModelBase("finrel", std::move(sorts)) {
  enriched_ = true;
  posetal_ = true;
}

Morphism FinRelModel::identity(const ObjectExpr& x) const {
  const int n = size_of(x);
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, i);
  return rel(x, x, std::move(p));
}

RelPairs rel_compose(const RelPairs& a, const RelPairs& b) {
  RelPairs out;
  out.dom_size = a.dom_size;
  out.cod_size = b.cod_size;
  for (auto [x, y] : a.pairs)
    for (auto [y2, z] : b.pairs)
      if (y == y2) out.pairs.emplace_back(x, z);
  out.normalize();
  return out;
}

Morphism FinRelModel::compose(const Morphism& f, const Morphism& g) const {
  if (f.cod != g.dom) throw Error(ErrorKind::TypeMismatch, "compose endpoint mismatch");
  Morphism m;
  m.dom = f.dom;
  m.cod = g.cod;
  m.payload = rel_compose(std::get<RelPairs>(f.payload), std::get<RelPairs>(g.payload));
  return m;
}

Morphism FinRelModel::tensor(const Morphism& f, const Morphism& g) const {
  const auto& a = std::get<RelPairs>(f.payload);
  const auto& b = std::get<RelPairs>(g.payload);
  std::vector<std::pair<int, int>> p;
  for (auto [x, y] : a.pairs)
    for (auto [z, v] : b.pairs)
      p.emplace_back(x * b.dom_size + z, y * b.cod_size + v);
  return rel(f.dom * g.dom, f.cod * g.cod, std::move(p));
}

Morphism FinRelModel::symmetry(const ObjectExpr& x, const ObjectExpr& y) const {
  const int nx = size_of(x), ny = size_of(y);
  std::vector<std::pair<int, int>> p;
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b) p.emplace_back(a * ny + b, b * nx + a);
  return rel(x * y, y * x, std::move(p));
}

std::optional<Morphism> FinRelModel::copy(const ObjectExpr& x) const {
  const int n = size_of(x);
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, i * n + i);
  return rel(x, x * x, std::move(p));
}

std::optional<Morphism> FinRelModel::discard(const ObjectExpr& x) const {
  const int n = size_of(x);
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, 0);
  return rel(x, ObjectExpr::unit(), std::move(p));
}

std::optional<Morphism> FinRelModel::cocopy(const ObjectExpr& x) const {
  const int n = size_of(x);
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i * n + i, i);
  return rel(x * x, x, std::move(p));
}

std::optional<Morphism> FinRelModel::codischarge(const ObjectExpr& x) const {
  const int n = size_of(x);
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(0, i);
  return rel(ObjectExpr::unit(), x, std::move(p));
}

std::optional<CategoryModel::HomEnum> FinRelModel::hom_enumerate(const ObjectExpr& x,
                                                                 const ObjectExpr& y, int cap,
                                                                 uint64_t seed) const {
  return enumerate_relations(x, y, cap, seed);
}

std::optional<bool> FinRelModel::hom_leq(const Morphism& f, const Morphism& g) const {
  if (f.dom != g.dom || f.cod != g.cod)
    throw Error(ErrorKind::NotParallel, "hom_leq on non-parallel arrows");
  const auto& a = std::get<RelPairs>(f.payload);
  const auto& b = std::get<RelPairs>(g.payload);
  return std::includes(b.pairs.begin(), b.pairs.end(), a.pairs.begin(), a.pairs.end());
}

nlohmann::json FinRelModel::manifest() const {
  return {{"kind", "finrel"}, {"sorts", sorts_manifest_}};
}

}  // namespace gsmon
