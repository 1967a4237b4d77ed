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

#include "gsmon/instances/rel_models.hpp"

namespace gsmon {

RelPlusModel::RelPlusModel(std::vector<std::pair<std::string, Carrier>> sorts)
    : RelModelBase("rel_plus", std::move(sorts)) {}

Carrier RelPlusModel::carrier(const ObjectExpr& x) const {
  std::vector<const Carrier*> parts;
  for (const auto& s : x.word) {
    auto it = carriers_.find(s);
    if (it == carriers_.end())
      throw Error(ErrorKind::UnknownName, "sort '" + s + "' in model '" + name_ + "'");
    parts.push_back(&it->second);
  }
  return sum_carrier(parts);
}

Morphism RelPlusModel::identity(const ObjectExpr& x) const {
  const int n = size_of(x);
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, i);
  return rel(x, x, std::move(p));
}

Morphism RelPlusModel::compose(const Morphism& f, const Morphism& g) const {
  if (f.cod != g.dom) throw Error(ErrorKind::TypeMismatch, "compose endpoint mismatch");
  Morphism m;
  m.dom = f.dom;
  m.cod = g.cod;
  m.payload = rel_compose(std::get<RelPairs>(f.payload), std::get<RelPairs>(g.payload));
  return m;
}

Morphism RelPlusModel::tensor(const Morphism& f, const Morphism& g) const {
  const auto& a = std::get<RelPairs>(f.payload);
  const auto& b = std::get<RelPairs>(g.payload);
  std::vector<std::pair<int, int>> p;
  for (auto [x, y] : a.pairs) p.emplace_back(x, y);
  for (auto [z, v] : b.pairs) p.emplace_back(a.dom_size + z, a.cod_size + v);
  return rel(f.dom * g.dom, f.cod * g.cod, std::move(p));
}

Morphism RelPlusModel::symmetry(const ObjectExpr& x, const ObjectExpr& y) const {
  const int nx = size_of(x), ny = size_of(y);
  std::vector<std::pair<int, int>> p;
  for (int a = 0; a < nx; ++a) p.emplace_back(a, ny + a);
  for (int b = 0; b < ny; ++b) p.emplace_back(nx + b, b);
  return rel(x * y, y * x, std::move(p));
}

std::optional<Morphism> RelPlusModel::copy(const ObjectExpr& x) const {
  const int n = size_of(x);
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) {
    p.emplace_back(i, i);      // left injection
    p.emplace_back(i, n + i);  // right injection
  }
  return rel(x, x * x, std::move(p));
}

std::optional<Morphism> RelPlusModel::discard(const ObjectExpr& x) const {
  return rel(x, ObjectExpr::unit(), {});
}

std::optional<Morphism> RelPlusModel::cocopy(const ObjectExpr& x) const {
  const int n = size_of(x);
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) {
    p.emplace_back(i, i);
    p.emplace_back(n + i, i);
  }
  return rel(x * x, x, std::move(p));
}

std::optional<Morphism> RelPlusModel::codischarge(const ObjectExpr& x) const {
  return rel(ObjectExpr::unit(), x, {});
}

std::optional<CategoryModel::HomEnum> RelPlusModel::hom_enumerate(const ObjectExpr& x,
                                                                  const ObjectExpr& y, int cap,
                                                                  uint64_t seed) const {
  return enumerate_relations(x, y, cap, seed);
}

nlohmann::json RelPlusModel::manifest() const {
  return {{"kind", "rel_plus"}, {"sorts", sorts_manifest_}};
}

}  // namespace gsmon
