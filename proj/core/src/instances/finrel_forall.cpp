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

Morphism rel_complement(const Morphism& f) {
  const auto& p = std::get<RelPairs>(f.payload);
  RelPairs out;
  out.dom_size = p.dom_size;
  out.cod_size = p.cod_size;
  for (int x = 0; x < p.dom_size; ++x)
    for (int y = 0; y < p.cod_size; ++y)
      if (!p.contains(x, y)) out.pairs.emplace_back(x, y);
  out.normalize();
  Morphism m;
  m.dom = f.dom;
  m.cod = f.cod;
  m.payload = std::move(out);
  return m;
}

FinRelForallModel::FinRelForallModel(std::vector<std::pair<std::string, Carrier>> sorts)
    : RelModelBase("finrel_forall", std::move(sorts)) {}

Morphism FinRelForallModel::identity(const ObjectExpr& x) const {
  const int n = size_of(x);
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) p.emplace_back(i, j);
  return rel(x, x, std::move(p));
}

Morphism compose_forall(const CategoryModel& model, const Morphism& a, const Morphism& b) {
  if (a.cod != b.dom) throw Error(ErrorKind::TypeMismatch, "compose endpoint mismatch");
  const auto& pa = std::get<RelPairs>(a.payload);
  const auto& pb = std::get<RelPairs>(b.payload);
  RelPairs out;
  out.dom_size = pa.dom_size;
  out.cod_size = pb.cod_size;
  const int mid = pa.cod_size;
  for (int x = 0; x < out.dom_size; ++x)
    for (int z = 0; z < out.cod_size; ++z) {
      bool all = true;
      for (int y = 0; y < mid && all; ++y) all = pa.contains(x, y) || pb.contains(y, z);
      if (all) out.pairs.emplace_back(x, z);
    }
  out.normalize();
  Morphism m;
  m.dom = a.dom;
  m.cod = b.cod;
  m.payload = std::move(out);
  (void)model;
  return m;
}

Morphism FinRelForallModel::compose(const Morphism& f, const Morphism& g) const {
  return compose_forall(*this, f, g);
}

Morphism FinRelForallModel::tensor(const Morphism& f, const Morphism& g) const {
  const auto& a = std::get<RelPairs>(f.payload);
  const auto& c = std::get<RelPairs>(g.payload);
  std::vector<std::pair<int, int>> p;
  for (int x = 0; x < a.dom_size; ++x)
    for (int z = 0; z < c.dom_size; ++z)
      for (int y = 0; y < a.cod_size; ++y)
        for (int v = 0; v < c.cod_size; ++v)
          if (a.contains(x, y) || c.contains(z, v))
            p.emplace_back(x * c.dom_size + z, y * c.cod_size + v);
  return rel(f.dom * g.dom, f.cod * g.cod, std::move(p));
}

Morphism FinRelForallModel::symmetry(const ObjectExpr& x, const ObjectExpr& y) const {
  // Structure arrows are the complements of the usual ones, transported
  // through the complement iso.
  const int nx = size_of(x), ny = size_of(y);
  std::vector<std::pair<int, int>> p;
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b)
      for (int b2 = 0; b2 < ny; ++b2)
        for (int a2 = 0; a2 < nx; ++a2)
          if (!(a2 == a && b2 == b)) p.emplace_back(a * ny + b, b2 * nx + a2);
  return rel(x * y, y * x, std::move(p));
}

std::optional<Morphism> FinRelForallModel::copy(const ObjectExpr& x) const {
  const int n = size_of(x);
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (i != j || i != k) p.emplace_back(i, j * n + k);
  return rel(x, x * x, std::move(p));
}

std::optional<Morphism> FinRelForallModel::discard(const ObjectExpr& x) const {
  return rel(x, ObjectExpr::unit(), {});
}

std::optional<CategoryModel::HomEnum> FinRelForallModel::hom_enumerate(const ObjectExpr& x,
                                                                       const ObjectExpr& y,
                                                                       int cap,
                                                                       uint64_t seed) const {
  return enumerate_relations(x, y, cap, seed);
}

nlohmann::json FinRelForallModel::manifest() const {
  return {{"kind", "finrel_forall"}, {"sorts", sorts_manifest_}};
}

}  // namespace gsmon
