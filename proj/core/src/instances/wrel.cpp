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

#include "gsmon/instances/wrel_model.hpp"

#include <algorithm>

#include "gsmon/rng.hpp"

namespace gsmon {

WRelModel::WRelModel(Semiring semiring, std::vector<std::pair<std::string, Carrier>> sorts)
    : semiring_(std::move(semiring)) {
  name_ = "wrel(" + (semiring_.name().empty() ? "semiring" : semiring_.name()) + ")";
  enriched_ = true;
  posetal_ = semiring_.order_is_partial();
  sorts_manifest_ = nlohmann::json::object();
  for (auto& [s, c] : sorts) {
    sorts_.push_back(s);
    sorts_manifest_[s] = c.labels;
    carriers_.emplace(s, std::move(c));
  }
}

Carrier WRelModel::carrier(const ObjectExpr& x) const {
  std::vector<const Carrier*> parts;
  for (const auto& s : x.word) {
    auto it = carriers_.find(s);
    if (it == carriers_.end())
      throw Error(ErrorKind::UnknownName, "sort '" + s + "' in model '" + name_ + "'");
    parts.push_back(&it->second);
  }
  return product_carrier(parts);
}

Morphism WRelModel::mat(const ObjectExpr& dom, const ObjectExpr& cod, WeightMat m) const {
  Morphism f;
  f.dom = dom;
  f.cod = cod;
  f.payload = std::move(m);
  return f;
}

Morphism WRelModel::identity(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  WeightMat m;
  m.rows = m.cols = n;
  m.entries.assign(static_cast<size_t>(n) * n, semiring_.zero());
  for (int i = 0; i < n; ++i) m.at(i, i) = semiring_.one();
  return mat(x, x, std::move(m));
}

WeightMat wrel_compose(const Semiring& s, const WeightMat& a, const WeightMat& b) {
  if (a.cols != b.rows) throw Error(ErrorKind::TypeMismatch, "matrix dimension mismatch");
  WeightMat out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.entries.assign(static_cast<size_t>(a.rows) * b.cols, s.zero());
  for (int x = 0; x < a.rows; ++x)
    for (int y = 0; y < a.cols; ++y) {
      const int w = a.at(x, y);
      if (w == s.zero()) continue;
      for (int z = 0; z < b.cols; ++z)
        out.at(x, z) = s.add(out.at(x, z), s.mul(w, b.at(y, z)));
    }
  return out;
}

Morphism WRelModel::compose(const Morphism& f, const Morphism& g) const {
  if (f.cod != g.dom) throw Error(ErrorKind::TypeMismatch, "compose endpoint mismatch");
  return mat(f.dom, g.cod,
             wrel_compose(semiring_, std::get<WeightMat>(f.payload),
                          std::get<WeightMat>(g.payload)));
}

Morphism WRelModel::tensor(const Morphism& f, const Morphism& g) const {
  const auto& a = std::get<WeightMat>(f.payload);
  const auto& b = std::get<WeightMat>(g.payload);
  WeightMat out;
  out.rows = a.rows * b.rows;
  out.cols = a.cols * b.cols;
  out.entries.assign(static_cast<size_t>(out.rows) * out.cols, semiring_.zero());
  for (int x = 0; x < a.rows; ++x)
    for (int z = 0; z < b.rows; ++z)
      for (int y = 0; y < a.cols; ++y)
        for (int v = 0; v < b.cols; ++v)
          out.at(x * b.rows + z, y * b.cols + v) = semiring_.mul(a.at(x, y), b.at(z, v));
  return mat(f.dom * g.dom, f.cod * g.cod, std::move(out));
}

Morphism WRelModel::symmetry(const ObjectExpr& x, const ObjectExpr& y) const {
  const int nx = carrier(x).size(), ny = carrier(y).size();
  WeightMat m;
  m.rows = m.cols = nx * ny;
  m.entries.assign(static_cast<size_t>(m.rows) * m.cols, semiring_.zero());
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b) m.at(a * ny + b, b * nx + a) = semiring_.one();
  return mat(x * y, y * x, std::move(m));
}

std::optional<Morphism> WRelModel::copy(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  WeightMat m;
  m.rows = n;
  m.cols = n * n;
  m.entries.assign(static_cast<size_t>(n) * n * n, semiring_.zero());
  for (int i = 0; i < n; ++i) m.at(i, i * n + i) = semiring_.one();
  return mat(x, x * x, std::move(m));
}

std::optional<Morphism> WRelModel::discard(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  WeightMat m;
  m.rows = n;
  m.cols = 1;
  m.entries.assign(n, semiring_.one());
  return mat(x, ObjectExpr::unit(), std::move(m));
}

std::optional<Morphism> WRelModel::cocopy(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  WeightMat m;
  m.rows = n * n;
  m.cols = n;
  m.entries.assign(static_cast<size_t>(n) * n * n, semiring_.zero());
  for (int i = 0; i < n; ++i) m.at(i * n + i, i) = semiring_.one();
  return mat(x * x, x, std::move(m));
}

std::optional<Morphism> WRelModel::codischarge(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  WeightMat m;
  m.rows = 1;
  m.cols = n;
  m.entries.assign(n, semiring_.one());
  return mat(ObjectExpr::unit(), x, std::move(m));
}

std::optional<CategoryModel::HomEnum> WRelModel::hom_enumerate(const ObjectExpr& x,
                                                               const ObjectExpr& y, int cap,
                                                               uint64_t seed) const {
  const int dn = carrier(x).size(), cn = carrier(y).size();
  const int cells = dn * cn;
  const int k = semiring_.size();
  HomEnum out;
  auto from_digits = [&](const std::vector<int>& d) {
    WeightMat m;
    m.rows = dn;
    m.cols = cn;
    m.entries = d;
    return mat(x, y, std::move(m));
  };
  double total = 1;
  for (int i = 0; i < cells; ++i) {
    total *= k;
    if (total > 1e18) break;
  }
  if (total <= static_cast<double>(cap)) {
    std::vector<int> d(cells, 0);
    while (true) {
      out.morphisms.push_back(from_digits(d));
      int i = cells - 1;
      for (; i >= 0; --i) {
        if (++d[i] < k) break;
        d[i] = 0;
      }
      if (i < 0) break;
      if (cells == 0) break;
    }
    return out;
  }
  out.truncated = true;
  Rng rng(seed);
  std::vector<std::vector<int>> samples;
  samples.emplace_back(cells, semiring_.zero());
  while (static_cast<int>(samples.size()) < cap) {
    std::vector<int> d(cells);
    for (int i = 0; i < cells; ++i) d[i] = static_cast<int>(rng.below(k));
    samples.push_back(std::move(d));
  }
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  for (auto& d : samples) out.morphisms.push_back(from_digits(d));
  return out;
}

std::optional<bool> WRelModel::hom_leq(const Morphism& f, const Morphism& g) const {
  if (f.dom != g.dom || f.cod != g.cod)
    throw Error(ErrorKind::NotParallel, "hom_leq on non-parallel arrows");
  const auto& a = std::get<WeightMat>(f.payload);
  const auto& b = std::get<WeightMat>(g.payload);
  for (size_t i = 0; i < a.entries.size(); ++i)
    if (!semiring_.leq(a.entries[i], b.entries[i])) return false;
  return true;
}

nlohmann::json WRelModel::manifest() const {
  return {{"kind", "wrel"}, {"sorts", sorts_manifest_}, {"semiring", semiring_.to_json()}};
}

}  // namespace gsmon
