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

#include "gsmon/instances/table_model.hpp"

#include <algorithm>

#include "gsmon/rng.hpp"

namespace gsmon {

TableCategory::TableCategory(std::string name,
                             std::vector<std::pair<std::string, Carrier>> sorts, Options opt)
    : opt_(std::move(opt)) {
  name_ = std::move(name);
  enriched_ = opt_.enriched;
  posetal_ = opt_.posetal;
  sorts_manifest_ = nlohmann::json::object();
  for (auto& [s, c] : sorts) {
    sorts_.push_back(s);
    sorts_manifest_[s] = c.labels;
    carriers_.emplace(s, std::move(c));
  }
}

const Carrier& TableCategory::sort_carrier(const std::string& s) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = carriers_.find(s);
  if (it == carriers_.end())
    throw Error(ErrorKind::UnknownName, "sort '" + s + "' in model '" + name_ + "'");
  return it->second;
}

std::string TableCategory::ensure_sort(const std::string& name,
                                       const std::function<Carrier()>& maker) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (carriers_.count(name)) return name;
  }
  Carrier c = maker();  // built outside the lock; makers may recurse
  std::lock_guard<std::mutex> lock(mu_);
  carriers_.emplace(name, std::move(c));
  return name;
}

Carrier TableCategory::carrier(const ObjectExpr& x) const {
  std::vector<const Carrier*> parts;
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& s : x.word) {
    auto it = carriers_.find(s);
    if (it == carriers_.end())
      throw Error(ErrorKind::UnknownName, "sort '" + s + "' in model '" + name_ + "'");
    parts.push_back(&it->second);
  }
  return product_carrier(parts);
}

std::vector<int> TableCategory::table_of(const Morphism& f, const char* what) const {
  if (opt_.maps == Maps::Total) {
    const auto* t = std::get_if<FunTable>(&f.payload);
    if (!t) throw Error(ErrorKind::TypeMismatch, std::string(what) + ": expected function table");
    return t->map;
  }
  const auto* t = std::get_if<ParTable>(&f.payload);
  if (!t) throw Error(ErrorKind::TypeMismatch, std::string(what) + ": expected partial table");
  return t->map;
}

Morphism TableCategory::from_table(const ObjectExpr& dom, const ObjectExpr& cod,
                                   std::vector<int> t) const {
  const int cod_size = carrier(cod).size();
  Morphism m;
  m.dom = dom;
  m.cod = cod;
  if (opt_.maps == Maps::Total)
    m.payload = FunTable{std::move(t), cod_size};
  else
    m.payload = ParTable{std::move(t), cod_size};
  return m;
}

Morphism TableCategory::identity(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  return from_table(x, x, std::move(t));
}

Morphism TableCategory::compose(const Morphism& f, const Morphism& g) const {
  if (f.cod != g.dom) throw Error(ErrorKind::TypeMismatch, "compose endpoint mismatch");
  const auto tf = table_of(f, "compose lhs");
  const auto tg = table_of(g, "compose rhs");
  std::vector<int> t(tf.size());
  for (size_t i = 0; i < tf.size(); ++i) t[i] = tf[i] < 0 ? -1 : tg[tf[i]];
  return from_table(f.dom, g.cod, std::move(t));
}

Morphism TableCategory::tensor(const Morphism& f, const Morphism& g) const {
  const auto tf = table_of(f, "tensor lhs");
  const auto tg = table_of(g, "tensor rhs");
  const int fd = static_cast<int>(tf.size());
  const int gd = static_cast<int>(tg.size());
  auto cod_size = [this](const Morphism& m) {
    if (opt_.maps == Maps::Total) return std::get<FunTable>(m.payload).cod_size;
    return std::get<ParTable>(m.payload).cod_size;
  };
  const int fc = cod_size(f);
  const int gc = cod_size(g);
  std::vector<int> t(static_cast<size_t>(fd) * gd);
  for (int a = 0; a < fd; ++a)
    for (int b = 0; b < gd; ++b) {
      const int va = tf[a], vb = tg[b];
      t[a * gd + b] = (va < 0 || vb < 0) ? -1 : va * gc + vb;
    }
  return from_table(f.dom * g.dom, f.cod * g.cod, std::move(t));
}

Morphism TableCategory::symmetry(const ObjectExpr& x, const ObjectExpr& y) const {
  const int nx = carrier(x).size(), ny = carrier(y).size();
  std::vector<int> t(static_cast<size_t>(nx) * ny);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b) t[a * ny + b] = b * nx + a;
  return from_table(x * y, y * x, std::move(t));
}

std::optional<Morphism> TableCategory::copy(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i * n + i;
  return from_table(x, x * x, std::move(t));
}

std::optional<Morphism> TableCategory::discard(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  return from_table(x, ObjectExpr::unit(), std::vector<int>(n, 0));
}

bool TableCategory::is_monotone(const Morphism& f) const {
  const Carrier dc = carrier(f.dom);
  const Carrier cc = carrier(f.cod);
  if (!dc.ordered) return true;
  const auto t = table_of(f, "monotone");
  for (int a = 0; a < dc.size(); ++a)
    for (int b = 0; b < dc.size(); ++b)
      if (dc.le(a, b)) {
        if (t[a] < 0 || t[b] < 0) {
          if (t[a] != t[b]) return false;  // definedness must agree on comparable pairs
        } else if (!cc.le(t[a], t[b])) {
          return false;
        }
      }
  return true;
}

std::optional<CategoryModel::HomEnum> TableCategory::hom_enumerate(const ObjectExpr& x,
                                                                   const ObjectExpr& y, int cap,
                                                                   uint64_t seed) const {
  const int dn = carrier(x).size();
  const int cn = carrier(y).size();
  const int base = cn + (opt_.maps == Maps::Partial ? 1 : 0);
  HomEnum out;
  if (dn == 0) {
    // single empty table
    out.morphisms.push_back(from_table(x, y, {}));
    return out;
  }
  if (base == 0) {
    if (opt_.maps == Maps::Total) return out;  // no maps into the empty carrier
    out.morphisms.push_back(from_table(x, y, std::vector<int>(dn, -1)));
    return out;
  }
  double total = 1;
  for (int i = 0; i < dn; ++i) total *= base;

  auto decode = [&](long index) {
    std::vector<int> t(dn);
    for (int i = dn - 1; i >= 0; --i) {
      int d = static_cast<int>(index % base);
      index /= base;
      t[i] = (opt_.maps == Maps::Partial) ? d - 1 : d;  // digit 0 = undefined for partial
    }
    return t;
  };
  auto accept = [&](const std::vector<int>& t) {
    if (!opt_.require_monotone) return true;
    Morphism m = from_table(x, y, t);
    return is_monotone(m);
  };

  const double scan_limit = 1 << 20;
  if (total <= scan_limit) {
    std::vector<std::vector<int>> accepted;
    for (long i = 0; i < static_cast<long>(total); ++i) {
      auto t = decode(i);
      if (accept(t)) accepted.push_back(std::move(t));
    }
    if (static_cast<int>(accepted.size()) <= cap) {
      for (auto& t : accepted) out.morphisms.push_back(from_table(x, y, std::move(t)));
      return out;
    }
    // Deterministic seeded sample of the accepted list.
    out.truncated = true;
    Rng rng(seed);
    std::vector<char> chosen(accepted.size(), 0);
    for (int k = 0; k < cap; ++k) {
      uint64_t i = rng.below(accepted.size());
      while (chosen[i]) i = (i + 1) % accepted.size();
      chosen[i] = 1;
    }
    for (size_t i = 0; i < accepted.size(); ++i)
      if (chosen[i]) out.morphisms.push_back(from_table(x, y, std::move(accepted[i])));
    return out;
  }

  // Hom-set too large to scan: sample raw tables.
  out.truncated = true;
  Rng rng(seed);
  int attempts = cap * 64;
  while (static_cast<int>(out.morphisms.size()) < cap && attempts-- > 0) {
    std::vector<int> t(dn);
    for (int i = 0; i < dn; ++i)
      t[i] = (opt_.maps == Maps::Partial) ? static_cast<int>(rng.below(base)) - 1
                                          : static_cast<int>(rng.below(base));
    if (accept(t)) out.morphisms.push_back(from_table(x, y, std::move(t)));
  }
  std::sort(out.morphisms.begin(), out.morphisms.end(), morphism_less);
  out.morphisms.erase(std::unique(out.morphisms.begin(), out.morphisms.end()),
                      out.morphisms.end());
  return out;
}

std::optional<bool> TableCategory::hom_leq(const Morphism& f, const Morphism& g) const {
  if (!opt_.enriched) return std::nullopt;
  if (f.dom != g.dom || f.cod != g.cod)
    throw Error(ErrorKind::NotParallel, "hom_leq on non-parallel arrows");
  const auto tf = table_of(f, "hom_leq lhs");
  const auto tg = table_of(g, "hom_leq rhs");
  if (opt_.maps == Maps::Partial) {
    // Definedness order: f <= g iff g extends f.
    for (size_t i = 0; i < tf.size(); ++i)
      if (tf[i] >= 0 && tf[i] != tg[i]) return false;
    return true;
  }
  const Carrier cc = carrier(f.cod);
  for (size_t i = 0; i < tf.size(); ++i)
    if (!cc.le(tf[i], tg[i])) return false;
  return true;
}

nlohmann::json TableCategory::manifest() const {
  nlohmann::json j;
  j["kind"] = opt_.kind;
  j["sorts"] = sorts_manifest_;
  if (opt_.require_monotone) {
    nlohmann::json orders = nlohmann::json::object();
    for (const auto& s : sorts_) {
      const Carrier& c = sort_carrier(s);
      nlohmann::json pairs = nlohmann::json::array();
      for (int a = 0; a < c.size(); ++a)
        for (int b = 0; b < c.size(); ++b)
          if (c.le(a, b)) pairs.push_back({c.labels[a], c.labels[b]});
      orders[s] = pairs;
    }
    j["orders"] = orders;
  }
  return j;
}

}  // namespace gsmon
