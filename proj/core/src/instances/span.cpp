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

#include "gsmon/instances/span_model.hpp"

#include <algorithm>
#include <functional>

namespace gsmon {

SpanData canonical_span(SpanData s) {
  std::vector<std::pair<int, int>> legs(s.apex);
  for (int a = 0; a < s.apex; ++a) legs[a] = {s.left[a], s.right[a]};
  std::sort(legs.begin(), legs.end());
  for (int a = 0; a < s.apex; ++a) {
    s.left[a] = legs[a].first;
    s.right[a] = legs[a].second;
  }
  return s;
}

SpanData span_compose_data(const SpanData& s, const SpanData& t) {
  SpanData out;
  out.dom_size = s.dom_size;
  out.cod_size = t.cod_size;
  for (int a = 0; a < s.apex; ++a)
    for (int b = 0; b < t.apex; ++b)
      if (s.right[a] == t.left[b]) {
        out.left.push_back(s.left[a]);
        out.right.push_back(t.right[b]);
      }
  out.apex = static_cast<int>(out.left.size());
  return canonical_span(std::move(out));
}

bool span_leq_data(const SpanData& s, const SpanData& t) {
  // A mediating function need not be injective, so existence reduces to
  // each leg pair of s occurring somewhere in t.
  for (int a = 0; a < s.apex; ++a) {
    bool found = false;
    for (int b = 0; b < t.apex && !found; ++b)
      found = s.left[a] == t.left[b] && s.right[a] == t.right[b];
    if (!found) return false;
  }
  return true;
}

RelPairs rel_from_span_data(const SpanData& s) {
  RelPairs out;
  out.dom_size = s.dom_size;
  out.cod_size = s.cod_size;
  for (int a = 0; a < s.apex; ++a) out.pairs.emplace_back(s.left[a], s.right[a]);
  out.normalize();
  return out;
}

SpanModel::SpanModel(TensorKind kind, std::vector<std::pair<std::string, Carrier>> sorts,
                     int apex_cap)
    : kind_(kind), apex_cap_(apex_cap) {
  name_ = kind == TensorKind::Product ? "span_x" : "span_plus";
  // Only the product-tensor spans carry the 2-cell preorder in this
  // workbench; it is a genuine preorder, not a poset.
  enriched_ = kind == TensorKind::Product;
  posetal_ = false;
  sorts_manifest_ = nlohmann::json::object();
  for (auto& [s, c] : sorts) {
    sorts_.push_back(s);
    sorts_manifest_[s] = c.labels;
    carriers_.emplace(s, std::move(c));
  }
}

Carrier SpanModel::carrier(const ObjectExpr& x) const {
  std::vector<const Carrier*> parts;
  for (const auto& s : x.word) {
    auto it = carriers_.find(s);
    if (it == carriers_.end())
      throw Error(ErrorKind::UnknownName, "sort '" + s + "' in model '" + name_ + "'");
    parts.push_back(&it->second);
  }
  return kind_ == TensorKind::Product ? product_carrier(parts) : sum_carrier(parts);
}

Morphism SpanModel::span(const ObjectExpr& dom, const ObjectExpr& cod, SpanData s) const {
  Morphism m;
  m.dom = dom;
  m.cod = cod;
  m.payload = canonical_span(std::move(s));
  return m;
}

Morphism SpanModel::identity(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  SpanData s;
  s.apex = n;
  s.dom_size = s.cod_size = n;
  for (int i = 0; i < n; ++i) {
    s.left.push_back(i);
    s.right.push_back(i);
  }
  return span(x, x, std::move(s));
}

Morphism SpanModel::compose(const Morphism& f, const Morphism& g) const {
  if (f.cod != g.dom) throw Error(ErrorKind::TypeMismatch, "compose endpoint mismatch");
  Morphism m;
  m.dom = f.dom;
  m.cod = g.cod;
  m.payload = span_compose_data(std::get<SpanData>(f.payload), std::get<SpanData>(g.payload));
  return m;
}

Morphism SpanModel::tensor(const Morphism& f, const Morphism& g) const {
  const auto& a = std::get<SpanData>(f.payload);
  const auto& b = std::get<SpanData>(g.payload);
  SpanData s;
  if (kind_ == TensorKind::Product) {
    s.dom_size = a.dom_size * b.dom_size;
    s.cod_size = a.cod_size * b.cod_size;
    s.apex = a.apex * b.apex;
    for (int i = 0; i < a.apex; ++i)
      for (int j = 0; j < b.apex; ++j) {
        s.left.push_back(a.left[i] * b.dom_size + b.left[j]);
        s.right.push_back(a.right[i] * b.cod_size + b.right[j]);
      }
  } else {
    s.dom_size = a.dom_size + b.dom_size;
    s.cod_size = a.cod_size + b.cod_size;
    s.apex = a.apex + b.apex;
    for (int i = 0; i < a.apex; ++i) {
      s.left.push_back(a.left[i]);
      s.right.push_back(a.right[i]);
    }
    for (int j = 0; j < b.apex; ++j) {
      s.left.push_back(a.dom_size + b.left[j]);
      s.right.push_back(a.cod_size + b.right[j]);
    }
  }
  return span(f.dom * g.dom, f.cod * g.cod, std::move(s));
}

Morphism SpanModel::symmetry(const ObjectExpr& x, const ObjectExpr& y) const {
  const int nx = carrier(x).size(), ny = carrier(y).size();
  SpanData s;
  if (kind_ == TensorKind::Product) {
    s.apex = nx * ny;
    s.dom_size = s.cod_size = nx * ny;
    for (int a = 0; a < nx; ++a)
      for (int b = 0; b < ny; ++b) {
        s.left.push_back(a * ny + b);
        s.right.push_back(b * nx + a);
      }
  } else {
    s.apex = nx + ny;
    s.dom_size = s.cod_size = nx + ny;
    for (int i = 0; i < nx + ny; ++i) {
      s.left.push_back(i);
      s.right.push_back(i < nx ? ny + i : i - nx);
    }
  }
  return span(x * y, y * x, std::move(s));
}

std::optional<Morphism> SpanModel::copy(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  SpanData s;
  if (kind_ == TensorKind::Product) {
    s.apex = n;
    s.dom_size = n;
    s.cod_size = n * n;
    for (int i = 0; i < n; ++i) {
      s.left.push_back(i);
      s.right.push_back(i * n + i);
    }
  } else {
    s.apex = 2 * n;
    s.dom_size = n;
    s.cod_size = 2 * n;
    for (int i = 0; i < 2 * n; ++i) {
      s.left.push_back(i % n);
      s.right.push_back(i);
    }
  }
  return span(x, x * x, std::move(s));
}

std::optional<Morphism> SpanModel::discard(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  SpanData s;
  if (kind_ == TensorKind::Product) {
    s.apex = n;
    s.dom_size = n;
    s.cod_size = 1;
    for (int i = 0; i < n; ++i) {
      s.left.push_back(i);
      s.right.push_back(0);
    }
  } else {
    s.apex = 0;
    s.dom_size = n;
    s.cod_size = 0;
  }
  return span(x, ObjectExpr::unit(), std::move(s));
}

std::optional<Morphism> SpanModel::cocopy(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  SpanData s;
  if (kind_ == TensorKind::Product) {
    s.apex = n;
    s.dom_size = n * n;
    s.cod_size = n;
    for (int i = 0; i < n; ++i) {
      s.left.push_back(i * n + i);
      s.right.push_back(i);
    }
  } else {
    s.apex = 2 * n;
    s.dom_size = 2 * n;
    s.cod_size = n;
    for (int i = 0; i < 2 * n; ++i) {
      s.left.push_back(i);
      s.right.push_back(i % n);
    }
  }
  return span(x * x, x, std::move(s));
}

std::optional<Morphism> SpanModel::codischarge(const ObjectExpr& x) const {
  const int n = carrier(x).size();
  SpanData s;
  if (kind_ == TensorKind::Product) {
    s.apex = n;
    s.dom_size = 1;
    s.cod_size = n;
    for (int i = 0; i < n; ++i) {
      s.left.push_back(0);
      s.right.push_back(i);
    }
  } else {
    s.apex = 0;
    s.dom_size = 0;
    s.cod_size = n;
  }
  return span(ObjectExpr::unit(), x, std::move(s));
}

std::optional<CategoryModel::HomEnum> SpanModel::hom_enumerate(const ObjectExpr& x,
                                                               const ObjectExpr& y, int cap,
                                                               uint64_t seed) const {
  (void)seed;
  const int dn = carrier(x).size(), cn = carrier(y).size();
  HomEnum out;
  out.truncated = true;  // spans with larger apexes always exist
  const int pair_count = dn * cn;
  // Canonical spans with apex <= apex_cap are exactly the sorted multisets
  // of leg pairs; enumerate them in lexicographic order.
  std::vector<std::pair<int, int>> all_pairs;
  for (int l = 0; l < dn; ++l)
    for (int r = 0; r < cn; ++r) all_pairs.emplace_back(l, r);
  std::vector<int> pick;
  auto emit = [&]() {
    SpanData s;
    s.apex = static_cast<int>(pick.size());
    s.dom_size = dn;
    s.cod_size = cn;
    for (int p : pick) {
      s.left.push_back(all_pairs[p].first);
      s.right.push_back(all_pairs[p].second);
    }
    out.morphisms.push_back(span(x, y, std::move(s)));
  };
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (static_cast<int>(out.morphisms.size()) >= cap) return;
    emit();
    if (remaining == 0) return;
    for (int p = start; p < pair_count; ++p) {
      pick.push_back(p);
      rec(p, remaining - 1);
      pick.pop_back();
      if (static_cast<int>(out.morphisms.size()) >= cap) return;
    }
  };
  rec(0, apex_cap_);
  return out;
}

std::optional<bool> SpanModel::hom_leq(const Morphism& f, const Morphism& g) const {
  if (!enriched_) return std::nullopt;
  if (f.dom != g.dom || f.cod != g.cod)
    throw Error(ErrorKind::NotParallel, "hom_leq on non-parallel arrows");
  return span_leq_data(std::get<SpanData>(f.payload), std::get<SpanData>(g.payload));
}

nlohmann::json SpanModel::manifest() const {
  return {{"kind", kind_ == TensorKind::Product ? "span_x" : "span_plus"},
          {"sorts", sorts_manifest_},
          {"apex_cap", apex_cap_}};
}

}  // namespace gsmon
