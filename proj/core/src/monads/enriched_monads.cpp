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
//
// Monads over finite preorders and posets: the Hoare powerset, the down-set
// monad, and the upward-sum ordering of the semiring monad.

#include <algorithm>

#include "gsmon/monads/monads.hpp"

namespace gsmon {

namespace {

constexpr int kMaxSubsetGround = 16;

std::string mask_label(const Carrier& c, uint64_t mask) {
  std::string l = "{";
  bool first = true;
  for (int i = 0; i < c.size(); ++i)
    if (mask >> i & 1) {
      if (!first) l += ",";
      l += c.labels[i];
      first = false;
    }
  return l + "}";
}

// U <=_d V iff every element of U is below some element of V.
bool hoare_le(const Carrier& c, uint64_t u, uint64_t v) {
  for (int a = 0; a < c.size(); ++a) {
    if (!(u >> a & 1)) continue;
    bool dominated = false;
    for (int b = 0; b < c.size() && !dominated; ++b)
      if ((v >> b & 1) && c.le(a, b)) dominated = true;
    if (!dominated) return false;
  }
  return true;
}

bool down_closed(const Carrier& c, uint64_t mask) {
  for (int a = 0; a < c.size(); ++a)
    for (int b = 0; b < c.size(); ++b)
      if ((mask >> b & 1) && c.le(a, b) && !(mask >> a & 1)) return false;
  return true;
}

uint64_t down_closure(const Carrier& c, uint64_t mask) {
  uint64_t out = mask;
  for (int a = 0; a < c.size(); ++a)
    for (int b = 0; b < c.size(); ++b)
      if ((mask >> b & 1) && c.le(a, b)) out |= 1ULL << a;
  return out;
}

Carrier subset_carrier(const Carrier& ground, const std::vector<uint64_t>& masks,
                       const std::function<bool(uint64_t, uint64_t)>& le) {
  Carrier c;
  c.labels.reserve(masks.size());
  for (uint64_t m : masks) c.labels.push_back(mask_label(ground, m));
  c.ordered = true;
  const int n = static_cast<int>(masks.size());
  c.leq.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.leq[i * n + j] = le(masks[i], masks[j]) ? 1 : 0;
  return c;
}

std::vector<uint64_t> all_masks(const Carrier& ground,
                                const std::function<bool(uint64_t)>& keep) {
  if (ground.size() > kMaxSubsetGround)
    throw Error(ErrorKind::CarrierTooLarge, "powerset over carrier of size " +
                                                std::to_string(ground.size()));
  std::vector<uint64_t> out;
  for (uint64_t m = 0; m < (1ULL << ground.size()); ++m)
    if (keep(m)) out.push_back(m);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Hoare powerset
// ---------------------------------------------------------------------------

HoarePowersetMonad::HoarePowersetMonad(std::shared_ptr<const TableCategory> base)
    : table_(std::move(base)) {
  if (!table_ || table_->maps() != TableCategory::Maps::Total || !table_->monotone_only())
    throw Error(ErrorKind::UnsupportedCapability, "hoare_powerset needs a preorder base");
  base_ = table_;
  name_ = "hoare_powerset";
}

std::vector<uint64_t> HoarePowersetMonad::t_masks(const ObjectExpr& x) const {
  const Carrier ground = table_->carrier(x);
  return all_masks(ground, [](uint64_t) { return true; });
}

ObjectExpr HoarePowersetMonad::t_obj(const ObjectExpr& x) const {
  const std::string sort = name_ + "(" + x.str() + ")";
  table_->ensure_sort(sort, [&]() {
    const Carrier ground = table_->carrier(x);
    auto masks = t_masks(x);
    return subset_carrier(ground, masks,
                          [&](uint64_t u, uint64_t v) { return hoare_le(ground, u, v); });
  });
  return ObjectExpr::sort(sort);
}

Morphism HoarePowersetMonad::t_arr(const Morphism& f) const {
  const auto& t = std::get<FunTable>(f.payload);
  const ObjectExpr td = t_obj(f.dom), tc = t_obj(f.cod);
  const auto dom_masks = t_masks(f.dom);
  const auto cod_masks = t_masks(f.cod);
  FunTable out;
  out.cod_size = static_cast<int>(cod_masks.size());
  for (uint64_t u : dom_masks) {
    uint64_t img = 0;
    for (size_t x = 0; x < t.map.size(); ++x)
      if (u >> x & 1) img |= 1ULL << t.map[x];
    const auto it = std::find(cod_masks.begin(), cod_masks.end(), img);
    out.map.push_back(static_cast<int>(it - cod_masks.begin()));
  }
  return Morphism{td, tc, std::move(out)};
}

Morphism HoarePowersetMonad::eta(const ObjectExpr& x) const {
  const ObjectExpr tx = t_obj(x);
  const auto masks = t_masks(x);
  const int n = table_->carrier(x).size();
  FunTable out;
  out.cod_size = static_cast<int>(masks.size());
  for (int e = 0; e < n; ++e) {
    const uint64_t m = 1ULL << e;
    out.map.push_back(static_cast<int>(std::find(masks.begin(), masks.end(), m) - masks.begin()));
  }
  return Morphism{x, tx, std::move(out)};
}

Morphism HoarePowersetMonad::mu(const ObjectExpr& x) const {
  const ObjectExpr tx = t_obj(x);
  const ObjectExpr ttx = t_obj(tx);
  const auto inner = t_masks(x);
  const auto outer = t_masks(tx);
  FunTable out;
  out.cod_size = static_cast<int>(inner.size());
  for (uint64_t fam : outer) {
    uint64_t un = 0;
    for (size_t h = 0; h < inner.size(); ++h)
      if (fam >> h & 1) un |= inner[h];
    out.map.push_back(static_cast<int>(std::find(inner.begin(), inner.end(), un) - inner.begin()));
  }
  return Morphism{ttx, tx, std::move(out)};
}

Morphism HoarePowersetMonad::lax_c(const ObjectExpr& x, const ObjectExpr& y) const {
  const ObjectExpr tx = t_obj(x), ty = t_obj(y);
  const ObjectExpr txy = t_obj(x * y);
  const auto mx = t_masks(x);
  const auto my = t_masks(y);
  const auto mxy = t_masks(x * y);
  const int ny = table_->carrier(y).size();
  FunTable out;
  out.cod_size = static_cast<int>(mxy.size());
  for (uint64_t u : mx)
    for (uint64_t v : my) {
      uint64_t prod = 0;
      for (int a = 0; a < 64 && (u >> a); ++a)
        if (u >> a & 1)
          for (int b = 0; b < ny; ++b)
            if (v >> b & 1) prod |= 1ULL << (a * ny + b);
      out.map.push_back(
          static_cast<int>(std::find(mxy.begin(), mxy.end(), prod) - mxy.begin()));
    }
  return Morphism{tx * ty, txy, std::move(out)};
}

Morphism HoarePowersetMonad::kleisli_compose(const Morphism& f, const Morphism& g,
                                             const ObjectExpr& cod) const {
  // (g . f)(x) = union of g(y) over y in f(x).
  const auto& tf = std::get<FunTable>(f.payload);
  const auto& tg = std::get<FunTable>(g.payload);
  const auto my = t_masks(g.dom);
  const auto mz = t_masks(cod);
  FunTable out;
  out.cod_size = static_cast<int>(mz.size());
  for (size_t x = 0; x < tf.map.size(); ++x) {
    uint64_t acc = 0;
    const uint64_t u = my[tf.map[x]];
    for (size_t y = 0; y < my.size() && false; ++y) (void)y;
    for (size_t y = 0; y < tg.map.size(); ++y)
      if (u >> y & 1) acc |= mz[tg.map[y]];
    out.map.push_back(static_cast<int>(std::find(mz.begin(), mz.end(), acc) - mz.begin()));
  }
  return Morphism{f.dom, t_obj(cod), std::move(out)};
}

// ---------------------------------------------------------------------------
// Down-set monad
// ---------------------------------------------------------------------------

DownsetMonad::DownsetMonad(std::shared_ptr<const TableCategory> base) : table_(std::move(base)) {
  if (!table_ || table_->maps() != TableCategory::Maps::Total || !table_->monotone_only())
    throw Error(ErrorKind::UnsupportedCapability, "downset monad needs a poset base");
  base_ = table_;
  name_ = "downset";
}

std::vector<uint64_t> DownsetMonad::t_masks(const ObjectExpr& x) const {
  const Carrier ground = table_->carrier(x);
  return all_masks(ground, [&](uint64_t m) { return down_closed(ground, m); });
}

ObjectExpr DownsetMonad::t_obj(const ObjectExpr& x) const {
  const std::string sort = name_ + "(" + x.str() + ")";
  table_->ensure_sort(sort, [&]() {
    const Carrier ground = table_->carrier(x);
    auto masks = t_masks(x);
    return subset_carrier(ground, masks,
                          [](uint64_t u, uint64_t v) { return (u & ~v) == 0; });
  });
  return ObjectExpr::sort(sort);
}

Morphism DownsetMonad::t_arr(const Morphism& f) const {
  const auto& t = std::get<FunTable>(f.payload);
  const ObjectExpr td = t_obj(f.dom), tc = t_obj(f.cod);
  const Carrier cod_ground = table_->carrier(f.cod);
  const auto dom_masks = t_masks(f.dom);
  const auto cod_masks = t_masks(f.cod);
  FunTable out;
  out.cod_size = static_cast<int>(cod_masks.size());
  for (uint64_t u : dom_masks) {
    uint64_t img = 0;
    for (size_t x = 0; x < t.map.size(); ++x)
      if (u >> x & 1) img |= 1ULL << t.map[x];
    img = down_closure(cod_ground, img);
    out.map.push_back(
        static_cast<int>(std::find(cod_masks.begin(), cod_masks.end(), img) - cod_masks.begin()));
  }
  return Morphism{td, tc, std::move(out)};
}

Morphism DownsetMonad::eta(const ObjectExpr& x) const {
  const ObjectExpr tx = t_obj(x);
  const Carrier ground = table_->carrier(x);
  const auto masks = t_masks(x);
  FunTable out;
  out.cod_size = static_cast<int>(masks.size());
  for (int e = 0; e < ground.size(); ++e) {
    const uint64_t m = down_closure(ground, 1ULL << e);
    out.map.push_back(static_cast<int>(std::find(masks.begin(), masks.end(), m) - masks.begin()));
  }
  return Morphism{x, tx, std::move(out)};
}

Morphism DownsetMonad::mu(const ObjectExpr& x) const {
  const ObjectExpr tx = t_obj(x);
  const ObjectExpr ttx = t_obj(tx);
  const auto inner = t_masks(x);
  const auto outer = t_masks(tx);
  FunTable out;
  out.cod_size = static_cast<int>(inner.size());
  for (uint64_t fam : outer) {
    uint64_t un = 0;
    for (size_t h = 0; h < inner.size(); ++h)
      if (fam >> h & 1) un |= inner[h];
    out.map.push_back(static_cast<int>(std::find(inner.begin(), inner.end(), un) - inner.begin()));
  }
  return Morphism{ttx, tx, std::move(out)};
}

Morphism DownsetMonad::lax_c(const ObjectExpr& x, const ObjectExpr& y) const {
  const ObjectExpr tx = t_obj(x), ty = t_obj(y);
  const ObjectExpr txy = t_obj(x * y);
  const auto mx = t_masks(x);
  const auto my = t_masks(y);
  const auto mxy = t_masks(x * y);
  const int ny = table_->carrier(y).size();
  FunTable out;
  out.cod_size = static_cast<int>(mxy.size());
  for (uint64_t u : mx)
    for (uint64_t v : my) {
      uint64_t prod = 0;
      for (int a = 0; a < 64 && (u >> a); ++a)
        if (u >> a & 1)
          for (int b = 0; b < ny; ++b)
            if (v >> b & 1) prod |= 1ULL << (a * ny + b);
      out.map.push_back(
          static_cast<int>(std::find(mxy.begin(), mxy.end(), prod) - mxy.begin()));
    }
  return Morphism{tx * ty, txy, std::move(out)};
}

// ---------------------------------------------------------------------------
// Upweight monad
// ---------------------------------------------------------------------------

namespace {

bool upweight_variant(const Semiring& s, SemiringVariant v, const std::vector<int>& vec) {
  // With zero minimal the sub-idempotent class needs no support bound.
  switch (v) {
    case SemiringVariant::Full: return true;
    case SemiringVariant::E:
      return satisfies(s, ElementPredicate::SupportAtMostOne, vec) &&
             satisfies(s, ElementPredicate::Idempotent, vec);
    case SemiringVariant::U: return satisfies(s, ElementPredicate::NormalisedRow, vec);
    case SemiringVariant::ESub: return satisfies(s, ElementPredicate::SubIdempotent, vec);
    case SemiringVariant::USub: return satisfies(s, ElementPredicate::SubNormalised, vec);
  }
  return false;
}

std::string weight_label(const Semiring& s, const std::vector<int>& vec) {
  std::string l = "w(";
  for (size_t i = 0; i < vec.size(); ++i) {
    if (i) l += ",";
    l += s.label(vec[i]);
  }
  return l + ")";
}

std::vector<uint64_t> upward_closed_masks(const Carrier& c) {
  std::vector<uint64_t> out;
  if (c.size() > kMaxSubsetGround)
    throw Error(ErrorKind::CarrierTooLarge, "too many upward-closed subsets");
  for (uint64_t m = 0; m < (1ULL << c.size()); ++m) {
    bool up = true;
    for (int a = 0; a < c.size() && up; ++a)
      for (int b = 0; b < c.size() && up; ++b)
        if ((m >> a & 1) && c.le(a, b) && !(m >> b & 1)) up = false;
    if (up) out.push_back(m);
  }
  return out;
}

}  // namespace

UpweightMonad::UpweightMonad(std::shared_ptr<const TableCategory> base, Semiring semiring,
                             SemiringVariant variant)
    : table_(std::move(base)), semiring_(std::move(semiring)), variant_(variant) {
  if (!table_ || table_->maps() != TableCategory::Maps::Total || !table_->monotone_only())
    throw Error(ErrorKind::UnsupportedCapability, "upweight monad needs a preorder base");
  if (!semiring_.zero_minimal())
    throw Error(ErrorKind::OrderIncompatible, "upweight needs zero minimal in the semiring order");
  base_ = table_;
  name_ = "upweight{" + semiring_.name() + ":" + to_string(variant_) + "}";
}

std::vector<std::vector<int>> UpweightMonad::vectors_over(const Carrier& c) const {
  double total = 1;
  for (int i = 0; i < c.size(); ++i) {
    total *= semiring_.size();
    if (total > 2e6) throw Error(ErrorKind::CarrierTooLarge, "weight-vector carrier too large");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> v(c.size(), 0);
  while (true) {
    if (upweight_variant(semiring_, variant_, v)) out.push_back(v);
    int i = c.size() - 1;
    for (; i >= 0; --i) {
      if (++v[i] < semiring_.size()) break;
      v[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<std::vector<int>> UpweightMonad::t_vectors(const ObjectExpr& x) const {
  return vectors_over(table_->carrier(x));
}

ObjectExpr UpweightMonad::t_obj(const ObjectExpr& x) const {
  const std::string sort = name_ + "(" + x.str() + ")";
  table_->ensure_sort(sort, [&]() {
    const Carrier ground = table_->carrier(x);
    const auto vecs = vectors_over(ground);
    const auto ups = upward_closed_masks(ground);
    Carrier c;
    for (const auto& v : vecs) c.labels.push_back(weight_label(semiring_, v));
    c.ordered = true;
    const int n = static_cast<int>(vecs.size());
    c.leq.assign(static_cast<size_t>(n) * n, 0);
    auto up_sum = [&](const std::vector<int>& h, uint64_t mask) {
      int s = semiring_.zero();
      for (int e = 0; e < ground.size(); ++e)
        if (mask >> e & 1) s = semiring_.add(s, h[e]);
      return s;
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool le = true;
        for (uint64_t u : ups) {
          if (!semiring_.leq(up_sum(vecs[i], u), up_sum(vecs[j], u))) {
            le = false;
            break;
          }
        }
        c.leq[i * n + j] = le ? 1 : 0;
      }
    return c;
  });
  return ObjectExpr::sort(sort);
}

Morphism UpweightMonad::t_arr(const Morphism& f) const {
  const auto& t = std::get<FunTable>(f.payload);
  const ObjectExpr td = t_obj(f.dom), tc = t_obj(f.cod);
  const auto dom_vecs = t_vectors(f.dom);
  const auto cod_vecs = t_vectors(f.cod);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < cod_vecs.size(); ++i) index.emplace(cod_vecs[i], static_cast<int>(i));
  FunTable out;
  out.cod_size = static_cast<int>(cod_vecs.size());
  for (const auto& h : dom_vecs) {
    std::vector<int> img(t.cod_size, semiring_.zero());
    for (size_t x = 0; x < h.size(); ++x) img[t.map[x]] = semiring_.add(img[t.map[x]], h[x]);
    auto it = index.find(img);
    if (it == index.end()) {
      nlohmann::json w = nlohmann::json::array();
      for (int e : img) w.push_back(semiring_.label(e));
      throw Error(ErrorKind::VariantNotClosed, "T(f) leaves upweight variant", w);
    }
    out.map.push_back(it->second);
  }
  return Morphism{td, tc, std::move(out)};
}

Morphism UpweightMonad::eta(const ObjectExpr& x) const {
  const ObjectExpr tx = t_obj(x);
  const auto vecs = t_vectors(x);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < vecs.size(); ++i) index.emplace(vecs[i], static_cast<int>(i));
  const int n = table_->carrier(x).size();
  FunTable out;
  out.cod_size = static_cast<int>(vecs.size());
  for (int e = 0; e < n; ++e) {
    std::vector<int> dirac(n, semiring_.zero());
    dirac[e] = semiring_.one();
    out.map.push_back(index.at(dirac));
  }
  return Morphism{x, tx, std::move(out)};
}

Morphism UpweightMonad::mu(const ObjectExpr& x) const {
  const ObjectExpr tx = t_obj(x);
  const ObjectExpr ttx = t_obj(tx);
  const auto inner = t_vectors(x);
  const auto outer = t_vectors(tx);
  const int n = table_->carrier(x).size();
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < inner.size(); ++i) index.emplace(inner[i], static_cast<int>(i));
  FunTable out;
  out.cod_size = static_cast<int>(inner.size());
  for (const auto& lam : outer) {
    std::vector<int> flat(n, semiring_.zero());
    for (size_t h = 0; h < lam.size(); ++h)
      for (int e = 0; e < n; ++e)
        flat[e] = semiring_.add(flat[e], semiring_.mul(lam[h], inner[h][e]));
    auto it = index.find(flat);
    if (it == index.end()) {
      nlohmann::json w = nlohmann::json::array();
      for (int e : flat) w.push_back(semiring_.label(e));
      throw Error(ErrorKind::VariantNotClosed, "mu leaves upweight variant", w);
    }
    out.map.push_back(it->second);
  }
  return Morphism{ttx, tx, std::move(out)};
}

Morphism UpweightMonad::lax_c(const ObjectExpr& x, const ObjectExpr& y) const {
  const ObjectExpr tx = t_obj(x), ty = t_obj(y);
  const ObjectExpr txy = t_obj(x * y);
  const auto hx = t_vectors(x);
  const auto hy = t_vectors(y);
  const auto hxy = t_vectors(x * y);
  const int ny = table_->carrier(y).size();
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < hxy.size(); ++i) index.emplace(hxy[i], static_cast<int>(i));
  FunTable out;
  out.cod_size = static_cast<int>(hxy.size());
  for (const auto& h : hx)
    for (const auto& k : hy) {
      std::vector<int> prod(h.size() * k.size(), semiring_.zero());
      for (size_t a = 0; a < h.size(); ++a)
        for (size_t b = 0; b < k.size(); ++b) prod[a * ny + b] = semiring_.mul(h[a], k[b]);
      auto it = index.find(prod);
      if (it == index.end()) {
        nlohmann::json w = nlohmann::json::array();
        for (int e : prod) w.push_back(semiring_.label(e));
        throw Error(ErrorKind::VariantNotClosed, "c leaves upweight variant", w);
      }
      out.map.push_back(it->second);
    }
  return Morphism{tx * ty, txy, std::move(out)};
}

nlohmann::json UpweightMonad::manifest() const {
  return {{"kind", "upweight"},
          {"semiring", semiring_.name().empty() ? nlohmann::json(semiring_.to_json())
                                                : nlohmann::json(semiring_.name())},
          {"variant", to_string(variant_)}};
}

}  // namespace gsmon
