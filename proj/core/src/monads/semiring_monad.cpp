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

#include "gsmon/monads/monads.hpp"

namespace gsmon {

const char* to_string(SemiringVariant v) {
  switch (v) {
    case SemiringVariant::Full: return "full";
    case SemiringVariant::E: return "e";
    case SemiringVariant::U: return "u";
    case SemiringVariant::ESub: return "e_sub";
    case SemiringVariant::USub: return "u_sub";
  }
  return "?";
}

SemiringVariant semiring_variant_from_name(const std::string& name) {
  if (name == "full") return SemiringVariant::Full;
  if (name == "e") return SemiringVariant::E;
  if (name == "u") return SemiringVariant::U;
  if (name == "e_sub") return SemiringVariant::ESub;
  if (name == "u_sub") return SemiringVariant::USub;
  throw Error(ErrorKind::UnknownKind, "semiring monad variant '" + name + "'");
}

namespace {

bool variant_holds(const Semiring& s, SemiringVariant v, const std::vector<int>& vec,
                   bool drop_support_bound) {
  switch (v) {
    case SemiringVariant::Full:
      return true;
    case SemiringVariant::E:
      return satisfies(s, ElementPredicate::SupportAtMostOne, vec) &&
             satisfies(s, ElementPredicate::Idempotent, vec);
    case SemiringVariant::U:
      return satisfies(s, ElementPredicate::NormalisedRow, vec);
    case SemiringVariant::ESub:
      return (drop_support_bound ||
              satisfies(s, ElementPredicate::SupportAtMostOne, vec)) &&
             satisfies(s, ElementPredicate::SubIdempotent, vec);
    case SemiringVariant::USub:
      return satisfies(s, ElementPredicate::SubNormalised, vec);
  }
  return false;
}

std::string vector_label(const Semiring& s, const std::vector<int>& vec) {
  std::string l = "w(";
  for (size_t i = 0; i < vec.size(); ++i) {
    if (i) l += ",";
    l += s.label(vec[i]);
  }
  return l + ")";
}

std::vector<std::vector<int>> all_vectors(const Semiring& s, int n,
                                          const std::function<bool(const std::vector<int>&)>& keep) {
  double total = 1;
  for (int i = 0; i < n; ++i) {
    total *= s.size();
    if (total > 2e6) throw Error(ErrorKind::CarrierTooLarge, "weight-vector carrier too large");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, 0);
  while (true) {
    if (keep(v)) out.push_back(v);
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++v[i] < s.size()) break;
      v[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

SemiringMonad::SemiringMonad(std::shared_ptr<const TableCategory> base, Semiring semiring,
                             SemiringVariant variant)
    : table_(std::move(base)), semiring_(std::move(semiring)), variant_(variant) {
  if (!table_ || table_->maps() != TableCategory::Maps::Total)
    throw Error(ErrorKind::UnsupportedCapability, "semiring monad needs a finite-set base");
  base_ = table_;
  name_ = "semiring{" + semiring_.name() + ":" + to_string(variant) + "}";
}

std::vector<std::vector<int>> SemiringMonad::vectors_over(int n) const {
  return all_vectors(semiring_, n, [&](const std::vector<int>& v) {
    return variant_holds(semiring_, variant_, v, false);
  });
}

void SemiringMonad::check_member(const std::vector<int>& vec, const char* produced_by) const {
  if (!variant_holds(semiring_, variant_, vec, false)) {
    nlohmann::json w = nlohmann::json::array();
    for (int e : vec) w.push_back(semiring_.label(e));
    throw Error(ErrorKind::VariantNotClosed,
                std::string(produced_by) + " leaves variant " + to_string(variant_), w);
  }
}

std::vector<std::vector<int>> SemiringMonad::t_vectors(const ObjectExpr& x) const {
  return vectors_over(table_->carrier(x).size());
}

ObjectExpr SemiringMonad::t_obj(const ObjectExpr& x) const {
  const std::string sort = name_ + "(" + x.str() + ")";
  table_->ensure_sort(sort, [&]() {
    auto vecs = vectors_over(table_->carrier(x).size());
    std::vector<std::string> labels;
    labels.reserve(vecs.size());
    for (const auto& v : vecs) labels.push_back(vector_label(semiring_, v));
    return Carrier::discrete(std::move(labels));
  });
  return ObjectExpr::sort(sort);
}

Morphism SemiringMonad::t_arr(const Morphism& f) const {
  const auto& t = std::get<FunTable>(f.payload);
  const ObjectExpr tdom = t_obj(f.dom), tcod = t_obj(f.cod);
  const auto dom_vecs = t_vectors(f.dom);
  const auto cod_vecs = t_vectors(f.cod);
  const int cod_n = t.cod_size;
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < cod_vecs.size(); ++i) index.emplace(cod_vecs[i], static_cast<int>(i));
  FunTable out;
  out.cod_size = static_cast<int>(cod_vecs.size());
  for (const auto& h : dom_vecs) {
    std::vector<int> img(cod_n, semiring_.zero());
    for (size_t x = 0; x < h.size(); ++x) img[t.map[x]] = semiring_.add(img[t.map[x]], h[x]);
    check_member(img, "T(f)");
    out.map.push_back(index.at(img));
  }
  return Morphism{tdom, tcod, std::move(out)};
}

Morphism SemiringMonad::eta(const ObjectExpr& x) const {
  const ObjectExpr tx = t_obj(x);
  const int n = table_->carrier(x).size();
  const auto vecs = t_vectors(x);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < vecs.size(); ++i) index.emplace(vecs[i], static_cast<int>(i));
  FunTable out;
  out.cod_size = static_cast<int>(vecs.size());
  for (int e = 0; e < n; ++e) {
    std::vector<int> dirac(n, semiring_.zero());
    dirac[e] = semiring_.one();
    check_member(dirac, "eta");
    out.map.push_back(index.at(dirac));
  }
  return Morphism{x, tx, std::move(out)};
}

Morphism SemiringMonad::mu(const ObjectExpr& x) const {
  const ObjectExpr tx = t_obj(x);
  const ObjectExpr ttx = t_obj(tx);
  const auto inner = t_vectors(x);       // elements of T(X)
  const auto outer = t_vectors(tx);      // elements of TT(X)
  const int n = inner.empty() ? table_->carrier(x).size() : static_cast<int>(inner[0].size());
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < inner.size(); ++i) index.emplace(inner[i], static_cast<int>(i));
  FunTable out;
  out.cod_size = static_cast<int>(inner.size());
  for (const auto& lam : outer) {
    std::vector<int> flat(n, semiring_.zero());
    for (size_t h = 0; h < lam.size(); ++h) {
      if (lam[h] == semiring_.zero()) continue;
      for (int e = 0; e < n; ++e)
        flat[e] = semiring_.add(flat[e], semiring_.mul(lam[h], inner[h][e]));
    }
    check_member(flat, "mu");
    out.map.push_back(index.at(flat));
  }
  return Morphism{ttx, tx, std::move(out)};
}

Morphism SemiringMonad::lax_c(const ObjectExpr& x, const ObjectExpr& y) const {
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
        for (size_t b = 0; b < k.size(); ++b)
          prod[a * ny + b] = semiring_.mul(h[a], k[b]);
      check_member(prod, "c");
      out.map.push_back(index.at(prod));
    }
  return Morphism{tx * ty, txy, std::move(out)};
}

Morphism SemiringMonad::kleisli_compose(const Morphism& f, const Morphism& g,
                                        const ObjectExpr& cod) const {
  // Pointwise weighted composition: (g . f)(x)(z) = sum_y f(x)(y) * g(y)(z).
  const auto& tf = std::get<FunTable>(f.payload);
  const auto& tg = std::get<FunTable>(g.payload);
  const auto fy = t_vectors(g.dom);   // elements of T(Y)
  const auto fz = t_vectors(cod);     // elements of T(Z)
  const int nz = table_->carrier(cod).size();
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < fz.size(); ++i) index.emplace(fz[i], static_cast<int>(i));
  FunTable out;
  out.cod_size = static_cast<int>(fz.size());
  for (size_t x = 0; x < tf.map.size(); ++x) {
    const auto& h = fy[tf.map[x]];
    std::vector<int> acc(nz, semiring_.zero());
    for (size_t y = 0; y < h.size(); ++y) {
      if (h[y] == semiring_.zero()) continue;
      const auto& k = fz[tg.map[y]];
      for (int z = 0; z < nz; ++z)
        acc[z] = semiring_.add(acc[z], semiring_.mul(h[y], k[z]));
    }
    check_member(acc, "kleisli composite");
    out.map.push_back(index.at(acc));
  }
  return Morphism{f.dom, t_obj(cod), std::move(out)};
}

nlohmann::json SemiringMonad::manifest() const {
  return {{"kind", "semiring"},
          {"semiring", semiring_.name().empty() ? nlohmann::json(semiring_.to_json())
                                                : nlohmann::json(semiring_.name())},
          {"variant", to_string(variant_)}};
}

}  // namespace gsmon
