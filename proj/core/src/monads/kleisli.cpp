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

#include "gsmon/monads/kleisli.hpp"

namespace gsmon {

KleisliModel::KleisliModel(MonadPtr monad) : monad_(std::move(monad)) {
  const auto& base = *monad_->base();
  name_ = "kleisli(" + monad_->name() + " over " + base.name() + ")";
  sorts_ = base.sorts();
  enriched_ = base.enriched();
  posetal_ = base.posetal();
}

Morphism KleisliModel::to_base(const Morphism& f) const {
  Morphism b = f;
  b.cod = monad_->t_obj(f.cod);
  return b;
}

Morphism KleisliModel::from_base(const ObjectExpr& kleisli_cod, const Morphism& f) const {
  Morphism k = f;
  k.cod = kleisli_cod;
  return k;
}

Morphism KleisliModel::lift(const ObjectExpr& cod, const Morphism& structural) const {
  return from_base(cod, monad_->base()->compose(structural, monad_->eta(cod)));
}

Morphism KleisliModel::identity(const ObjectExpr& x) const {
  return from_base(x, monad_->eta(x));
}

Morphism KleisliModel::compose(const Morphism& f, const Morphism& g) const {
  if (f.cod != g.dom) throw Error(ErrorKind::TypeMismatch, "kleisli compose endpoint mismatch");
  const auto& base = *monad_->base();
  Morphism fb = to_base(f), gb = to_base(g);
  Morphism tg = monad_->t_arr(gb);
  return from_base(g.cod, base.compose(fb, base.compose(tg, monad_->mu(g.cod))));
}

Morphism KleisliModel::tensor(const Morphism& f, const Morphism& g) const {
  const auto& base = *monad_->base();
  Morphism fb = to_base(f), gb = to_base(g);
  Morphism prod = base.tensor(fb, gb);
  return from_base(f.cod * g.cod, base.compose(prod, monad_->lax_c(f.cod, g.cod)));
}

Morphism KleisliModel::symmetry(const ObjectExpr& x, const ObjectExpr& y) const {
  return lift(y * x, monad_->base()->symmetry(x, y));
}

std::optional<Morphism> KleisliModel::copy(const ObjectExpr& x) const {
  auto m = monad_->base()->copy(x);
  if (!m) return std::nullopt;
  return lift(x * x, *m);
}

std::optional<Morphism> KleisliModel::discard(const ObjectExpr& x) const {
  auto m = monad_->base()->discard(x);
  if (!m) return std::nullopt;
  return lift(ObjectExpr::unit(), *m);
}

std::optional<Morphism> KleisliModel::cocopy(const ObjectExpr& x) const {
  auto m = monad_->base()->cocopy(x);
  if (!m) return std::nullopt;
  return lift(x, *m);
}

std::optional<Morphism> KleisliModel::codischarge(const ObjectExpr& x) const {
  auto m = monad_->base()->codischarge(x);
  if (!m) return std::nullopt;
  return lift(x, *m);
}

std::optional<CategoryModel::HomEnum> KleisliModel::hom_enumerate(const ObjectExpr& x,
                                                                  const ObjectExpr& y, int cap,
                                                                  uint64_t seed) const {
  auto inner = monad_->base()->hom_enumerate(x, monad_->t_obj(y), cap, seed);
  if (!inner) return std::nullopt;
  HomEnum out;
  out.truncated = inner->truncated;
  for (auto& f : inner->morphisms) out.morphisms.push_back(from_base(y, f));
  return out;
}

std::optional<bool> KleisliModel::hom_leq(const Morphism& f, const Morphism& g) const {
  if (f.dom != g.dom || f.cod != g.cod)
    throw Error(ErrorKind::NotParallel, "hom_leq on non-parallel arrows");
  return monad_->base()->hom_leq(to_base(f), to_base(g));
}

nlohmann::json KleisliModel::morphism_to_json(const Morphism& f) const {
  nlohmann::json j = monad_->base()->morphism_to_json(to_base(f));
  j["kleisli_cod"] = f.cod.to_json();
  return j;
}

Morphism KleisliModel::morphism_from_json(const nlohmann::json& j) const {
  Morphism base = monad_->base()->morphism_from_json(j);
  return from_base(ObjectExpr::from_json(j.at("kleisli_cod")), base);
}

nlohmann::json KleisliModel::manifest() const {
  return {{"kind", "kleisli"},
          {"base", monad_->base()->manifest()},
          {"monad", monad_->manifest()}};
}

std::shared_ptr<KleisliModel> kleisli(MonadPtr monad, const Budget& check_budget, bool force) {
  if (!force) {
    MonadReport report = check_monad(*monad, check_budget);
    if (const MonadCheck* bad = report.failing())
      throw Error(ErrorKind::MonadLawsFail,
                  "monad '" + monad->name() + "' fails " + bad->name,
                  nlohmann::json{{"check", bad->name}, {"witness", bad->witness}});
  }
  return std::make_shared<KleisliModel>(std::move(monad));
}

}  // namespace gsmon
