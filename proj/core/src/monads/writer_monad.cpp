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

MonoidObject MonoidObject::validated(const CategoryModel& model, ObjectExpr carrier,
                                     Morphism mult, Morphism unit) {
  const ObjectExpr m = carrier;
  if (mult.dom != m * m || mult.cod != m)
    throw Error(ErrorKind::MonoidLawsFail, "mult must be M*M -> M");
  if (!unit.dom.is_unit() || unit.cod != m)
    throw Error(ErrorKind::MonoidLawsFail, "unit must be I -> M");
  const Morphism id_m = model.identity(m);
  // associativity
  Morphism lhs = model.compose(model.tensor(mult, id_m), mult);
  Morphism rhs = model.compose(model.tensor(id_m, mult), mult);
  if (!model.equal(lhs, rhs))
    throw Error(ErrorKind::MonoidLawsFail, "monoid multiplication is not associative");
  // unit laws
  if (!model.equal(model.compose(model.tensor(unit, id_m), mult), id_m) ||
      !model.equal(model.compose(model.tensor(id_m, unit), mult), id_m))
    throw Error(ErrorKind::MonoidLawsFail, "monoid unit laws fail");
  return MonoidObject{std::move(carrier), std::move(mult), std::move(unit)};
}

WriterMonad::WriterMonad(ModelPtr base, MonoidObject monoid) : monoid_(std::move(monoid)) {
  base_ = std::move(base);
  name_ = "writer(" + monoid_.carrier.str() + ")";
}

ObjectExpr WriterMonad::t_obj(const ObjectExpr& x) const { return x * monoid_.carrier; }

Morphism WriterMonad::t_arr(const Morphism& f) const {
  return base_->tensor(f, base_->identity(monoid_.carrier));
}

Morphism WriterMonad::eta(const ObjectExpr& x) const {
  return base_->tensor(base_->identity(x), monoid_.unit);
}

Morphism WriterMonad::mu(const ObjectExpr& x) const {
  return base_->tensor(base_->identity(x), monoid_.mult);
}

Morphism WriterMonad::lax_c(const ObjectExpr& x, const ObjectExpr& y) const {
  // (X (x) M) (x) (Y (x) M) -> (X (x) Y) (x) M: swap M past Y, multiply.
  const Morphism swap =
      base_->tensor(base_->tensor(base_->identity(x), base_->symmetry(monoid_.carrier, y)),
                    base_->identity(monoid_.carrier));
  const Morphism mul = base_->tensor(base_->identity(x * y), monoid_.mult);
  return base_->compose(swap, mul);
}

nlohmann::json WriterMonad::manifest() const {
  nlohmann::json j;
  j["kind"] = "writer";
  nlohmann::json m;
  m["sort"] = monoid_.carrier.word.at(0);
  m["mult"] = base_->morphism_to_json(monoid_.mult);
  m["unit"] = base_->morphism_to_json(monoid_.unit);
  j["monoid"] = m;
  return j;
}

}  // namespace gsmon
