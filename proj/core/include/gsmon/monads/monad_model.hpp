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

#ifndef GSMON_MONADS_MONAD_MODEL_HPP
#define GSMON_MONADS_MONAD_MODEL_HPP

#include "../category.hpp"

namespace gsmon {

/// A symmetric monoidal monad presented concretely over a base model: the
/// endofunctor action on objects and arrows, the unit and multiplication
/// families, and the lax monoidal structure c. Everything lives in the base
/// model's word language; monads with genuinely new carriers (weight
/// vectors, subsets) register derived sorts on the base.
///
/// The lax unit u is eta at I by definition.
class MonadModel {
 public:
  virtual ~MonadModel() = default;

  const std::string& name() const { return name_; }
  const ModelPtr& base() const { return base_; }

  virtual ObjectExpr t_obj(const ObjectExpr& x) const = 0;
  virtual Morphism t_arr(const Morphism& f) const = 0;
  virtual Morphism eta(const ObjectExpr& x) const = 0;  // X -> T(X)
  virtual Morphism mu(const ObjectExpr& x) const = 0;   // TT(X) -> T(X)
  /// c_{X,Y} : T(X) (x) T(Y) -> T(X (x) Y)
  virtual Morphism lax_c(const ObjectExpr& x, const ObjectExpr& y) const = 0;
  Morphism lax_u() const { return eta(ObjectExpr::unit()); }

  /// The Kleisli composite of f : X -> T(Y) with g : Y -> T(Z), as a base
  /// arrow X -> T(Z). The default route mu . T(g) . f materializes TT(Z);
  /// carrier monads override it with the pointwise formula, which keeps
  /// composites feasible when TT would blow up.
  virtual Morphism kleisli_compose(const Morphism& f, const Morphism& g,
                                   const ObjectExpr& cod) const {
    return base_->compose(f, base_->compose(t_arr(g), mu(cod)));
  }

  virtual nlohmann::json manifest() const = 0;

 protected:
  std::string name_;
  ModelPtr base_;
};

using MonadPtr = std::shared_ptr<const MonadModel>;

}  // namespace gsmon

#endif  // GSMON_MONADS_MONAD_MODEL_HPP
