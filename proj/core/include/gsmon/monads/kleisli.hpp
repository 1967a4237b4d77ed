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

#ifndef GSMON_MONADS_KLEISLI_HPP
#define GSMON_MONADS_KLEISLI_HPP

#include "monad_check.hpp"
#include "monad_model.hpp"

namespace gsmon {

/// The Kleisli category of a symmetric monoidal monad: homs are base arrows
/// X -> T(Y), composed through T and mu, tensored through the lax structure.
/// The gs structure is the base one post-composed with eta (likewise the
/// cogs structure when the base has it); the hom preorder is the base one on
/// the underlying arrows.
class KleisliModel : public CategoryModel {
 public:
  explicit KleisliModel(MonadPtr monad);

  /// Retype a Kleisli arrow X -> Y to its base representative X -> T(Y).
  Morphism to_base(const Morphism& f) const;
  Morphism from_base(const ObjectExpr& kleisli_cod, const Morphism& f) const;

  TensorKind tensor_kind() const override { return monad_->base()->tensor_kind(); }
  Carrier carrier(const ObjectExpr& x) const override { return monad_->base()->carrier(x); }
  Morphism identity(const ObjectExpr& x) const override;
  Morphism compose(const Morphism& f, const Morphism& g) const override;
  Morphism tensor(const Morphism& f, const Morphism& g) const override;
  Morphism symmetry(const ObjectExpr& x, const ObjectExpr& y) const override;
  std::optional<Morphism> copy(const ObjectExpr& x) const override;
  std::optional<Morphism> discard(const ObjectExpr& x) const override;
  std::optional<Morphism> cocopy(const ObjectExpr& x) const override;
  std::optional<Morphism> codischarge(const ObjectExpr& x) const override;
  std::optional<HomEnum> hom_enumerate(const ObjectExpr& x, const ObjectExpr& y, int cap,
                                       uint64_t seed) const override;
  std::optional<bool> hom_leq(const Morphism& f, const Morphism& g) const override;
  const std::vector<std::string>& weight_labels() const override {
    return monad_->base()->weight_labels();
  }
  nlohmann::json morphism_to_json(const Morphism& f) const override;
  Morphism morphism_from_json(const nlohmann::json& j) const override;
  nlohmann::json manifest() const override;

  const MonadPtr& monad() const { return monad_; }

 private:
  Morphism lift(const ObjectExpr& x, const Morphism& structural) const;  // K(f) = f ; eta
  MonadPtr monad_;
};

/// Builds the Kleisli model, first checking the monad laws under the given
/// budget. Throws MonadLawsFail (with the failing check as detail) unless
/// `force` is set.
std::shared_ptr<KleisliModel> kleisli(MonadPtr monad, const Budget& check_budget,
                                      bool force = false);

}  // namespace gsmon

#endif  // GSMON_MONADS_KLEISLI_HPP
