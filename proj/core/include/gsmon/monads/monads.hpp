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

#ifndef GSMON_MONADS_MONADS_HPP
#define GSMON_MONADS_MONADS_HPP

#include "../instances/table_model.hpp"
#include "../semiring.hpp"
#include "monad_model.hpp"

namespace gsmon {

/// Variants of the semiring monad: which weight vectors the carrier keeps.
enum class SemiringVariant { Full, E, U, ESub, USub };
const char* to_string(SemiringVariant v);
SemiringVariant semiring_variant_from_name(const std::string& name);

/// The semiring monad over finite sets: T(X) = weight vectors over X that
/// satisfy the variant's predicate; eta is the Dirac vector, mu the weighted
/// sum, c the outer product. Variant closure under eta, mu, c and T(f) is
/// verified whenever carriers are built; a vector escaping the predicate
/// raises VariantNotClosed with the witness.
class SemiringMonad : public MonadModel {
 public:
  SemiringMonad(std::shared_ptr<const TableCategory> base, Semiring semiring,
                SemiringVariant variant);

  ObjectExpr t_obj(const ObjectExpr& x) const override;
  Morphism t_arr(const Morphism& f) const override;
  Morphism eta(const ObjectExpr& x) const override;
  Morphism mu(const ObjectExpr& x) const override;
  Morphism lax_c(const ObjectExpr& x, const ObjectExpr& y) const override;
  Morphism kleisli_compose(const Morphism& f, const Morphism& g,
                           const ObjectExpr& cod) const override;
  nlohmann::json manifest() const override;

  const Semiring& semiring() const { return semiring_; }
  /// The weight vectors carried by T at x, in carrier order.
  std::vector<std::vector<int>> t_vectors(const ObjectExpr& x) const;

 private:
  std::vector<std::vector<int>> vectors_over(int n) const;
  void check_member(const std::vector<int>& vec, const char* produced_by) const;
  std::shared_ptr<const TableCategory> table_;
  Semiring semiring_;
  SemiringVariant variant_;
};

/// A monoid object in a model: carrier sort plus multiplication and unit
/// arrows. Laws are checked exhaustively on construction.
struct MonoidObject {
  ObjectExpr carrier;  // one-sort word
  Morphism mult;       // M (x) M -> M
  Morphism unit;       // I -> M

  static MonoidObject validated(const CategoryModel& model, ObjectExpr carrier, Morphism mult,
                                Morphism unit);
};

/// The action monad (-) (x) M for a monoid object M in a gs-monoidal base.
class WriterMonad : public MonadModel {
 public:
  WriterMonad(ModelPtr base, MonoidObject monoid);
  ObjectExpr t_obj(const ObjectExpr& x) const override;
  Morphism t_arr(const Morphism& f) const override;
  Morphism eta(const ObjectExpr& x) const override;
  Morphism mu(const ObjectExpr& x) const override;
  Morphism lax_c(const ObjectExpr& x, const ObjectExpr& y) const override;
  nlohmann::json manifest() const override;
  const MonoidObject& monoid() const { return monoid_; }

 private:
  MonoidObject monoid_;
};

/// The identity monad on any base.
class IdentityMonad : public MonadModel {
 public:
  explicit IdentityMonad(ModelPtr base);
  ObjectExpr t_obj(const ObjectExpr& x) const override { return x; }
  Morphism t_arr(const Morphism& f) const override { return f; }
  Morphism eta(const ObjectExpr& x) const override { return base_->identity(x); }
  Morphism mu(const ObjectExpr& x) const override { return base_->identity(x); }
  Morphism lax_c(const ObjectExpr& x, const ObjectExpr& y) const override {
    return base_->identity(x * y);
  }
  nlohmann::json manifest() const override { return {{"kind", "identity"}}; }
};

/// Finite powerset with the Hoare preorder, over finite preorders. A colax
/// gs-monoidal monad.
class HoarePowersetMonad : public MonadModel {
 public:
  explicit HoarePowersetMonad(std::shared_ptr<const TableCategory> base);
  ObjectExpr t_obj(const ObjectExpr& x) const override;
  Morphism t_arr(const Morphism& f) const override;
  Morphism eta(const ObjectExpr& x) const override;
  Morphism mu(const ObjectExpr& x) const override;
  Morphism lax_c(const ObjectExpr& x, const ObjectExpr& y) const override;
  Morphism kleisli_compose(const Morphism& f, const Morphism& g,
                           const ObjectExpr& cod) const override;
  nlohmann::json manifest() const override { return {{"kind", "hoare_powerset"}}; }
  /// Subset carried by a T-carrier element, as a bitmask over the base carrier.
  std::vector<uint64_t> t_masks(const ObjectExpr& x) const;

 private:
  std::shared_ptr<const TableCategory> table_;
};

/// Down-closed subsets ordered by inclusion, over finite posets.
class DownsetMonad : public MonadModel {
 public:
  explicit DownsetMonad(std::shared_ptr<const TableCategory> base);
  ObjectExpr t_obj(const ObjectExpr& x) const override;
  Morphism t_arr(const Morphism& f) const override;
  Morphism eta(const ObjectExpr& x) const override;
  Morphism mu(const ObjectExpr& x) const override;
  Morphism lax_c(const ObjectExpr& x, const ObjectExpr& y) const override;
  Morphism kleisli_compose(const Morphism& f, const Morphism& g,
                           const ObjectExpr& cod) const override;
  nlohmann::json manifest() const override { return {{"kind", "downset"}}; }
  std::vector<uint64_t> t_masks(const ObjectExpr& x) const;

 private:
  std::shared_ptr<const TableCategory> table_;
};

/// The semiring monad lifted to finite preorders, with T-carriers ordered by
/// comparing weight sums over upward-closed subsets. Requires zero to be a
/// minimal element of the semiring order.
class UpweightMonad : public MonadModel {
 public:
  UpweightMonad(std::shared_ptr<const TableCategory> base, Semiring semiring,
                SemiringVariant variant);
  ObjectExpr t_obj(const ObjectExpr& x) const override;
  Morphism t_arr(const Morphism& f) const override;
  Morphism eta(const ObjectExpr& x) const override;
  Morphism mu(const ObjectExpr& x) const override;
  Morphism lax_c(const ObjectExpr& x, const ObjectExpr& y) const override;
  Morphism kleisli_compose(const Morphism& f, const Morphism& g,
                           const ObjectExpr& cod) const override;
  nlohmann::json manifest() const override;
  std::vector<std::vector<int>> t_vectors(const ObjectExpr& x) const;

 private:
  std::vector<std::vector<int>> vectors_over(const Carrier& c) const;
  std::shared_ptr<const TableCategory> table_;
  Semiring semiring_;
  SemiringVariant variant_;
};

/// Builds a monad from a manifest over an already built base model:
///   {"kind":"semiring","semiring":"boolean","variant":"u"}
///   {"kind":"writer","monoid":{"sort":"M","mult":[[..]],"unit":".."}}
///   {"kind":"identity"} | {"kind":"hoare_powerset"} | {"kind":"downset"}
///   {"kind":"upweight","semiring":"boolean","variant":"u_sub"}
MonadPtr build_monad(ModelPtr base, const nlohmann::json& manifest);

}  // namespace gsmon

#endif  // GSMON_MONADS_MONADS_HPP
