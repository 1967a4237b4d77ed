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

#ifndef GSMON_INSTANCES_REL_MODELS_HPP
#define GSMON_INSTANCES_REL_MODELS_HPP

#include <map>
#include <mutex>

#include "../category.hpp"

namespace gsmon {

/// Shared carrier bookkeeping for the relation-payload models.
class RelModelBase : public CategoryModel {
 public:
  RelModelBase(std::string name, std::vector<std::pair<std::string, Carrier>> sorts);
  Carrier carrier(const ObjectExpr& x) const override;

 protected:
  int size_of(const ObjectExpr& x) const { return carrier(x).size(); }
  Morphism rel(const ObjectExpr& dom, const ObjectExpr& cod,
               std::vector<std::pair<int, int>> pairs) const;
  std::optional<HomEnum> enumerate_relations(const ObjectExpr& x, const ObjectExpr& y, int cap,
                                             uint64_t seed) const;
  nlohmann::json sorts_manifest_;
  std::map<std::string, Carrier> carriers_;
};

/// Sets and relations under the product tensor, composed with the usual
/// exists/and clause. The leading gs-monoidal example; also carries the
/// cogs structure and the inclusion order.
class FinRelModel : public RelModelBase {
 public:
  FinRelModel(std::vector<std::pair<std::string, Carrier>> sorts);
  TensorKind tensor_kind() const override { return TensorKind::Product; }
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
  nlohmann::json manifest() const override;
};

/// The alternative relation composition: (x,z) related iff for all y,
/// (x,y) in a or (y,z) in b; identities are the inequality relations.
/// Isomorphic to the usual relations via elementwise complement.
class FinRelForallModel : public RelModelBase {
 public:
  FinRelForallModel(std::vector<std::pair<std::string, Carrier>> sorts);
  TensorKind tensor_kind() const override { return TensorKind::Product; }
  Morphism identity(const ObjectExpr& x) const override;
  Morphism compose(const Morphism& f, const Morphism& g) const override;
  Morphism tensor(const Morphism& f, const Morphism& g) const override;
  Morphism symmetry(const ObjectExpr& x, const ObjectExpr& y) const override;
  std::optional<Morphism> copy(const ObjectExpr& x) const override;
  std::optional<Morphism> discard(const ObjectExpr& x) const override;
  std::optional<HomEnum> hom_enumerate(const ObjectExpr& x, const ObjectExpr& y, int cap,
                                       uint64_t seed) const override;
  nlohmann::json manifest() const override;
};

/// Relations under the coproduct tensor; bialgebraic and special. The
/// structure arrows are the rel_from_span transport of the +-span ones.
class RelPlusModel : public RelModelBase {
 public:
  RelPlusModel(std::vector<std::pair<std::string, Carrier>> sorts);
  TensorKind tensor_kind() const override { return TensorKind::Sum; }
  Carrier carrier(const ObjectExpr& x) const override;
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
  nlohmann::json manifest() const override;
};

/// Relational composition of pair lists (exists/and).
RelPairs rel_compose(const RelPairs& a, const RelPairs& b);

/// The forall/or composite of the alternative relation category.
Morphism compose_forall(const CategoryModel& model, const Morphism& a, const Morphism& b);

/// Elementwise complement (the strict symmetric monoidal iso between the
/// two relation categories).
Morphism rel_complement(const Morphism& f);

}  // namespace gsmon

#endif  // GSMON_INSTANCES_REL_MODELS_HPP
