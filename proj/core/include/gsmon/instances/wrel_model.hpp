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

#ifndef GSMON_INSTANCES_WREL_MODEL_HPP
#define GSMON_INSTANCES_WREL_MODEL_HPP

#include <map>

#include "../category.hpp"
#include "../semiring.hpp"

namespace gsmon {

/// Relations weighted in a finite commutative semiring: morphisms are
/// dom x cod weight matrices, composition is the semiring matrix product.
/// Enriched by the entrywise order (explicit or canonical).
class WRelModel : public CategoryModel {
 public:
  WRelModel(Semiring semiring, std::vector<std::pair<std::string, Carrier>> sorts);

  const Semiring& semiring() const { return semiring_; }
  TensorKind tensor_kind() const override { return TensorKind::Product; }
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
  std::optional<bool> hom_leq(const Morphism& f, const Morphism& g) const override;
  const std::vector<std::string>& weight_labels() const override {
    return semiring_.elements();
  }
  nlohmann::json manifest() const override;

 private:
  Morphism mat(const ObjectExpr& dom, const ObjectExpr& cod, WeightMat m) const;
  Semiring semiring_;
  nlohmann::json sorts_manifest_;
  std::map<std::string, Carrier> carriers_;
};

/// Matrix product over the shared semiring: (b . a)(x,z) = sum_y a(x,y) b(y,z).
WeightMat wrel_compose(const Semiring& s, const WeightMat& a, const WeightMat& b);

}  // namespace gsmon

#endif  // GSMON_INSTANCES_WREL_MODEL_HPP
