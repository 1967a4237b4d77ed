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

#ifndef GSMON_INSTANCES_SUBCATEGORY_HPP
#define GSMON_INSTANCES_SUBCATEGORY_HPP

#include "../category.hpp"

namespace gsmon {

enum class SubFilter { Functional, Total, TotalFunctional, Maps };
const char* to_string(SubFilter f);
SubFilter sub_filter_from_name(const std::string& name);

/// Wide subcategory of arrows passing a structural filter: copyable arrows,
/// discardable arrows, both, or arrows with a right adjoint. Structure and
/// composition come from the inner model; hom enumeration filters.
class SubcategoryModel : public CategoryModel {
 public:
  /// Verifies on construction (over words up to `verify_budget`) that the
  /// structural arrows pass the filter and that filtered homs are closed
  /// under composition and tensor. Throws FilterNotClosed with a witness.
  SubcategoryModel(ModelPtr inner, SubFilter filter, const Budget& verify_budget);

  bool passes(const Morphism& f) const;

  TensorKind tensor_kind() const override { return inner_->tensor_kind(); }
  Carrier carrier(const ObjectExpr& x) const override { return inner_->carrier(x); }
  Morphism identity(const ObjectExpr& x) const override { return inner_->identity(x); }
  Morphism compose(const Morphism& f, const Morphism& g) const override {
    return inner_->compose(f, g);
  }
  Morphism tensor(const Morphism& f, const Morphism& g) const override {
    return inner_->tensor(f, g);
  }
  Morphism symmetry(const ObjectExpr& x, const ObjectExpr& y) const override {
    return inner_->symmetry(x, y);
  }
  std::optional<Morphism> copy(const ObjectExpr& x) const override { return inner_->copy(x); }
  std::optional<Morphism> discard(const ObjectExpr& x) const override {
    return inner_->discard(x);
  }
  std::optional<Morphism> cocopy(const ObjectExpr& x) const override;
  std::optional<Morphism> codischarge(const ObjectExpr& x) const override;
  std::optional<HomEnum> hom_enumerate(const ObjectExpr& x, const ObjectExpr& y, int cap,
                                       uint64_t seed) const override;
  std::optional<bool> hom_leq(const Morphism& f, const Morphism& g) const override {
    return inner_->hom_leq(f, g);
  }
  const std::vector<std::string>& weight_labels() const override {
    return inner_->weight_labels();
  }
  nlohmann::json manifest() const override;

  const ModelPtr& inner() const { return inner_; }
  SubFilter filter() const { return filter_; }

 private:
  ModelPtr inner_;
  SubFilter filter_;
};

}  // namespace gsmon

#endif  // GSMON_INSTANCES_SUBCATEGORY_HPP
