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

#ifndef GSMON_INSTANCES_SPAN_MODEL_HPP
#define GSMON_INSTANCES_SPAN_MODEL_HPP

#include <map>

#include "../category.hpp"

namespace gsmon {

/// Canonical form: apex relabelled so the (left,right) leg-value sequence is
/// sorted, i.e. the lexicographically least sequence over all relabelings.
SpanData canonical_span(SpanData s);

/// Pullback composition: apex = { (a,b) | right_s(a) = left_t(b) }.
SpanData span_compose_data(const SpanData& s, const SpanData& t);

/// 2-cell-existence preorder: true iff a mediating apex function exists,
/// equivalently iff every leg pair of s occurs in t.
bool span_leq_data(const SpanData& s, const SpanData& t);

/// Jointly-monic image of a span: the relation {(left(a), right(a))}.
RelPairs rel_from_span_data(const SpanData& s);

/// Spans of finite sets under the product (span_x) or coproduct (span_plus)
/// tensor. Morphism equality is canonical-form equality (iso classes); the
/// hom preorder is 2-cell existence. Hom enumeration is bounded by an apex
/// cap and therefore always truncated.
class SpanModel : public CategoryModel {
 public:
  SpanModel(TensorKind kind, std::vector<std::pair<std::string, Carrier>> sorts, int apex_cap);

  TensorKind tensor_kind() const override { return kind_; }
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
  nlohmann::json manifest() const override;

  Morphism span(const ObjectExpr& dom, const ObjectExpr& cod, SpanData s) const;

 private:
  TensorKind kind_;
  int apex_cap_;
  nlohmann::json sorts_manifest_;
  std::map<std::string, Carrier> carriers_;
};

}  // namespace gsmon

#endif  // GSMON_INSTANCES_SPAN_MODEL_HPP
