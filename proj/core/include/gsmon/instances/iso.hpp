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

#ifndef GSMON_INSTANCES_ISO_HPP
#define GSMON_INSTANCES_ISO_HPP

#include <functional>

#include "../category.hpp"

namespace gsmon {

/// A candidate isomorphism of concrete models with shared sort names: a
/// payload conversion in each direction.
struct ModelIso {
  std::function<Morphism(const Morphism&)> a_to_b;
  std::function<Morphism(const Morphism&)> b_to_a;
};

struct IsoCheckResult {
  bool ok = true;
  std::string failure;  // first failing condition, human-readable
  long homs_checked = 0;
  long pairs_checked = 0;
};

/// Verifies that the conversion is an identity-on-objects isomorphism of
/// structured models over the enumerated words: mutually inverse on hom-sets,
/// commuting with identity, composition, tensor, symmetry, the (co)gs
/// structure both models expose, and the hom preorders when both are
/// enriched. Exhaustive when hom-sets fit the budget cap.
IsoCheckResult check_model_iso(const CategoryModel& a, const CategoryModel& b,
                               const ModelIso& iso, const Budget& budget);

}  // namespace gsmon

#endif  // GSMON_INSTANCES_ISO_HPP
