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

#ifndef GSMON_INSTANCES_BUILD_HPP
#define GSMON_INSTANCES_BUILD_HPP

#include "../semiring.hpp"
#include "rel_models.hpp"
#include "span_model.hpp"
#include "table_model.hpp"
#include "wrel_model.hpp"

namespace gsmon {

/// Sort table for the factory functions: sort name -> carrier size. Element
/// labels are the lowercased sort name with an index.
using SortSizes = std::vector<std::pair<std::string, int>>;

Carrier default_carrier(const std::string& sort, int size);

std::shared_ptr<TableCategory> make_finset(const SortSizes& sorts);
std::shared_ptr<TableCategory> make_finpar(const SortSizes& sorts);
/// Preorders: per-sort order matrices over the default carriers.
std::shared_ptr<TableCategory> make_finpreord(
    std::vector<std::pair<std::string, Carrier>> sorts);
std::shared_ptr<TableCategory> make_finposet(std::vector<std::pair<std::string, Carrier>> sorts);

std::shared_ptr<FinRelModel> make_finrel(const SortSizes& sorts);
std::shared_ptr<FinRelForallModel> make_finrel_forall(const SortSizes& sorts);
std::shared_ptr<RelPlusModel> make_rel_plus(const SortSizes& sorts);
std::shared_ptr<WRelModel> make_wrel(Semiring s, const SortSizes& sorts);
std::shared_ptr<SpanModel> make_span(TensorKind kind, const SortSizes& sorts, int apex_cap = 3);

/// Chain preorder 0 <= 1 <= ... over the default carrier.
Carrier chain_carrier(const std::string& sort, int size);
/// Discrete preorder.
Carrier discrete_ordered_carrier(const std::string& sort, int size);

/// Builds a model from a manifest document:
///   {"kind": "finrel", "sorts": {"X": 2}, ...parameters}
/// Kinds: finset | finpar | finrel | finrel_forall | wrel | span_x |
/// span_plus | rel_plus | finpreord | finposet | subcategory | kleisli.
/// Throws UnknownKind / CarrierTooLarge / validation errors.
ModelPtr build_instance(const nlohmann::json& manifest);

}  // namespace gsmon

#endif  // GSMON_INSTANCES_BUILD_HPP
