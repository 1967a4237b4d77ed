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

#include "gsmon/instances/build.hpp"

namespace gsmon {

std::shared_ptr<TableCategory> make_finpar(const SortSizes& sorts) {
  std::vector<std::pair<std::string, Carrier>> carriers;
  for (const auto& [s, n] : sorts) carriers.emplace_back(s, default_carrier(s, n));
  TableCategory::Options opt;
  opt.maps = TableCategory::Maps::Partial;
  // Definedness order on partial maps: discrete on values, ordered by
  // extension. It is a partial order.
  opt.enriched = true;
  opt.posetal = true;
  opt.kind = "finpar";
  return std::make_shared<TableCategory>("finpar", std::move(carriers), opt);
}

}  // namespace gsmon
