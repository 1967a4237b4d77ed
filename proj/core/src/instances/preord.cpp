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

namespace {

void check_preorder(const Carrier& c, const std::string& sort, bool antisymmetric) {
  if (!c.ordered) throw Error(ErrorKind::TableShape, "sort '" + sort + "' has no order");
  const int n = c.size();
  for (int a = 0; a < n; ++a)
    if (!c.le(a, a))
      throw Error(ErrorKind::OrderIncompatible, "order on '" + sort + "' is not reflexive");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        if (c.le(a, b) && c.le(b, k) && !c.le(a, k))
          throw Error(ErrorKind::OrderIncompatible, "order on '" + sort + "' is not transitive");
  if (antisymmetric)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && c.le(a, b) && c.le(b, a))
          throw Error(ErrorKind::OrderIncompatible, "order on '" + sort + "' is not a poset");
}

std::shared_ptr<TableCategory> make_ordered(std::vector<std::pair<std::string, Carrier>> sorts,
                                            bool posets) {
  for (const auto& [s, c] : sorts) check_preorder(c, s, posets);
  TableCategory::Options opt;
  opt.maps = TableCategory::Maps::Total;
  opt.enriched = true;      // pointwise order on monotone maps
  opt.posetal = posets;
  opt.require_monotone = true;
  opt.kind = posets ? "finposet" : "finpreord";
  return std::make_shared<TableCategory>(opt.kind, std::move(sorts), opt);
}

}  // namespace

std::shared_ptr<TableCategory> make_finpreord(
    std::vector<std::pair<std::string, Carrier>> sorts) {
  return make_ordered(std::move(sorts), false);
}

std::shared_ptr<TableCategory> make_finposet(
    std::vector<std::pair<std::string, Carrier>> sorts) {
  return make_ordered(std::move(sorts), true);
}

}  // namespace gsmon
