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

#include "gsmon/morphism.hpp"

#include <algorithm>

namespace gsmon {

void RelPairs::normalize() {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

bool RelPairs::contains(int x, int y) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(x, y));
}

bool morphism_less(const Morphism& a, const Morphism& b) {
  if (a.dom != b.dom) return a.dom < b.dom;
  if (a.cod != b.cod) return a.cod < b.cod;
  if (a.payload.index() != b.payload.index()) return a.payload.index() < b.payload.index();
  return std::visit(
      [&](const auto& pa) {
        using T = std::decay_t<decltype(pa)>;
        return pa < std::get<T>(b.payload);
      },
      a.payload);
}

}  // namespace gsmon
