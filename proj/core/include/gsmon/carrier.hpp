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

#ifndef GSMON_CARRIER_HPP
#define GSMON_CARRIER_HPP

#include <string>
#include <vector>

#include "error.hpp"

namespace gsmon {

/// A named finite carrier. Elements are addressed by index; labels are what
/// gets serialized. An optional preorder matrix supports order-enriched
/// models (preorders, posets, ordered monad carriers).
struct Carrier {
  std::vector<std::string> labels;
  bool ordered = false;
  std::vector<char> leq;  // size*size matrix when ordered

  int size() const { return static_cast<int>(labels.size()); }
  bool le(int a, int b) const { return ordered ? leq[a * size() + b] != 0 : a == b; }

  static Carrier discrete(std::vector<std::string> labels) {
    Carrier c;
    c.labels = std::move(labels);
    return c;
  }
};

/// Cartesian product of component carriers, in word order. The empty product
/// is the one-element carrier (the unit of a product tensor). The first
/// component is the most significant digit, so element enumeration is
/// lexicographic in word order. Orders combine componentwise.
Carrier product_carrier(const std::vector<const Carrier*>& components);

/// Disjoint union of component carriers, tagged by position. The empty sum
/// is the empty carrier.
Carrier sum_carrier(const std::vector<const Carrier*>& components);

/// Mixed-radix index arithmetic for product carriers.
class ProductIndexer {
 public:
  explicit ProductIndexer(std::vector<int> sizes);
  int total() const { return total_; }
  int arity() const { return static_cast<int>(sizes_.size()); }
  int size(int i) const { return sizes_[i]; }
  int encode(const std::vector<int>& digits) const;
  std::vector<int> decode(int index) const;

 private:
  std::vector<int> sizes_;
  int total_;
};

/// Offset arithmetic for sum carriers: element = (component, local index).
class SumIndexer {
 public:
  explicit SumIndexer(std::vector<int> sizes);
  int total() const { return total_; }
  int encode(int component, int local) const { return offsets_[component] + local; }
  std::pair<int, int> decode(int index) const;

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int total_;
};

}  // namespace gsmon

#endif  // GSMON_CARRIER_HPP
