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

#ifndef GSMON_MORPHISM_HPP
#define GSMON_MORPHISM_HPP

#include <compare>
#include <utility>
#include <variant>
#include <vector>

#include "object.hpp"

namespace gsmon {

/// Total function table: map[i] is the cod index of dom element i.
struct FunTable {
  std::vector<int> map;
  int cod_size = 0;
  friend bool operator==(const FunTable&, const FunTable&) = default;
  friend auto operator<=>(const FunTable&, const FunTable&) = default;
};

/// Partial function table: -1 marks undefined.
struct ParTable {
  std::vector<int> map;
  int cod_size = 0;
  friend bool operator==(const ParTable&, const ParTable&) = default;
  friend auto operator<=>(const ParTable&, const ParTable&) = default;
};

/// Relation as a sorted, deduplicated list of (dom index, cod index) pairs.
struct RelPairs {
  std::vector<std::pair<int, int>> pairs;
  int dom_size = 0, cod_size = 0;
  void normalize();
  bool contains(int x, int y) const;
  friend bool operator==(const RelPairs&, const RelPairs&) = default;
  friend auto operator<=>(const RelPairs&, const RelPairs&) = default;
};

/// Semiring-weighted matrix, row-major over dom x cod carrier indices.
/// Entries are semiring element indices.
struct WeightMat {
  std::vector<int> entries;
  int rows = 0, cols = 0;
  int at(int r, int c) const { return entries[r * cols + c]; }
  int& at(int r, int c) { return entries[r * cols + c]; }
  friend bool operator==(const WeightMat&, const WeightMat&) = default;
  friend auto operator<=>(const WeightMat&, const WeightMat&) = default;
};

/// Span between finite carriers, stored in canonical form: the apex is
/// relabelled to 0..n-1 by the lexicographically least (left,right) value
/// sequence among all bijective relabelings.
struct SpanData {
  int apex = 0;
  std::vector<int> left, right;  // legs, length == apex
  int dom_size = 0, cod_size = 0;
  friend bool operator==(const SpanData&, const SpanData&) = default;
  friend auto operator<=>(const SpanData&, const SpanData&) = default;
};

using Payload = std::variant<FunTable, ParTable, RelPairs, WeightMat, SpanData>;

/// A morphism of a concrete model: typed endpoints plus finite payload.
/// Equality is payload normal-form equality; every payload constructor in
/// this library produces normal forms.
struct Morphism {
  ObjectExpr dom, cod;
  Payload payload;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Deterministic total order used to fix enumeration order of hom-sets.
bool morphism_less(const Morphism& a, const Morphism& b);

}  // namespace gsmon

#endif  // GSMON_MORPHISM_HPP
