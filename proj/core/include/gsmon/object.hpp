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

#ifndef GSMON_OBJECT_HPP
#define GSMON_OBJECT_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace gsmon {

/// An object of a strict symmetric monoidal category: a flat word of atomic
/// sort names. The empty word is the monoidal unit I; tensor is
/// concatenation. Associativity and unit cancellation are handled once, by
/// flattening, so the coherence isomorphisms are identities everywhere else.
struct ObjectExpr {
  std::vector<std::string> word;

  ObjectExpr() = default;
  explicit ObjectExpr(std::vector<std::string> w) : word(std::move(w)) {}
  static ObjectExpr unit() { return ObjectExpr{}; }
  static ObjectExpr sort(std::string s) { return ObjectExpr{{std::move(s)}}; }

  bool is_unit() const { return word.empty(); }
  int length() const { return static_cast<int>(word.size()); }

  friend ObjectExpr operator*(const ObjectExpr& a, const ObjectExpr& b) {
    ObjectExpr r = a;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    return r;
  }
  friend bool operator==(const ObjectExpr&, const ObjectExpr&) = default;
  friend auto operator<=>(const ObjectExpr&, const ObjectExpr&) = default;

  std::string str() const;
  nlohmann::json to_json() const { return word; }
  static ObjectExpr from_json(const nlohmann::json& j) {
    return ObjectExpr{j.get<std::vector<std::string>>()};
  }
};

/// A raw tensor tree over sorts and the unit, before flattening.
struct RawObject {
  enum class Kind { Sort, Unit, Tensor };
  Kind kind = Kind::Unit;
  std::string sort;
  std::vector<RawObject> children;  // exactly two for Tensor

  static RawObject unit() { return {Kind::Unit, "", {}}; }
  static RawObject atom(std::string s) { return {Kind::Sort, std::move(s), {}}; }
  static RawObject tensor(RawObject a, RawObject b) {
    RawObject r{Kind::Tensor, "", {}};
    r.children.push_back(std::move(a));
    r.children.push_back(std::move(b));
    return r;
  }
};

/// Flattens a raw tensor expression to its associativity-free, unit-free
/// word. Idempotent by construction.
ObjectExpr flatten_object(const RawObject& raw);

}  // namespace gsmon

#endif  // GSMON_OBJECT_HPP
