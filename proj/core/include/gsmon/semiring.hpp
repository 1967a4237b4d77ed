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

#ifndef GSMON_SEMIRING_HPP
#define GSMON_SEMIRING_HPP

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "json.hpp"

namespace gsmon {

/// Raw semiring data as supplied by a user or a catalog entry. Tables are
/// row-major in element order and hold element labels.
struct SemiringSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> add;
  std::vector<std::vector<std::string>> mul;
  std::string zero;
  std::string one;
  /// Optional compatible preorder, given as a list of (a, b) pairs with a <= b.
  std::optional<std::vector<std::pair<std::string, std::string>>> order;

  static SemiringSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// One failing law instance found while validating a semiring.
struct SemiringViolation {
  std::string law;                    // e.g. "add-associativity"
  std::vector<std::string> witness;   // the offending element tuple
  nlohmann::json to_json() const;
};

/// A validated finite commutative semiring. Elements are identified by their
/// index into `elements`; all operation tables are index-based and total.
/// Instances are immutable after construction and safe to share.
class Semiring {
 public:
  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(int e) const { return elements_[e]; }
  int index_of(const std::string& label) const;

  int add(int a, int b) const { return add_[a * size() + b]; }
  int mul(int a, int b) const { return mul_[a * size() + b]; }
  int zero() const { return zero_; }
  int one() const { return one_; }

  /// True when an explicit compatible preorder was supplied.
  bool has_order() const { return has_order_; }
  /// The explicit preorder if present, otherwise the canonical one.
  bool leq(int a, int b) const { return order_[a * size() + b]; }
  /// True when `leq` is antisymmetric.
  bool order_is_partial() const;
  /// True when zero is a minimal element of `leq`.
  bool zero_minimal() const;

  nlohmann::json to_json() const;

 private:
  friend Semiring make_semiring(const SemiringSpec&);
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<int> add_, mul_;
  int zero_ = 0, one_ = 0;
  bool has_order_ = false;
  std::vector<char> order_;  // flattened relation matrix (explicit or canonical)
};

/// Exhaustively checks every semiring law over the given tables. Returns the
/// full list of failing law instances; empty means valid.
std::vector<SemiringViolation> validate_semiring(const SemiringSpec& spec);

/// Validates and builds. Throws Error(LawViolation) carrying the violation
/// list as detail, or Error(TableShape) for malformed tables.
Semiring make_semiring(const SemiringSpec& spec);

/// The canonical preorder a <= b iff exists c with a (+) c = b, materialized
/// as a matrix. Always reflexive and transitive for a valid semiring.
std::vector<char> canonical_preorder(const Semiring& s);

/// Names of the builtin semirings: "boolean", "nat-trunc-<k>",
/// "maxmin-grid-<n>", "maxtimes-grid-<n>" (n = number of grid points).
std::vector<std::string> builtin_semiring_names();

/// Builds the spec of a builtin by name. Throws Error(UnknownName).
/// The result still has to pass make_semiring; in particular rounded
/// (max, *) grids may fail associativity and are rejected there.
SemiringSpec builtin_semiring_spec(const std::string& name);

/// Convenience: builtin spec + validation in one step.
Semiring builtin_semiring(const std::string& name);

/// Decidable predicates on weight vectors over a semiring. A weight vector is
/// a sequence of element indices.
enum class ElementPredicate {
  Any,               // no restriction (finite support is automatic here)
  Idempotent,        // every entry e satisfies e (*) e = e
  NormalisedRow,     // (+)-sum of entries equals one
  SubIdempotent,     // every entry e satisfies e <= e (*) e
  SubNormalised,     // (+)-sum of entries <= one
  SupportAtMostOne,  // at most one nonzero entry
};

const char* to_string(ElementPredicate p);

/// Evaluates a predicate on a weight vector. Order-based predicates use the
/// semiring's order (explicit or canonical).
bool satisfies(const Semiring& s, ElementPredicate p, const std::vector<int>& vec);

}  // namespace gsmon

#endif  // GSMON_SEMIRING_HPP
