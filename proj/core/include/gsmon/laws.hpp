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

#ifndef GSMON_LAWS_HPP
#define GSMON_LAWS_HPP

#include <optional>
#include <string>
#include <vector>

#include "arrow_expr.hpp"
#include "category.hpp"

namespace gsmon {

/// Catalogued equations and inequalities between structural arrow terms.
enum class LawId {
  ShareCoassoc,
  ShareCocomm,
  ShareMultTensor,
  ShareMultUnit,
  GarbageMultTensor,
  GarbageMultUnit,
  GsCounit,
  Functional,
  Total,
  NatCopy,
  NatDiscard,
  // duals on the cogs side
  CogsAssoc,
  CogsComm,
  CogsMultTensor,
  CogsMultUnit,
  CogarbageMultTensor,
  CogarbageMultUnit,
  CogsUnit,
  Cofunctional,
  Cototal,
  NatCocopy,
  NatCodischarge,
  // monoid/comonoid interaction
  Bialg1,
  Bialg2,
  Bialg3,
  Bialg4,
  Frobenius,
  Special,
  Connected,
  Hopf,
  // conditional equation
  Positivity,
  // restriction structure via dom(f)
  R1,
  R2,
  R3,
  R4,
  RestrTerminal,
  Rp1,
  Rp2,
  Rp3,
  Rp4,
  Rp5,
  Rp6,
  // enriched laws
  OplaxCopy,
  OplaxDiscard,
  OplaxCocopy,
  OplaxCodischarge,
  OplaxRestrictionCond,
  LaxSpecial,
  LaxConnected,
  AdjUnit,
  AdjCounit,
  CbRightAdjCopy,
  CbRightAdjDischarge,
  CbLaxIneqs,
  CbExtraIneq,
};

enum class LawRel { Eq, Leq };

/// One equation or inequality of a law, as a pair of terms over the law's
/// metavariables.
struct LawClause {
  ExprPtr lhs, rhs;
  LawRel rel = LawRel::Eq;
};

/// Static description of a law: how many object metavariables it quantifies
/// over, the typing of its arrow metavariables, its clauses and guards, and
/// the structural capabilities its terms mention.
struct LawSchema {
  LawId id;
  std::string name;
  int object_vars = 0;
  struct ArrowVar {
    int dom_var, cod_var;  // object metavariable indices
  };
  std::vector<ArrowVar> arrow_vars;
  std::vector<LawClause> clauses;
  /// Guard clauses: bindings that fail a guard are vacuous (conditional laws).
  std::vector<LawClause> guards;

  bool needs_copy = false, needs_discard = false;
  bool needs_cocopy = false, needs_codischarge = false;
  bool needs_leq = false;
};

const std::vector<LawSchema>& law_catalog();
const LawSchema& law_schema(LawId id);
std::optional<LawId> law_from_name(const std::string& name);
const std::string& law_name(LawId id);

enum class LawStatus { Pass, Counterexample, BudgetExhausted, Unsupported };
const char* to_string(LawStatus s);

/// The first violating binding, with both evaluated sides.
struct LawWitness {
  LawBinding binding;
  int clause = 0;
  Morphism lhs_value, rhs_value;
};

/// Outcome of one law check over a model.
struct LawReport {
  LawId law{};
  std::string law_name;
  LawStatus status = LawStatus::Unsupported;
  std::optional<LawWitness> witness;
  long objects_checked = 0;
  long bindings_checked = 0;
  std::string note;

  bool passed() const { return status == LawStatus::Pass; }
  nlohmann::json to_json(const CategoryModel& model) const;
};

/// Enumerates all binding tuples of objects (words up to the budget's length
/// cap) and arrow metavariables (hom enumeration up to the budget's hom cap)
/// and checks every clause. Deterministic: the first witness in enumeration
/// order wins; sampling beyond the hom cap is seeded.
LawReport check_law(const CategoryModel& model, LawId law, const Budget& budget);

/// Re-evaluates a counterexample witness; true iff the violation reproduces
/// bit-exactly (and trivially true for witness-free reports).
bool replay_witness(const CategoryModel& model, const LawReport& report);

/// Capability passthrough with the usual preconditions. Throws NotEnriched /
/// NotParallel.
bool hom_leq(const CategoryModel& model, const Morphism& f, const Morphism& g);

/// The derived restriction structure: dom(f) = copy ; (id * f) ; (id * discard).
Morphism dom_arrow(const CategoryModel& model, const Morphism& f);

}  // namespace gsmon

#endif  // GSMON_LAWS_HPP
