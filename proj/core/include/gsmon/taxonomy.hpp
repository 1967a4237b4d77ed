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

#ifndef GSMON_TAXONOMY_HPP
#define GSMON_TAXONOMY_HPP

#include <map>

#include "laws.hpp"

namespace gsmon {

/// Positions in the taxonomy lattices: the one-dimensional diagram of
/// share/garbage/gs categories and its preorder-enriched counterpart.
enum class PredicateId {
  Share,
  Garbage,
  Gs,
  Diagonals,
  Projections,
  Markov,
  Restriction,
  RestrictionProducts,
  Cartesian,
  Cogs,
  Bigs,
  Bialgebraic,
  Frobenius,
  Special,
  Connected,
  Hopf,
  Positive,
  WeaklyMarkov,
  OplaxCartesian,
  OplaxCocartesian,
  OplaxBicartesian,
  LaxSpecial,
  LaxConnected,
  CartesianBicategory,
  BicatRelations,
  BicatBialgebras,
};

const char* to_string(PredicateId p);
std::optional<PredicateId> predicate_from_name(const std::string& name);
const std::vector<PredicateId>& all_predicates();

/// Verdict for one predicate: the aggregated status of its law bundle plus
/// any non-equational evidence (terminal-unit scan, hom-monoid inverses,
/// adjoint searches).
struct PredicateReport {
  PredicateId id{};
  std::string name;
  LawStatus status = LawStatus::Unsupported;
  std::vector<LawReport> laws;
  nlohmann::json extra;

  bool passed() const { return status == LawStatus::Pass; }
  nlohmann::json to_json(const CategoryModel& model) const;
};

/// Right-adjoint search over enumerated parallel candidates, in
/// deterministic order. Also reports whether the adjoint found is unique up
/// to order-equivalence among the candidates.
struct AdjointSearch {
  std::optional<Morphism> adjoint;
  bool unique_up_to_order = true;
  bool truncated = false;
  long candidates_checked = 0;
};
AdjointSearch find_right_adjoint(const CategoryModel& model, const Morphism& f,
                                 const Budget& budget);

/// Decides one predicate with witnesses.
PredicateReport predicate(const CategoryModel& model, PredicateId p, const Budget& budget);

/// The aggregated classification: every applicable predicate plus the
/// paper-implication cross-check (a violated implication is an engine bug,
/// reported, never silently accepted).
struct TaxonomyReport {
  std::vector<PredicateReport> predicates;
  bool implications_ok = true;
  std::vector<std::string> implication_violations;
  nlohmann::json derived;  // functional/total/map hom counts on small words
  Budget budget;

  const PredicateReport* find(PredicateId p) const;
  nlohmann::json to_json(const CategoryModel& model) const;
};

TaxonomyReport classify(const CategoryModel& model, const Budget& budget);

}  // namespace gsmon

#endif  // GSMON_TAXONOMY_HPP
