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

#include "gsmon/taxonomy.hpp"

#include <algorithm>

namespace gsmon {

namespace {

const std::pair<PredicateId, const char*> kPredicateNames[] = {
    {PredicateId::Share, "share"},
    {PredicateId::Garbage, "garbage"},
    {PredicateId::Gs, "gs"},
    {PredicateId::Diagonals, "diagonals"},
    {PredicateId::Projections, "projections"},
    {PredicateId::Markov, "markov"},
    {PredicateId::Restriction, "restriction"},
    {PredicateId::RestrictionProducts, "restriction_products"},
    {PredicateId::Cartesian, "cartesian"},
    {PredicateId::Cogs, "cogs"},
    {PredicateId::Bigs, "bigs"},
    {PredicateId::Bialgebraic, "bialgebraic"},
    {PredicateId::Frobenius, "frobenius"},
    {PredicateId::Special, "special"},
    {PredicateId::Connected, "connected"},
    {PredicateId::Hopf, "hopf"},
    {PredicateId::Positive, "positive"},
    {PredicateId::WeaklyMarkov, "weakly_markov"},
    {PredicateId::OplaxCartesian, "oplax_cartesian"},
    {PredicateId::OplaxCocartesian, "oplax_cocartesian"},
    {PredicateId::OplaxBicartesian, "oplax_bicartesian"},
    {PredicateId::LaxSpecial, "lax_special"},
    {PredicateId::LaxConnected, "lax_connected"},
    {PredicateId::CartesianBicategory, "cartesian_bicategory"},
    {PredicateId::BicatRelations, "bicat_relations"},
    {PredicateId::BicatBialgebras, "bicat_bialgebras"},
};

std::vector<LawId> law_bundle(PredicateId p) {
  using L = LawId;
  static const std::vector<L> share = {L::ShareCoassoc, L::ShareCocomm, L::ShareMultTensor,
                                       L::ShareMultUnit};
  static const std::vector<L> garbage = {L::GarbageMultTensor, L::GarbageMultUnit};
  static const std::vector<L> cogs = {L::CogsAssoc,          L::CogsComm,
                                      L::CogsMultTensor,     L::CogsMultUnit,
                                      L::CogarbageMultTensor, L::CogarbageMultUnit,
                                      L::CogsUnit};
  auto cat = [](std::initializer_list<std::vector<L>> parts,
                std::initializer_list<L> extra = {}) {
    std::vector<L> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  };
  static const std::vector<L> gs = cat({share, garbage}, {L::GsCounit});
  switch (p) {
    case PredicateId::Share: return share;
    case PredicateId::Garbage: return garbage;
    case PredicateId::Gs: return gs;
    case PredicateId::Diagonals: return cat({share}, {L::NatCopy});
    case PredicateId::Projections: return cat({garbage}, {L::NatDiscard});
    case PredicateId::Markov: return gs;  // plus the terminal-unit scan
    case PredicateId::Restriction:
      return cat({gs}, {L::R1, L::R2, L::R3, L::R4, L::RestrTerminal});
    case PredicateId::RestrictionProducts:
      return cat({gs}, {L::R1, L::R2, L::R3, L::R4, L::RestrTerminal, L::Rp1, L::Rp2, L::Rp3,
                        L::Rp4, L::Rp5, L::Rp6});
    case PredicateId::Cartesian: return cat({gs}, {L::NatCopy, L::NatDiscard});
    case PredicateId::Cogs: return cogs;
    case PredicateId::Bigs: return cat({gs, cogs});
    case PredicateId::Bialgebraic:
      return cat({gs, cogs}, {L::Bialg1, L::Bialg2, L::Bialg3, L::Bialg4});
    case PredicateId::Frobenius: return cat({gs, cogs}, {L::Frobenius});
    case PredicateId::Special: return cat({gs, cogs}, {L::Special});
    case PredicateId::Connected: return cat({gs, cogs}, {L::Connected});
    case PredicateId::Hopf:
      return cat({gs, cogs}, {L::Bialg1, L::Bialg2, L::Bialg3, L::Bialg4, L::Hopf});
    case PredicateId::Positive: return cat({share}, {L::Positivity});
    case PredicateId::WeaklyMarkov: return gs;  // plus the hom-monoid scan
    case PredicateId::OplaxCartesian: return cat({gs}, {L::OplaxCopy, L::OplaxDiscard});
    case PredicateId::OplaxCocartesian:
      return cat({cogs}, {L::OplaxCocopy, L::OplaxCodischarge});
    case PredicateId::OplaxBicartesian:
      return cat({gs, cogs}, {L::OplaxCopy, L::OplaxDiscard, L::OplaxCocopy,
                              L::OplaxCodischarge});
    case PredicateId::LaxSpecial: return cat({gs, cogs}, {L::LaxSpecial});
    case PredicateId::LaxConnected: return cat({gs, cogs}, {L::LaxConnected});
    case PredicateId::CartesianBicategory:
      return cat({gs, cogs}, {L::OplaxCopy, L::OplaxDiscard, L::CbRightAdjCopy,
                              L::CbRightAdjDischarge, L::CbLaxIneqs});
    case PredicateId::BicatRelations:
      return cat({gs, cogs}, {L::OplaxCopy, L::OplaxDiscard, L::CbRightAdjCopy,
                              L::CbRightAdjDischarge, L::CbLaxIneqs, L::Frobenius});
    case PredicateId::BicatBialgebras:
      return cat({gs, cogs}, {L::OplaxCopy, L::OplaxDiscard, L::CbRightAdjCopy,
                              L::CbRightAdjDischarge, L::CbLaxIneqs, L::Bialg1, L::Bialg2,
                              L::Bialg3, L::Bialg4});
  }
  return {};
}

bool needs_posetal(PredicateId p) {
  return p == PredicateId::CartesianBicategory || p == PredicateId::BicatRelations ||
         p == PredicateId::BicatBialgebras;
}

}  // namespace

const char* to_string(PredicateId p) {
  for (const auto& [id, name] : kPredicateNames)
    if (id == p) return name;
  return "?";
}

std::optional<PredicateId> predicate_from_name(const std::string& name) {
  for (const auto& [id, n] : kPredicateNames)
    if (name == n) return id;
  return std::nullopt;
}

const std::vector<PredicateId>& all_predicates() {
  static const std::vector<PredicateId> ids = [] {
    std::vector<PredicateId> v;
    for (const auto& [id, name] : kPredicateNames) v.push_back(id);
    return v;
  }();
  return ids;
}

nlohmann::json PredicateReport::to_json(const CategoryModel& model) const {
  nlohmann::json j;
  j["status"] = to_string(status);
  nlohmann::json laws_json = nlohmann::json::array();
  for (const auto& l : laws) laws_json.push_back(l.to_json(model));
  j["laws"] = laws_json;
  if (!extra.is_null()) j["extra"] = extra;
  return j;
}

AdjointSearch find_right_adjoint(const CategoryModel& model, const Morphism& f,
                                 const Budget& budget) {
  if (!model.enriched()) throw Error(ErrorKind::NotEnriched, "adjoint search needs a preorder");
  AdjointSearch res;
  auto candidates = model.hom_enumerate(f.cod, f.dom, budget.hom_cap, budget.seed);
  if (!candidates)
    throw Error(ErrorKind::UnsupportedCapability, "adjoint search needs hom_enumerate");
  res.truncated = candidates->truncated;
  const Morphism id_dom = model.identity(f.dom);
  const Morphism id_cod = model.identity(f.cod);
  for (const auto& g : candidates->morphisms) {
    ++res.candidates_checked;
    const bool unit = hom_leq(model, id_dom, model.compose(f, g));
    const bool counit = hom_leq(model, model.compose(g, f), id_cod);
    if (unit && counit) {
      if (!res.adjoint) {
        res.adjoint = g;
      } else {
        const bool equiv = hom_leq(model, *res.adjoint, g) && hom_leq(model, g, *res.adjoint);
        if (!equiv) res.unique_up_to_order = false;
      }
    }
  }
  return res;
}

namespace {

void merge_status(LawStatus& acc, LawStatus s) {
  auto rank = [](LawStatus v) {
    switch (v) {
      case LawStatus::Counterexample: return 3;
      case LawStatus::Unsupported: return 2;
      case LawStatus::BudgetExhausted: return 1;
      case LawStatus::Pass: return 0;
    }
    return 0;
  };
  if (rank(s) > rank(acc)) acc = s;
}

// Every arrow into the unit must equal the discharger.
void markov_terminal_scan(const CategoryModel& model, const Budget& budget,
                          PredicateReport& report) {
  const auto words = enumerate_words(model, budget.max_word_len);
  nlohmann::json extra;
  extra["check"] = "terminal_unit";
  for (const auto& x : words) {
    auto ds = model.discard(x);
    if (!ds) {
      merge_status(report.status, LawStatus::Unsupported);
      return;
    }
    auto homs = model.hom_enumerate(x, ObjectExpr::unit(), budget.hom_cap, budget.seed);
    if (!homs) {
      merge_status(report.status, LawStatus::Unsupported);
      return;
    }
    if (homs->truncated) merge_status(report.status, LawStatus::BudgetExhausted);
    for (const auto& f : homs->morphisms)
      if (!model.equal(f, *ds)) {
        merge_status(report.status, LawStatus::Counterexample);
        extra["witness"] = {{"object", x.to_json()},
                            {"arrow", model.morphism_to_json(f)},
                            {"discharger", model.morphism_to_json(*ds)}};
        report.extra = extra;
        return;
      }
  }
  report.extra = extra;
}

// The hom-monoid C(X, I) with f * g = copy ; (f (x) g) and unit the
// discharger: every element must be invertible.
void weakly_markov_scan(const CategoryModel& model, const Budget& budget,
                        PredicateReport& report) {
  const auto words = enumerate_words(model, budget.max_word_len);
  nlohmann::json extra;
  extra["check"] = "hom_monoid_group";
  for (const auto& x : words) {
    auto cp = model.copy(x);
    auto ds = model.discard(x);
    if (!cp || !ds) {
      merge_status(report.status, LawStatus::Unsupported);
      return;
    }
    auto homs = model.hom_enumerate(x, ObjectExpr::unit(), budget.hom_cap, budget.seed);
    if (!homs) {
      merge_status(report.status, LawStatus::Unsupported);
      return;
    }
    if (homs->truncated) merge_status(report.status, LawStatus::BudgetExhausted);
    auto mult = [&](const Morphism& f, const Morphism& g) {
      return model.compose(*cp, model.tensor(f, g));
    };
    for (const auto& f : homs->morphisms) {
      bool invertible = false;
      for (const auto& g : homs->morphisms)
        if (model.equal(mult(f, g), *ds)) {
          invertible = true;
          break;
        }
      if (!invertible) {
        merge_status(report.status, LawStatus::Counterexample);
        extra["witness"] = {{"object", x.to_json()},
                            {"element", model.morphism_to_json(f)}};
        report.extra = extra;
        return;
      }
    }
  }
  report.extra = extra;
}

// Spot-checks antisymmetry of the hom preorder on enumerated homs.
bool posetal_verified(const CategoryModel& model, const Budget& budget) {
  if (!model.posetal()) return false;
  const auto words = enumerate_words(model, std::min(budget.max_word_len, 1));
  for (const auto& x : words)
    for (const auto& y : words) {
      auto homs = model.hom_enumerate(x, y, std::min(budget.hom_cap, 64), budget.seed);
      if (!homs) continue;
      for (const auto& f : homs->morphisms)
        for (const auto& g : homs->morphisms) {
          auto le = model.hom_leq(f, g);
          auto ge = model.hom_leq(g, f);
          if (le && ge && *le && *ge && !model.equal(f, g)) return false;
        }
    }
  return true;
}

}  // namespace

PredicateReport predicate(const CategoryModel& model, PredicateId p, const Budget& budget) {
  budget.require_nonzero();
  PredicateReport report;
  report.id = p;
  report.name = to_string(p);
  report.status = LawStatus::Pass;

  if (needs_posetal(p)) {
    if (!model.enriched()) {
      report.status = LawStatus::Unsupported;
      report.extra = {{"note", "not enriched"}};
      return report;
    }
    if (!posetal_verified(model, budget)) {
      report.status = LawStatus::Counterexample;
      report.extra = {{"note", "hom preorder is not antisymmetric"}};
      return report;
    }
  }

  for (LawId law : law_bundle(p)) {
    LawReport lr = check_law(model, law, budget);
    merge_status(report.status, lr.status);
    const bool failed = lr.status == LawStatus::Counterexample;
    report.laws.push_back(std::move(lr));
    if (failed) break;  // first witness in bundle order wins
  }
  if (report.status == LawStatus::Counterexample || report.status == LawStatus::Unsupported)
    return report;

  if (p == PredicateId::Markov) markov_terminal_scan(model, budget, report);
  if (p == PredicateId::WeaklyMarkov) weakly_markov_scan(model, budget, report);
  return report;
}

const PredicateReport* TaxonomyReport::find(PredicateId p) const {
  for (const auto& r : predicates)
    if (r.id == p) return &r;
  return nullptr;
}

nlohmann::json TaxonomyReport::to_json(const CategoryModel& model) const {
  nlohmann::json preds = nlohmann::json::object();
  for (const auto& r : predicates) preds[r.name] = r.to_json(model);
  nlohmann::json j;
  j["predicates"] = preds;
  j["implications_ok"] = implications_ok;
  if (!implication_violations.empty()) j["implication_violations"] = implication_violations;
  if (!derived.is_null()) j["derived"] = derived;
  j["budget"] = {{"max_word_len", budget.max_word_len},
                 {"hom_cap", budget.hom_cap},
                 {"max_carrier", budget.max_carrier},
                 {"seed", budget.seed}};
  return j;
}

namespace {

struct Implication {
  std::vector<PredicateId> all_of;
  PredicateId then;
  const char* name;
};

const std::vector<Implication>& implications() {
  using P = PredicateId;
  static const std::vector<Implication> imps = {
      {{P::Gs}, P::Share, "gs => share"},
      {{P::Gs}, P::Garbage, "gs => garbage"},
      {{P::Diagonals}, P::Share, "diagonals => share"},
      {{P::Projections}, P::Garbage, "projections => garbage"},
      {{P::Markov}, P::Gs, "markov => gs"},
      {{P::Markov}, P::Projections, "markov => projections"},
      {{P::Markov}, P::WeaklyMarkov, "markov => weakly_markov"},
      {{P::RestrictionProducts}, P::Restriction, "restriction_products => restriction"},
      {{P::RestrictionProducts}, P::Diagonals, "restriction_products => diagonals"},
      {{P::Cartesian}, P::Diagonals, "cartesian => diagonals"},
      {{P::Cartesian}, P::Projections, "cartesian => projections"},
      {{P::Cartesian}, P::Markov, "cartesian => markov"},
      {{P::Cartesian}, P::RestrictionProducts, "cartesian => restriction_products"},
      {{P::Diagonals}, P::Positive, "diagonals => positive"},
      {{P::Bigs}, P::Gs, "bigs => gs"},
      {{P::Bigs}, P::Cogs, "bigs => cogs"},
      {{P::Bialgebraic}, P::Bigs, "bialgebraic => bigs"},
      {{P::Frobenius}, P::Bigs, "frobenius => bigs"},
      {{P::Hopf}, P::Bialgebraic, "hopf => bialgebraic"},
      {{P::Frobenius, P::Bialgebraic}, P::Connected, "frobenius & bialgebraic => connected"},
      {{P::OplaxBicartesian}, P::OplaxCartesian, "oplax_bicartesian => oplax_cartesian"},
      {{P::OplaxBicartesian}, P::OplaxCocartesian, "oplax_bicartesian => oplax_cocartesian"},
      {{P::CartesianBicategory}, P::OplaxCartesian, "cartesian_bicategory => oplax_cartesian"},
      {{P::CartesianBicategory}, P::OplaxCocartesian,
       "cartesian_bicategory => oplax_cocartesian"},
      {{P::CartesianBicategory}, P::LaxSpecial, "cartesian_bicategory => lax_special"},
      {{P::CartesianBicategory}, P::LaxConnected, "cartesian_bicategory => lax_connected"},
      {{P::BicatRelations}, P::CartesianBicategory, "bicat_relations => cartesian_bicategory"},
      {{P::BicatRelations}, P::Frobenius, "bicat_relations => frobenius"},
      {{P::BicatBialgebras}, P::CartesianBicategory,
       "bicat_bialgebras => cartesian_bicategory"},
      {{P::BicatBialgebras}, P::Bialgebraic, "bicat_bialgebras => bialgebraic"},
      {{P::Positive, P::OplaxCartesian}, P::Restriction,
       "positive & posetal oplax_cartesian => restriction"},
  };
  return imps;
}

// Functional / total / map hom counts over small words.
nlohmann::json derived_facts(const CategoryModel& model, const Budget& budget) {
  nlohmann::json out = nlohmann::json::array();
  const bool has_copy = model.copy(ObjectExpr::unit()).has_value();
  const bool has_discard = model.discard(ObjectExpr::unit()).has_value();
  if (!has_copy || !has_discard) return out;
  const auto words = enumerate_words(model, std::min(budget.max_word_len, 1));
  for (const auto& x : words)
    for (const auto& y : words) {
      auto homs = model.hom_enumerate(x, y, budget.hom_cap, budget.seed);
      if (!homs || homs->truncated) continue;
      long functional = 0, total = 0, both = 0, maps = 0;
      for (const auto& f : homs->morphisms) {
        const Morphism lf = model.compose(f, *model.copy(y));
        const Morphism rf = model.compose(*model.copy(x), model.tensor(f, f));
        const bool is_fun = model.equal(lf, rf);
        const bool is_tot =
            model.equal(model.compose(f, *model.discard(y)), *model.discard(x));
        functional += is_fun;
        total += is_tot;
        both += is_fun && is_tot;
        if (model.enriched()) {
          Budget b = budget;
          maps += find_right_adjoint(model, f, b).adjoint.has_value();
        }
      }
      nlohmann::json row;
      row["dom"] = x.to_json();
      row["cod"] = y.to_json();
      row["hom"] = homs->morphisms.size();
      row["functional"] = functional;
      row["total"] = total;
      row["total_functional"] = both;
      if (model.enriched()) row["maps"] = maps;
      out.push_back(row);
    }
  return out;
}

}  // namespace

TaxonomyReport classify(const CategoryModel& model, const Budget& budget) {
  TaxonomyReport report;
  report.budget = budget;
  for (PredicateId p : all_predicates()) report.predicates.push_back(predicate(model, p, budget));

  for (const auto& imp : implications()) {
    bool antecedent = true;
    bool decided = true;
    for (PredicateId a : imp.all_of) {
      const auto* r = report.find(a);
      if (!r || (r->status != LawStatus::Pass && r->status != LawStatus::Counterexample))
        decided = false;
      else
        antecedent = antecedent && r->passed();
    }
    const auto* c = report.find(imp.then);
    if (!decided || !c ||
        (c->status != LawStatus::Pass && c->status != LawStatus::Counterexample))
      continue;
    if (antecedent && !c->passed()) {
      report.implications_ok = false;
      report.implication_violations.push_back(imp.name);
    }
  }
  report.derived = derived_facts(model, budget);
  return report;
}

}  // namespace gsmon
