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

#include "gsmon/laws.hpp"

#include <functional>

namespace gsmon {

const char* to_string(LawStatus s) {
  switch (s) {
    case LawStatus::Pass: return "pass";
    case LawStatus::Counterexample: return "counterexample";
    case LawStatus::BudgetExhausted: return "budget-exhausted";
    case LawStatus::Unsupported: return "unsupported-capability";
  }
  return "?";
}

bool hom_leq(const CategoryModel& model, const Morphism& f, const Morphism& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw Error(ErrorKind::NotParallel, "hom_leq on non-parallel arrows");
  auto v = model.hom_leq(f, g);
  if (!v) throw Error(ErrorKind::NotEnriched, "model '" + model.name() + "' has no hom preorder");
  return *v;
}

Morphism dom_arrow(const CategoryModel& model, const Morphism& f) {
  auto cp = model.copy(f.dom);
  auto ds = model.discard(f.cod);
  if (!cp || !ds)
    throw Error(ErrorKind::UnsupportedCapability, "dom(f) needs copy and discard");
  Morphism idf = model.tensor(model.identity(f.dom), f);
  Morphism idd = model.tensor(model.identity(f.dom), *ds);
  return model.compose(*cp, model.compose(idf, idd));
}

namespace {

uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

uint64_t binding_seed(const Budget& budget, const LawSchema& schema,
                      const std::vector<ObjectExpr>& objs) {
  uint64_t h = mix(budget.seed, std::hash<std::string>{}(schema.name));
  for (const auto& o : objs)
    for (const auto& s : o.word) h = mix(h, std::hash<std::string>{}(s));
  return h;
}

}  // namespace

nlohmann::json LawReport::to_json(const CategoryModel& model) const {
  nlohmann::json j;
  j["law"] = law_name;
  j["status"] = to_string(status);
  j["objects_checked"] = objects_checked;
  j["bindings_checked"] = bindings_checked;
  if (!note.empty()) j["note"] = note;
  if (witness) {
    nlohmann::json w;
    nlohmann::json objs = nlohmann::json::array();
    for (const auto& o : witness->binding.objects) objs.push_back(o.to_json());
    w["objects"] = objs;
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& a : witness->binding.arrows) arrows.push_back(model.morphism_to_json(a));
    w["arrows"] = arrows;
    w["clause"] = witness->clause;
    w["lhs"] = model.morphism_to_json(witness->lhs_value);
    w["rhs"] = model.morphism_to_json(witness->rhs_value);
    j["witness"] = w;
  }
  return j;
}

LawReport check_law(const CategoryModel& model, LawId law, const Budget& budget) {
  budget.require_nonzero();
  const LawSchema& schema = law_schema(law);

  LawReport report;
  report.law = law;
  report.law_name = schema.name;

  auto unsupported = [&](const std::string& what) {
    report.status = LawStatus::Unsupported;
    report.note = what;
    return report;
  };

  // Capability screening on the unit object; structural arrows on composite
  // words exist whenever the per-sort ones do.
  const ObjectExpr unit = ObjectExpr::unit();
  if (schema.needs_copy && !model.copy(unit)) return unsupported("copy");
  if (schema.needs_discard && !model.discard(unit)) return unsupported("discard");
  if (schema.needs_cocopy && !model.cocopy(unit)) return unsupported("cocopy");
  if (schema.needs_codischarge && !model.codischarge(unit)) return unsupported("codischarge");
  if (schema.needs_leq && !model.enriched()) return unsupported("hom_leq");

  const std::vector<ObjectExpr> words = enumerate_words(model, budget.max_word_len);
  const int nw = static_cast<int>(words.size());
  bool truncated = false;

  std::vector<int> odo(schema.object_vars, 0);
  while (true) {
    LawBinding binding;
    for (int i = 0; i < schema.object_vars; ++i) binding.objects.push_back(words[odo[i]]);
    ++report.objects_checked;

    bool carrier_ok = true;
    for (const auto& o : binding.objects) {
      try {
        if (model.carrier(o).size() > budget.max_carrier) carrier_ok = false;
      } catch (const Error&) {
        carrier_ok = false;
      }
      if (!carrier_ok) break;
    }
    if (!carrier_ok) truncated = true;

    if (carrier_ok) {
      // Enumerate arrow metavariables for this object binding.
      std::vector<CategoryModel::HomEnum> homs;
      bool supported = true;
      const uint64_t seed = binding_seed(budget, schema, binding.objects);
      for (const auto& av : schema.arrow_vars) {
        const ObjectExpr d = av.dom_var < 0 ? unit : binding.objects[av.dom_var];
        const ObjectExpr c = av.cod_var < 0 ? unit : binding.objects[av.cod_var];
        auto he = model.hom_enumerate(d, c, budget.hom_cap, seed);
        if (!he) {
          supported = false;
          break;
        }
        if (he->truncated) truncated = true;
        homs.push_back(std::move(*he));
      }
      if (!supported && !schema.arrow_vars.empty()) return unsupported("hom_enumerate");

      // Odometer over arrow tuples; empty arrow list means one binding.
      std::vector<size_t> aodo(schema.arrow_vars.size(), 0);
      bool more = true;
      for (const auto& h : homs)
        if (h.morphisms.empty()) more = false;
      while (more) {
        binding.arrows.clear();
        for (size_t i = 0; i < aodo.size(); ++i)
          binding.arrows.push_back(homs[i].morphisms[aodo[i]]);
        ++report.bindings_checked;

        bool guard_ok = true;
        for (const auto& gc : schema.guards) {
          Morphism l = eval_arrow(model, *gc.lhs, &binding);
          Morphism r = eval_arrow(model, *gc.rhs, &binding);
          if (!model.equal(l, r)) {
            guard_ok = false;
            break;
          }
        }
        if (guard_ok) {
          for (size_t ci = 0; ci < schema.clauses.size(); ++ci) {
            const auto& cl = schema.clauses[ci];
            Morphism l = eval_arrow(model, *cl.lhs, &binding);
            Morphism r = eval_arrow(model, *cl.rhs, &binding);
            const bool ok =
                cl.rel == LawRel::Eq ? model.equal(l, r) : hom_leq(model, l, r);
            if (!ok) {
              report.status = LawStatus::Counterexample;
              report.witness = LawWitness{binding, static_cast<int>(ci), l, r};
              return report;
            }
          }
        }

        // advance arrow odometer
        size_t k = 0;
        for (; k < aodo.size(); ++k) {
          if (++aodo[k] < homs[k].morphisms.size()) break;
          aodo[k] = 0;
        }
        if (k == aodo.size()) more = false;
        if (aodo.empty()) more = false;
      }
    }

    // advance object odometer
    int k = 0;
    for (; k < schema.object_vars; ++k) {
      if (++odo[k] < nw) break;
      odo[k] = 0;
    }
    if (schema.object_vars == 0 || k == schema.object_vars) break;
  }

  report.status = truncated ? LawStatus::BudgetExhausted : LawStatus::Pass;
  return report;
}

bool replay_witness(const CategoryModel& model, const LawReport& report) {
  if (!report.witness) return true;
  const LawSchema& schema = law_schema(report.law);
  const LawWitness& w = *report.witness;
  for (const auto& gc : schema.guards) {
    Morphism l = eval_arrow(model, *gc.lhs, &w.binding);
    Morphism r = eval_arrow(model, *gc.rhs, &w.binding);
    if (!model.equal(l, r)) return false;  // guard must still hold for a real witness
  }
  const auto& cl = schema.clauses.at(w.clause);
  Morphism l = eval_arrow(model, *cl.lhs, &w.binding);
  Morphism r = eval_arrow(model, *cl.rhs, &w.binding);
  if (!(l == w.lhs_value) || !(r == w.rhs_value)) return false;
  const bool ok = cl.rel == LawRel::Eq ? model.equal(l, r) : hom_leq(model, l, r);
  return !ok;
}

}  // namespace gsmon
