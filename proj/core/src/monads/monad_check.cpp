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

#include "gsmon/monads/monad_check.hpp"

namespace gsmon {

bool MonadReport::all_pass() const {
  for (const auto& c : checks)
    if (c.status != LawStatus::Pass) return false;
  return true;
}

const MonadCheck* MonadReport::failing() const {
  for (const auto& c : checks)
    if (c.status == LawStatus::Counterexample) return &c;
  return nullptr;
}

nlohmann::json MonadReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"check", c.name}, {"status", to_string(c.status)}, {"cases", c.cases}};
    if (!c.witness.is_null()) j["witness"] = c.witness;
    arr.push_back(j);
  }
  return arr;
}

namespace {

// Driver for one diagram family. The callback either returns both sides for
// the given object tuple or throws CarrierTooLarge (degrades the check to
// budget-exhausted for that tuple).
struct Driver {
  const CategoryModel& base;
  const Budget& budget;

  MonadCheck run(const std::string& name, int arity,
                 const std::function<std::pair<Morphism, Morphism>(
                     const std::vector<ObjectExpr>&)>& sides,
                 bool leq = false) const {
    MonadCheck check;
    check.name = name;
    const auto words = enumerate_words(base, budget.max_word_len);
    std::vector<int> odo(arity, 0);
    bool truncated = false;
    while (true) {
      std::vector<ObjectExpr> objs;
      for (int i = 0; i < arity; ++i) objs.push_back(words[odo[i]]);
      try {
        auto [l, r] = sides(objs);
        ++check.cases;
        bool ok = leq ? hom_leq(base, l, r) : base.equal(l, r);
        if (!ok) {
          check.status = LawStatus::Counterexample;
          nlohmann::json ws = nlohmann::json::array();
          for (const auto& o : objs) ws.push_back(o.to_json());
          check.witness = {{"objects", ws},
                           {"lhs", base.morphism_to_json(l)},
                           {"rhs", base.morphism_to_json(r)}};
          return check;
        }
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::CarrierTooLarge)
          truncated = true;
        else
          throw;
      }
      int k = 0;
      for (; k < arity; ++k) {
        if (++odo[k] < static_cast<int>(words.size())) break;
        odo[k] = 0;
      }
      if (arity == 0 || k == arity) break;
    }
    check.status = truncated ? LawStatus::BudgetExhausted : LawStatus::Pass;
    return check;
  }

  // Diagram family additionally quantified over one base arrow f : X -> Y.
  MonadCheck run_arrow(const std::string& name,
                       const std::function<std::pair<Morphism, Morphism>(
                           const Morphism&)>& sides) const {
    MonadCheck check;
    check.name = name;
    const auto words = enumerate_words(base, budget.max_word_len);
    bool truncated = false;
    for (const auto& x : words)
      for (const auto& y : words) {
        std::optional<CategoryModel::HomEnum> homs;
        try {
          homs = base.hom_enumerate(x, y, budget.hom_cap, budget.seed);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::CarrierTooLarge) {
            truncated = true;
            continue;
          }
          throw;
        }
        if (!homs) {
          check.status = LawStatus::Unsupported;
          return check;
        }
        if (homs->truncated) truncated = true;
        for (const auto& f : homs->morphisms) {
          try {
            auto [l, r] = sides(f);
            ++check.cases;
            if (!base.equal(l, r)) {
              check.status = LawStatus::Counterexample;
              check.witness = {{"arrow", base.morphism_to_json(f)},
                               {"lhs", base.morphism_to_json(l)},
                               {"rhs", base.morphism_to_json(r)}};
              return check;
            }
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::CarrierTooLarge) {
              truncated = true;
              break;
            }
            throw;
          }
        }
      }
    check.status = truncated ? LawStatus::BudgetExhausted : LawStatus::Pass;
    return check;
  }

  // Diagram family quantified over composable pairs f : X -> Y, g : Y -> Z.
  MonadCheck run_arrow_pair(const std::string& name,
                            const std::function<std::pair<Morphism, Morphism>(
                                const Morphism&, const Morphism&)>& sides) const {
    MonadCheck check;
    check.name = name;
    const auto words = enumerate_words(base, budget.max_word_len);
    const int pair_cap = std::max(4, budget.hom_cap / 8);
    bool truncated = false;
    for (const auto& x : words)
      for (const auto& y : words)
        for (const auto& z : words) {
          std::optional<CategoryModel::HomEnum> fs, gs;
          try {
            fs = base.hom_enumerate(x, y, pair_cap, budget.seed);
            gs = base.hom_enumerate(y, z, pair_cap, budget.seed + 1);
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::CarrierTooLarge) {
              truncated = true;
              continue;
            }
            throw;
          }
          if (!fs || !gs) {
            check.status = LawStatus::Unsupported;
            return check;
          }
          if (fs->truncated || gs->truncated) truncated = true;
          for (const auto& f : fs->morphisms)
            for (const auto& g : gs->morphisms) {
              try {
                auto [l, r] = sides(f, g);
                ++check.cases;
                if (!base.equal(l, r)) {
                  check.status = LawStatus::Counterexample;
                  check.witness = {{"f", base.morphism_to_json(f)},
                                   {"g", base.morphism_to_json(g)},
                                   {"lhs", base.morphism_to_json(l)},
                                   {"rhs", base.morphism_to_json(r)}};
                  return check;
                }
              } catch (const Error& e) {
                if (e.kind() == ErrorKind::CarrierTooLarge) {
                  truncated = true;
                  goto next_pair;
                }
                throw;
              }
            }
        next_pair:;
        }
    check.status = truncated ? LawStatus::BudgetExhausted : LawStatus::Pass;
    return check;
  }
};

}  // namespace

MonadReport check_monad(const MonadModel& t, const Budget& budget) {
  budget.require_nonzero();
  const CategoryModel& c = *t.base();
  Driver drv{c, budget};
  MonadReport report;

  auto guard_carrier = [&](const ObjectExpr& x) {
    if (c.carrier(x).size() > budget.max_carrier)
      throw Error(ErrorKind::CarrierTooLarge, "carrier over budget at " + x.str());
    return x;
  };
  auto T = [&](const ObjectExpr& x) { return guard_carrier(t.t_obj(guard_carrier(x))); };

  report.checks.push_back(drv.run("functor_identity", 1, [&](const auto& o) {
    return std::pair{t.t_arr(c.identity(o[0])), c.identity(T(o[0]))};
  }));
  report.checks.push_back(drv.run_arrow("eta_naturality", [&](const Morphism& f) {
    T(f.dom);
    T(f.cod);
    return std::pair{c.compose(t.eta(f.dom), t.t_arr(f)), c.compose(f, t.eta(f.cod))};
  }));
  report.checks.push_back(drv.run_arrow_pair("functor_composition", [&](const Morphism& f,
                                                                        const Morphism& g) {
    T(f.dom);
    T(f.cod);
    T(g.cod);
    return std::pair{t.t_arr(c.compose(f, g)), c.compose(t.t_arr(f), t.t_arr(g))};
  }));
  report.checks.push_back(drv.run_arrow("mu_naturality", [&](const Morphism& f) {
    T(T(f.dom));
    T(T(f.cod));
    return std::pair{c.compose(t.t_arr(t.t_arr(f)), t.mu(f.cod)),
                     c.compose(t.mu(f.dom), t.t_arr(f))};
  }));
  report.checks.push_back(drv.run("monad_left_unit", 1, [&](const auto& o) {
    T(T(o[0]));
    return std::pair{c.compose(t.eta(t.t_obj(o[0])), t.mu(o[0])), c.identity(T(o[0]))};
  }));
  report.checks.push_back(drv.run("monad_right_unit", 1, [&](const auto& o) {
    T(T(o[0]));
    return std::pair{c.compose(t.t_arr(t.eta(o[0])), t.mu(o[0])), c.identity(T(o[0]))};
  }));
  report.checks.push_back(drv.run("monad_associativity", 1, [&](const auto& o) {
    T(T(T(o[0])));
    return std::pair{c.compose(t.t_arr(t.mu(o[0])), t.mu(o[0])),
                     c.compose(t.mu(t.t_obj(o[0])), t.mu(o[0]))};
  }));
  report.checks.push_back(drv.run("lax_associativity", 3, [&](const auto& o) {
    const auto &x = o[0], &y = o[1], &z = o[2];
    T(x * y * z);
    Morphism lhs = c.compose(c.tensor(t.lax_c(x, y), c.identity(T(z))), t.lax_c(x * y, z));
    Morphism rhs = c.compose(c.tensor(c.identity(T(x)), t.lax_c(y, z)), t.lax_c(x, y * z));
    return std::pair{lhs, rhs};
  }));
  report.checks.push_back(drv.run("lax_unitality", 1, [&](const auto& o) {
    const auto& x = o[0];
    T(x);
    Morphism left = c.compose(c.tensor(t.lax_u(), c.identity(T(x))),
                              t.lax_c(ObjectExpr::unit(), x));
    return std::pair{left, c.identity(T(x))};
  }));
  report.checks.push_back(drv.run("lax_unitality_right", 1, [&](const auto& o) {
    const auto& x = o[0];
    T(x);
    Morphism right = c.compose(c.tensor(c.identity(T(x)), t.lax_u()),
                               t.lax_c(x, ObjectExpr::unit()));
    return std::pair{right, c.identity(T(x))};
  }));
  report.checks.push_back(drv.run("lax_symmetry", 2, [&](const auto& o) {
    const auto &x = o[0], &y = o[1];
    T(x * y);
    T(y * x);
    Morphism lhs = c.compose(c.symmetry(T(x), T(y)), t.lax_c(y, x));
    Morphism rhs = c.compose(t.lax_c(x, y), t.t_arr(c.symmetry(x, y)));
    return std::pair{lhs, rhs};
  }));
  report.checks.push_back(drv.run("smm_eta_square", 2, [&](const auto& o) {
    const auto &x = o[0], &y = o[1];
    T(x * y);
    Morphism lhs = c.compose(c.tensor(t.eta(x), t.eta(y)), t.lax_c(x, y));
    return std::pair{lhs, t.eta(x * y)};
  }));
  report.checks.push_back(drv.run("smm_mu_square", 2, [&](const auto& o) {
    const auto &x = o[0], &y = o[1];
    T(T(x * y));
    T(T(x));
    T(T(y));
    Morphism lhs = c.compose(c.tensor(t.mu(x), t.mu(y)), t.lax_c(x, y));
    Morphism rhs = c.compose(t.lax_c(t.t_obj(x), t.t_obj(y)),
                             c.compose(t.t_arr(t.lax_c(x, y)), t.mu(x * y)));
    return std::pair{lhs, rhs};
  }));
  return report;
}

const char* to_string(MonadClass c) {
  switch (c) {
    case MonadClass::Affine: return "affine";
    case MonadClass::Relevant: return "relevant";
    case MonadClass::Gs: return "gs";
    case MonadClass::ColaxAffine: return "colax-affine";
    case MonadClass::ColaxRelevant: return "colax-relevant";
    case MonadClass::ColaxGs: return "colax-gs";
  }
  return "?";
}

MonadClass monad_class_from_name(const std::string& name) {
  if (name == "affine") return MonadClass::Affine;
  if (name == "relevant") return MonadClass::Relevant;
  if (name == "gs") return MonadClass::Gs;
  if (name == "colax-affine") return MonadClass::ColaxAffine;
  if (name == "colax-relevant") return MonadClass::ColaxRelevant;
  if (name == "colax-gs") return MonadClass::ColaxGs;
  throw Error(ErrorKind::UnknownKind, "monad class '" + name + "'");
}

MonadCheck check_monad_class(const MonadModel& t, MonadClass cls, const Budget& budget) {
  const CategoryModel& c = *t.base();
  const bool colax = cls == MonadClass::ColaxAffine || cls == MonadClass::ColaxRelevant ||
                     cls == MonadClass::ColaxGs;
  if (colax && !c.enriched())
    throw Error(ErrorKind::NotEnriched, "colax monad classes need an enriched base");

  if (cls == MonadClass::Gs || cls == MonadClass::ColaxGs) {
    MonadCheck a = check_monad_class(t, colax ? MonadClass::ColaxAffine : MonadClass::Affine,
                                     budget);
    if (a.status != LawStatus::Pass) {
      a.name = to_string(cls);
      return a;
    }
    MonadCheck r = check_monad_class(
        t, colax ? MonadClass::ColaxRelevant : MonadClass::Relevant, budget);
    r.name = to_string(cls);
    r.cases += a.cases;
    if (r.status == LawStatus::Pass && a.status == LawStatus::BudgetExhausted)
      r.status = LawStatus::BudgetExhausted;
    return r;
  }

  Driver drv{c, budget};
  const bool affine = cls == MonadClass::Affine || cls == MonadClass::ColaxAffine;
  auto guard_carrier = [&](const ObjectExpr& x) {
    if (c.carrier(x).size() > budget.max_carrier)
      throw Error(ErrorKind::CarrierTooLarge, "carrier over budget at " + x.str());
    return x;
  };

  MonadCheck check = drv.run(
      to_string(cls), 1,
      [&](const std::vector<ObjectExpr>& o) {
        const ObjectExpr& x = o[0];
        const ObjectExpr tx = guard_carrier(t.t_obj(guard_carrier(x)));
        if (affine) {
          auto ds = c.discard(x);
          auto dtx = c.discard(tx);
          if (!ds || !dtx)
            throw Error(ErrorKind::UnsupportedCapability, "affine check needs discard");
          // T(!_X) vs !_{T(X)} ; u
          return std::pair{t.t_arr(*ds), c.compose(*dtx, t.lax_u())};
        }
        auto cp = c.copy(x);
        auto ctx = c.copy(tx);
        if (!cp || !ctx)
          throw Error(ErrorKind::UnsupportedCapability, "relevant check needs copy");
        guard_carrier(t.t_obj(x * x));
        // T(copy_X) vs copy_{T(X)} ; c_{X,X}
        return std::pair{t.t_arr(*cp), c.compose(*ctx, t.lax_c(x, x))};
      },
      colax);
  return check;
}

}  // namespace gsmon
