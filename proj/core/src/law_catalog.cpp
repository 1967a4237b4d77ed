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
//
// The law catalog. Every equation or inequality the engine can check is
// spelled out here once, as a pair of structural arrow terms over object
// metavariables $0,$1,$2,... and arrow metavariables f0,f1.

#include <map>

#include "gsmon/laws.hpp"

namespace gsmon {

namespace {

using ex::avar;
using ex::cocopy;
using ex::codischarge;
using ex::copy;
using ex::discard;
using ex::id;
using ex::seq;
using ex::sym;
using ex::ten;

const ObjPattern X = ObjPattern::var(0);
const ObjPattern Y = ObjPattern::var(1);
const ObjPattern W = ObjPattern::var(2);
const ObjPattern Z = ObjPattern::var(3);
const ObjPattern I = ObjPattern::unit();

ExprPtr f() { return avar(0); }
ExprPtr g() { return avar(1); }

// dom(h) for h : P -> Q, the derived restriction of an arrow.
ExprPtr dom_of(const ObjPattern& p, const ObjPattern& q, ExprPtr h) {
  return seq(copy(p), seq(ten(id(p), std::move(h)), ten(id(p), discard(q))));
}

void scan_caps(const ArrowExpr& e, LawSchema& s) {
  switch (e.kind) {
    case ArrowExpr::Kind::Copy: s.needs_copy = true; break;
    case ArrowExpr::Kind::Discard: s.needs_discard = true; break;
    case ArrowExpr::Kind::Cocopy: s.needs_cocopy = true; break;
    case ArrowExpr::Kind::Codischarge: s.needs_codischarge = true; break;
    case ArrowExpr::Kind::Compose:
    case ArrowExpr::Kind::Tensor:
      scan_caps(*e.lhs, s);
      scan_caps(*e.rhs, s);
      break;
    default:
      break;
  }
}

LawSchema make(LawId id, std::string name, int objs, std::vector<LawSchema::ArrowVar> arrows,
               std::vector<LawClause> clauses, std::vector<LawClause> guards = {}) {
  LawSchema s;
  s.id = id;
  s.name = std::move(name);
  s.object_vars = objs;
  s.arrow_vars = std::move(arrows);
  s.clauses = std::move(clauses);
  s.guards = std::move(guards);
  for (const auto& c : s.clauses) {
    scan_caps(*c.lhs, s);
    scan_caps(*c.rhs, s);
    if (c.rel == LawRel::Leq) s.needs_leq = true;
  }
  for (const auto& c : s.guards) {
    scan_caps(*c.lhs, s);
    scan_caps(*c.rhs, s);
  }
  return s;
}

LawClause eq(ExprPtr l, ExprPtr r) { return {std::move(l), std::move(r), LawRel::Eq}; }
LawClause le(ExprPtr l, ExprPtr r) { return {std::move(l), std::move(r), LawRel::Leq}; }

std::vector<LawSchema> build_catalog() {
  std::vector<LawSchema> laws;

  // --- share structure -----------------------------------------------------
  laws.push_back(make(LawId::ShareCoassoc, "share_coassoc", 1, {},
                      {eq(seq(copy(X), ten(copy(X), id(X))), seq(copy(X), ten(id(X), copy(X))))}));
  laws.push_back(make(LawId::ShareCocomm, "share_cocomm", 1, {},
                      {eq(seq(copy(X), sym(X, X)), copy(X))}));
  laws.push_back(make(
      LawId::ShareMultTensor, "share_mult_tensor", 2, {},
      {eq(copy(X + Y), seq(ten(copy(X), copy(Y)), ten(ten(id(X), sym(X, Y)), id(Y))))}));
  laws.push_back(make(LawId::ShareMultUnit, "share_mult_unit", 0, {}, {eq(copy(I), id(I))}));

  // --- garbage structure ---------------------------------------------------
  laws.push_back(make(LawId::GarbageMultTensor, "garbage_mult_tensor", 2, {},
                      {eq(discard(X + Y), ten(discard(X), discard(Y)))}));
  laws.push_back(
      make(LawId::GarbageMultUnit, "garbage_mult_unit", 0, {}, {eq(discard(I), id(I))}));

  // --- gs counit -----------------------------------------------------------
  laws.push_back(make(LawId::GsCounit, "gs_counit", 1, {},
                      {eq(seq(copy(X), ten(id(X), discard(X))), id(X)),
                       eq(seq(copy(X), ten(discard(X), id(X))), id(X))}));

  // --- copyable / discardable arrows ---------------------------------------
  auto functional_clause = eq(seq(f(), copy(Y)), seq(copy(X), ten(f(), f())));
  auto total_clause = eq(seq(f(), discard(Y)), discard(X));
  laws.push_back(make(LawId::Functional, "functional", 2, {{0, 1}}, {functional_clause}));
  laws.push_back(make(LawId::Total, "total", 2, {{0, 1}}, {total_clause}));
  laws.push_back(make(LawId::NatCopy, "nat_copy", 2, {{0, 1}}, {functional_clause}));
  laws.push_back(make(LawId::NatDiscard, "nat_discard", 2, {{0, 1}}, {total_clause}));

  // --- cogs duals ----------------------------------------------------------
  laws.push_back(make(LawId::CogsAssoc, "cogs_assoc", 1, {},
                      {eq(seq(ten(cocopy(X), id(X)), cocopy(X)),
                          seq(ten(id(X), cocopy(X)), cocopy(X)))}));
  laws.push_back(
      make(LawId::CogsComm, "cogs_comm", 1, {}, {eq(seq(sym(X, X), cocopy(X)), cocopy(X))}));
  laws.push_back(make(
      LawId::CogsMultTensor, "cogs_mult_tensor", 2, {},
      {eq(cocopy(X + Y), seq(ten(ten(id(X), sym(Y, X)), id(Y)), ten(cocopy(X), cocopy(Y))))}));
  laws.push_back(make(LawId::CogsMultUnit, "cogs_mult_unit", 0, {}, {eq(cocopy(I), id(I))}));
  laws.push_back(make(LawId::CogarbageMultTensor, "cogarbage_mult_tensor", 2, {},
                      {eq(codischarge(X + Y), ten(codischarge(X), codischarge(Y)))}));
  laws.push_back(
      make(LawId::CogarbageMultUnit, "cogarbage_mult_unit", 0, {}, {eq(codischarge(I), id(I))}));
  laws.push_back(make(LawId::CogsUnit, "cogs_unit", 1, {},
                      {eq(seq(ten(id(X), codischarge(X)), cocopy(X)), id(X)),
                       eq(seq(ten(codischarge(X), id(X)), cocopy(X)), id(X))}));
  auto cofunctional_clause = eq(seq(cocopy(X), f()), seq(ten(f(), f()), cocopy(Y)));
  auto cototal_clause = eq(seq(codischarge(X), f()), codischarge(Y));
  laws.push_back(make(LawId::Cofunctional, "cofunctional", 2, {{0, 1}}, {cofunctional_clause}));
  laws.push_back(make(LawId::Cototal, "cototal", 2, {{0, 1}}, {cototal_clause}));
  laws.push_back(make(LawId::NatCocopy, "nat_cocopy", 2, {{0, 1}}, {cofunctional_clause}));
  laws.push_back(
      make(LawId::NatCodischarge, "nat_codischarge", 2, {{0, 1}}, {cototal_clause}));

  // --- bimonoid interaction ------------------------------------------------
  laws.push_back(make(LawId::Bialg1, "bialg_mult_copy", 1, {},
                      {eq(seq(cocopy(X), copy(X)),
                          seq(ten(copy(X), copy(X)),
                              seq(ten(ten(id(X), sym(X, X)), id(X)),
                                  ten(cocopy(X), cocopy(X)))))}));
  laws.push_back(make(LawId::Bialg2, "bialg_mult_discard", 1, {},
                      {eq(seq(cocopy(X), discard(X)), ten(discard(X), discard(X)))}));
  laws.push_back(make(LawId::Bialg3, "bialg_unit_copy", 1, {},
                      {eq(seq(codischarge(X), copy(X)), ten(codischarge(X), codischarge(X)))}));
  laws.push_back(make(LawId::Bialg4, "bialg_unit_discard", 1, {},
                      {eq(seq(codischarge(X), discard(X)), id(I))}));
  laws.push_back(make(LawId::Frobenius, "frobenius", 1, {},
                      {eq(seq(cocopy(X), copy(X)),
                          seq(ten(id(X), copy(X)), ten(cocopy(X), id(X))))}));
  laws.push_back(
      make(LawId::Special, "special", 1, {}, {eq(seq(copy(X), cocopy(X)), id(X))}));
  laws.push_back(make(LawId::Connected, "connected", 1, {},
                      {eq(seq(discard(X), codischarge(X)), id(X))}));
  laws.push_back(make(LawId::Hopf, "hopf", 1, {},
                      {eq(seq(copy(X), cocopy(X)), seq(discard(X), codischarge(X)))}));

  // --- positivity (guarded) ------------------------------------------------
  {
    auto fg = seq(f(), g());
    auto guard = eq(seq(fg, copy(W)), seq(copy(X), ten(fg, fg)));
    auto clause = eq(seq(copy(X), ten(fg, f())), seq(f(), seq(copy(Y), ten(g(), id(Y)))));
    laws.push_back(
        make(LawId::Positivity, "positivity", 3, {{0, 1}, {1, 2}}, {clause}, {guard}));
  }

  // --- restriction axioms, with overline(f) := dom(f) -----------------------
  auto dom_f = [&] { return dom_of(X, Y, f()); };       // f : X -> Y
  auto dom_g_xw = [&] { return dom_of(X, W, g()); };    // g : X -> W
  auto dom_g_yw = [&] { return dom_of(Y, W, g()); };    // g : Y -> W
  laws.push_back(
      make(LawId::R1, "r1", 2, {{0, 1}}, {eq(seq(dom_f(), f()), f())}));
  laws.push_back(make(LawId::R2, "r2", 3, {{0, 1}, {0, 2}},
                      {eq(seq(dom_f(), dom_g_xw()), seq(dom_g_xw(), dom_f()))}));
  laws.push_back(make(LawId::R3, "r3", 3, {{0, 1}, {0, 2}},
                      {eq(dom_of(X, W, seq(dom_f(), g())), seq(dom_f(), dom_g_xw()))}));
  laws.push_back(make(LawId::R4, "r4", 3, {{0, 1}, {1, 2}},
                      {eq(seq(f(), dom_g_yw()), seq(dom_of(X, W, seq(f(), g())), f()))}));
  laws.push_back(make(LawId::RestrTerminal, "restr_terminal", 2, {{0, 1}},
                      {eq(seq(f(), discard(Y)), seq(dom_f(), discard(X)))}));

  // --- restriction products over the derived structure ----------------------
  laws.push_back(make(LawId::Rp1, "rp1", 1, {},
                      {eq(seq(copy(X), ten(id(X), discard(X))), id(X))}));
  laws.push_back(make(LawId::Rp2, "rp2", 1, {},
                      {eq(seq(copy(X), ten(discard(X), id(X))), id(X))}));
  laws.push_back(make(LawId::Rp3, "rp3", 2, {},
                      {eq(seq(copy(X + Y), ten(ten(id(X), discard(Y)), ten(discard(X), id(Y)))),
                          id(X + Y))}));
  // f : X -> W, g : Y -> Z below.
  laws.push_back(make(LawId::Rp4, "rp4", 4, {{0, 2}, {1, 3}},
                      {eq(seq(ten(dom_of(X, W, f()), dom_of(Y, Z, g())),
                              seq(ten(id(X), discard(Y)), f())),
                          seq(ten(f(), g()), ten(id(W), discard(Z))))}));
  laws.push_back(make(LawId::Rp5, "rp5", 4, {{0, 2}, {1, 3}},
                      {eq(seq(ten(dom_of(X, W, f()), dom_of(Y, Z, g())),
                              seq(ten(discard(X), id(Y)), g())),
                          seq(ten(f(), g()), ten(discard(W), id(Z))))}));
  laws.push_back(make(LawId::Rp6, "rp6", 2, {{0, 1}},
                      {eq(seq(dom_f(), seq(copy(X), ten(f(), f()))), seq(f(), copy(Y)))}));

  // --- enriched laws ---------------------------------------------------------
  laws.push_back(make(LawId::OplaxCopy, "oplax_copy", 2, {{0, 1}},
                      {le(seq(f(), copy(Y)), seq(copy(X), ten(f(), f())))}));
  laws.push_back(make(LawId::OplaxDiscard, "oplax_discard", 2, {{0, 1}},
                      {le(seq(f(), discard(Y)), discard(X))}));
  laws.push_back(make(LawId::OplaxCocopy, "oplax_cocopy", 2, {{0, 1}},
                      {le(seq(cocopy(X), f()), seq(ten(f(), f()), cocopy(Y)))}));
  laws.push_back(make(LawId::OplaxCodischarge, "oplax_codischarge", 2, {{0, 1}},
                      {le(seq(codischarge(X), f()), codischarge(Y))}));
  laws.push_back(make(LawId::OplaxRestrictionCond, "oplax_restriction_cond", 3, {{0, 1}, {1, 2}},
                      {le(seq(dom_of(X, W, seq(f(), g())), f()), seq(f(), dom_g_yw()))}));
  laws.push_back(make(LawId::LaxSpecial, "lax_special", 1, {},
                      {le(id(X), seq(copy(X), cocopy(X)))}));
  laws.push_back(make(LawId::LaxConnected, "lax_connected", 1, {},
                      {le(id(X), seq(discard(X), codischarge(X)))}));
  laws.push_back(make(LawId::AdjUnit, "adj_unit", 2, {{0, 1}, {1, 0}},
                      {le(id(X), seq(f(), g()))}));
  laws.push_back(make(LawId::AdjCounit, "adj_counit", 2, {{0, 1}, {1, 0}},
                      {le(seq(g(), f()), id(Y))}));
  laws.push_back(make(LawId::CbRightAdjCopy, "cb_right_adj_copy", 1, {},
                      {le(id(X), seq(copy(X), cocopy(X))),
                       le(seq(cocopy(X), copy(X)), id(X + X))}));
  laws.push_back(make(LawId::CbRightAdjDischarge, "cb_right_adj_discharge", 1, {},
                      {le(id(X), seq(discard(X), codischarge(X))),
                       le(seq(codischarge(X), discard(X)), id(I))}));
  laws.push_back(make(LawId::CbLaxIneqs, "cb_lax_ineqs", 1, {},
                      {le(seq(cocopy(X), copy(X)),
                          seq(ten(copy(X), copy(X)),
                              seq(ten(ten(id(X), sym(X, X)), id(X)),
                                  ten(cocopy(X), cocopy(X))))),
                       le(seq(cocopy(X), discard(X)), ten(discard(X), discard(X))),
                       le(seq(codischarge(X), copy(X)), ten(codischarge(X), codischarge(X))),
                       le(seq(codischarge(X), discard(X)), id(I))}));
  laws.push_back(make(LawId::CbExtraIneq, "cb_extra_ineq", 1, {},
                      {le(seq(cocopy(X), copy(X)), id(X + X))}));

  return laws;
}

}  // namespace

const std::vector<LawSchema>& law_catalog() {
  static const std::vector<LawSchema> catalog = build_catalog();
  return catalog;
}

const LawSchema& law_schema(LawId id) {
  for (const auto& s : law_catalog())
    if (s.id == id) return s;
  throw Error(ErrorKind::UnknownName, "law not in catalog");
}

std::optional<LawId> law_from_name(const std::string& name) {
  for (const auto& s : law_catalog())
    if (s.name == name) return s.id;
  return std::nullopt;
}

const std::string& law_name(LawId id) { return law_schema(id).name; }

}  // namespace gsmon
