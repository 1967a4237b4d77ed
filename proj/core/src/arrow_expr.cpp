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

#include "gsmon/arrow_expr.hpp"

namespace gsmon {

ObjectExpr ObjPattern::instantiate(const std::vector<ObjectExpr>& binding) const {
  ObjectExpr out;
  for (const auto& atom : atoms) {
    if (atom.is_var) {
      if (atom.var < 0 || atom.var >= static_cast<int>(binding.size()))
        throw Error(ErrorKind::TypeMismatch, "unbound object metavariable");
      const auto& w = binding[atom.var].word;
      out.word.insert(out.word.end(), w.begin(), w.end());
    } else {
      out.word.push_back(atom.sort);
    }
  }
  return out;
}

namespace ex {

namespace {
ExprPtr node(ArrowExpr e) { return std::make_shared<const ArrowExpr>(std::move(e)); }
}

ExprPtr id(ObjPattern p) {
  ArrowExpr e;
  e.kind = ArrowExpr::Kind::Id;
  e.a = std::move(p);
  return node(std::move(e));
}
ExprPtr sym(ObjPattern p, ObjPattern q) {
  ArrowExpr e;
  e.kind = ArrowExpr::Kind::Sym;
  e.a = std::move(p);
  e.b = std::move(q);
  return node(std::move(e));
}
ExprPtr copy(ObjPattern p) {
  ArrowExpr e;
  e.kind = ArrowExpr::Kind::Copy;
  e.a = std::move(p);
  return node(std::move(e));
}
ExprPtr discard(ObjPattern p) {
  ArrowExpr e;
  e.kind = ArrowExpr::Kind::Discard;
  e.a = std::move(p);
  return node(std::move(e));
}
ExprPtr cocopy(ObjPattern p) {
  ArrowExpr e;
  e.kind = ArrowExpr::Kind::Cocopy;
  e.a = std::move(p);
  return node(std::move(e));
}
ExprPtr codischarge(ObjPattern p) {
  ArrowExpr e;
  e.kind = ArrowExpr::Kind::Codischarge;
  e.a = std::move(p);
  return node(std::move(e));
}
ExprPtr seq(ExprPtr f, ExprPtr g) {
  ArrowExpr e;
  e.kind = ArrowExpr::Kind::Compose;
  e.lhs = std::move(f);
  e.rhs = std::move(g);
  return node(std::move(e));
}
ExprPtr ten(ExprPtr f, ExprPtr g) {
  ArrowExpr e;
  e.kind = ArrowExpr::Kind::Tensor;
  e.lhs = std::move(f);
  e.rhs = std::move(g);
  return node(std::move(e));
}
ExprPtr gen(std::string name) {
  ArrowExpr e;
  e.kind = ArrowExpr::Kind::Gen;
  e.gen = std::move(name);
  return node(std::move(e));
}
ExprPtr leaf(Morphism m) {
  ArrowExpr e;
  e.kind = ArrowExpr::Kind::Leaf;
  e.leaf = std::make_shared<const Morphism>(std::move(m));
  return node(std::move(e));
}
ExprPtr avar(int i) {
  ArrowExpr e;
  e.kind = ArrowExpr::Kind::Var;
  e.var = i;
  return node(std::move(e));
}

}  // namespace ex

namespace {
std::string pattern_str(const ObjPattern& p) {
  if (p.atoms.empty()) return "I";
  std::string s;
  for (size_t i = 0; i < p.atoms.size(); ++i) {
    if (i) s += " ";
    s += p.atoms[i].is_var ? "$" + std::to_string(p.atoms[i].var) : p.atoms[i].sort;
  }
  return s;
}
}  // namespace

std::string ArrowExpr::str() const {
  switch (kind) {
    case Kind::Id: return "id_{" + pattern_str(a) + "}";
    case Kind::Sym: return "sym_{" + pattern_str(a) + "," + pattern_str(b) + "}";
    case Kind::Copy: return "copy_{" + pattern_str(a) + "}";
    case Kind::Discard: return "discard_{" + pattern_str(a) + "}";
    case Kind::Cocopy: return "cocopy_{" + pattern_str(a) + "}";
    case Kind::Codischarge: return "codischarge_{" + pattern_str(a) + "}";
    case Kind::Compose: return "(" + lhs->str() + " ; " + rhs->str() + ")";
    case Kind::Tensor: return "(" + lhs->str() + " * " + rhs->str() + ")";
    case Kind::Gen: return gen;
    case Kind::Leaf: return "<morphism " + leaf->dom.str() + "->" + leaf->cod.str() + ">";
    case Kind::Var: return "f" + std::to_string(var);
  }
  return "?";
}

Morphism eval_arrow(const CategoryModel& model, const ArrowExpr& e, const LawBinding* binding,
                    const std::map<std::string, Morphism>* gens) {
  static const std::vector<ObjectExpr> kEmpty;
  const std::vector<ObjectExpr>& objs = binding ? binding->objects : kEmpty;
  auto inst = [&](const ObjPattern& p) { return p.instantiate(objs); };
  auto require = [&](std::optional<Morphism> m, const char* what) {
    if (!m)
      throw Error(ErrorKind::UnsupportedStructural,
                  std::string(what) + " not supported by model '" + model.name() + "'");
    return *std::move(m);
  };

  switch (e.kind) {
    case ArrowExpr::Kind::Id:
      return model.identity(inst(e.a));
    case ArrowExpr::Kind::Sym:
      return model.symmetry(inst(e.a), inst(e.b));
    case ArrowExpr::Kind::Copy:
      return require(model.copy(inst(e.a)), "copy");
    case ArrowExpr::Kind::Discard:
      return require(model.discard(inst(e.a)), "discard");
    case ArrowExpr::Kind::Cocopy:
      return require(model.cocopy(inst(e.a)), "cocopy");
    case ArrowExpr::Kind::Codischarge:
      return require(model.codischarge(inst(e.a)), "codischarge");
    case ArrowExpr::Kind::Compose: {
      Morphism f = eval_arrow(model, *e.lhs, binding, gens);
      Morphism g = eval_arrow(model, *e.rhs, binding, gens);
      if (f.cod != g.dom)
        throw Error(ErrorKind::TypeMismatch,
                    "cannot compose " + e.lhs->str() + " : ->" + f.cod.str() + " with " +
                        e.rhs->str() + " : " + g.dom.str() + "->");
      return model.compose(f, g);
    }
    case ArrowExpr::Kind::Tensor: {
      Morphism f = eval_arrow(model, *e.lhs, binding, gens);
      Morphism g = eval_arrow(model, *e.rhs, binding, gens);
      return model.tensor(f, g);
    }
    case ArrowExpr::Kind::Gen: {
      if (!gens)
        throw Error(ErrorKind::AssignmentMismatch, "no generator assignment for '" + e.gen + "'");
      auto it = gens->find(e.gen);
      if (it == gens->end())
        throw Error(ErrorKind::AssignmentMismatch, "generator '" + e.gen + "' not assigned");
      return it->second;
    }
    case ArrowExpr::Kind::Leaf:
      return *e.leaf;
    case ArrowExpr::Kind::Var:
      if (!binding || e.var < 0 || e.var >= static_cast<int>(binding->arrows.size()))
        throw Error(ErrorKind::TypeMismatch, "unbound arrow metavariable " + e.str());
      return binding->arrows[e.var];
  }
  throw Error(ErrorKind::TypeMismatch, "malformed arrow expression");
}

}  // namespace gsmon
