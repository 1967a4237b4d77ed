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

#ifndef GSMON_ARROW_EXPR_HPP
#define GSMON_ARROW_EXPR_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "category.hpp"
#include "morphism.hpp"
#include "object.hpp"

namespace gsmon {

/// An object word with holes: a concatenation of fixed sorts and object
/// metavariables. Law schemas use patterns; concrete terms use var-free ones.
struct ObjPattern {
  struct Atom {
    bool is_var = false;
    std::string sort;  // when !is_var
    int var = -1;      // when is_var
  };
  std::vector<Atom> atoms;

  static ObjPattern unit() { return {}; }
  static ObjPattern var(int i) {
    ObjPattern p;
    p.atoms.push_back({true, "", i});
    return p;
  }
  static ObjPattern word(const ObjectExpr& w) {
    ObjPattern p;
    for (const auto& s : w.word) p.atoms.push_back({false, s, -1});
    return p;
  }
  friend ObjPattern operator+(ObjPattern a, const ObjPattern& b) {
    a.atoms.insert(a.atoms.end(), b.atoms.begin(), b.atoms.end());
    return a;
  }

  ObjectExpr instantiate(const std::vector<ObjectExpr>& binding) const;
};

/// Syntax tree of a structural arrow term: generator references, structural
/// arrows, named morphism leaves, arrow metavariables, sequential (";") and
/// parallel ("*") composition. The textual carrier of string diagrams.
class ArrowExpr {
 public:
  enum class Kind {
    Id,           // id_P
    Sym,          // sym_{P,Q}
    Copy,         // copy_P
    Discard,      // discard_P
    Cocopy,       // cocopy_P
    Codischarge,  // codischarge_P
    Compose,      // lhs ; rhs
    Tensor,       // lhs * rhs
    Gen,          // named generator (free terms)
    Leaf,         // concrete morphism
    Var,          // arrow metavariable (law schemas)
  };

  Kind kind = Kind::Id;
  ObjPattern a, b;  // object arguments (b only for Sym)
  std::shared_ptr<const ArrowExpr> lhs, rhs;
  std::string gen;
  std::shared_ptr<const Morphism> leaf;
  int var = -1;

  std::string str() const;
};

using ExprPtr = std::shared_ptr<const ArrowExpr>;

namespace ex {
ExprPtr id(ObjPattern p);
ExprPtr sym(ObjPattern p, ObjPattern q);
ExprPtr copy(ObjPattern p);
ExprPtr discard(ObjPattern p);
ExprPtr cocopy(ObjPattern p);
ExprPtr codischarge(ObjPattern p);
ExprPtr seq(ExprPtr f, ExprPtr g);
ExprPtr ten(ExprPtr f, ExprPtr g);
ExprPtr gen(std::string name);
ExprPtr leaf(Morphism m);
ExprPtr avar(int i);
}  // namespace ex

/// Bound metavariables of a law instance.
struct LawBinding {
  std::vector<ObjectExpr> objects;
  std::vector<Morphism> arrows;
};

/// Evaluates a structural arrow term in a model. Metavariables resolve
/// through `binding`, generator references through `gens`. Throws
/// TypeMismatch (with the offending subterm) and UnsupportedStructural.
Morphism eval_arrow(const CategoryModel& model, const ArrowExpr& e,
                    const LawBinding* binding = nullptr,
                    const std::map<std::string, Morphism>* gens = nullptr);

}  // namespace gsmon

#endif  // GSMON_ARROW_EXPR_HPP
