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

#include "gsmon/diagrams/diagrams.hpp"

namespace gsmon {

namespace {

// Substitutes model objects for signature sorts inside an object word.
ObjectExpr translate_word(const ObjectExpr& w, const Assignment& assign) {
  ObjectExpr out;
  for (const auto& s : w.word) {
    auto it = assign.sorts.find(s);
    if (it == assign.sorts.end())
      throw Error(ErrorKind::AssignmentMismatch, "sort '" + s + "' not assigned");
    out = out * it->second;
  }
  return out;
}

Morphism eval(const ArrowExpr& e, const Signature& sig, const Assignment& assign,
              const CategoryModel& model) {
  static const std::vector<ObjectExpr> kNoBinding;
  auto word_of = [&](const ObjPattern& p) {
    return translate_word(p.instantiate(kNoBinding), assign);
  };
  auto require = [&](std::optional<Morphism> m, const char* what) {
    if (!m)
      throw Error(ErrorKind::UnsupportedStructural,
                  std::string(what) + " not supported by model '" + model.name() + "'");
    return *std::move(m);
  };
  switch (e.kind) {
    case ArrowExpr::Kind::Id:
      return model.identity(word_of(e.a));
    case ArrowExpr::Kind::Sym:
      return model.symmetry(word_of(e.a), word_of(e.b));
    case ArrowExpr::Kind::Copy:
      return require(model.copy(word_of(e.a)), "copy");
    case ArrowExpr::Kind::Discard:
      return require(model.discard(word_of(e.a)), "discard");
    case ArrowExpr::Kind::Gen: {
      const auto* g = sig.generator(e.gen);
      if (!g) throw Error(ErrorKind::UnknownName, "unknown generator '" + e.gen + "'");
      auto it = assign.generators.find(e.gen);
      if (it == assign.generators.end())
        throw Error(ErrorKind::AssignmentMismatch, "generator '" + e.gen + "' not assigned");
      const Morphism& m = it->second;
      if (m.dom != translate_word(g->dom, assign) || m.cod != translate_word(g->cod, assign))
        throw Error(ErrorKind::AssignmentMismatch,
                    "assignment for '" + e.gen + "' has the wrong type");
      return m;
    }
    case ArrowExpr::Kind::Compose: {
      Morphism f = eval(*e.lhs, sig, assign, model);
      Morphism g = eval(*e.rhs, sig, assign, model);
      return model.compose(f, g);
    }
    case ArrowExpr::Kind::Tensor: {
      Morphism f = eval(*e.lhs, sig, assign, model);
      Morphism g = eval(*e.rhs, sig, assign, model);
      return model.tensor(f, g);
    }
    default:
      throw Error(ErrorKind::SyntaxError, "term uses a construct outside the free gs language");
  }
}

}  // namespace

Morphism evaluate(const DiagramTerm& term, const Signature& sig, const Assignment& assign,
                  const CategoryModel& model) {
  return eval(*term.expr, sig, assign, model);
}

}  // namespace gsmon
