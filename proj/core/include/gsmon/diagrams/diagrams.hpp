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

#ifndef GSMON_DIAGRAMS_DIAGRAMS_HPP
#define GSMON_DIAGRAMS_DIAGRAMS_HPP

#include <map>
#include <string>
#include <vector>

#include "../arrow_expr.hpp"
#include "../category.hpp"

namespace gsmon {

/// A free gs-monoidal signature: sorts plus typed generators.
struct Signature {
  struct Generator {
    std::string name;
    ObjectExpr dom, cod;
  };
  std::vector<std::string> sorts;
  std::vector<Generator> generators;

  bool has_sort(const std::string& s) const;
  const Generator* generator(const std::string& name) const;

  /// Parses lines of the form "sort A" and "gen f : A B -> C".
  static Signature parse(const std::string& text);
};

/// A term of the free gs-monoidal category: generators, id, sym, copy,
/// discard, ";" and "*". Stored with its resolved type.
struct DiagramTerm {
  ExprPtr expr;
  ObjectExpr dom, cod;
};

/// Parses a term against a signature. Grammar: ";" binds looser than "*",
/// parentheses group; structural arrows are written id_A, copy_A,
/// discard_A, sym_{A,B} where the subscripts are sort words (juxtaposed
/// names or brace-delimited, whitespace/comma separated).
/// Throws SyntaxError (with position), UnknownName, ArityMismatch.
DiagramTerm parse_term(const Signature& sig, const std::string& text);

/// Typechecks an already built expression tree.
DiagramTerm typecheck(const Signature& sig, const ExprPtr& expr);

/// The canonical port-hypergraph of a term: generator occurrences with
/// ordered ports, wires with one producer and any number of consumers
/// (copy = fan-out, discard = fan-out zero), and ordered interfaces.
struct TermGraph {
  struct Node {
    std::string gen;
    std::vector<int> ins;   // wire per input port
    std::vector<int> outs;  // wire per output port
  };
  std::vector<Node> nodes;
  std::vector<std::string> wire_sorts;
  std::vector<int> inputs;   // wire carrying interface input i
  std::vector<int> outputs;  // wire consumed at interface output k
  ObjectExpr dom, cod;

  int wire_count() const { return static_cast<int>(wire_sorts.size()); }

  /// Canonical byte encoding; equal exactly for isomorphic graphs.
  std::string encoding() const;
};

/// Translates a term to its canonical term graph (copy becomes wire
/// fan-out, discard fan-out zero, sym a crossing, ";" splices interfaces,
/// "*" juxtaposes) and canonicalizes node/wire numbering by colour
/// refinement with deterministic backtracking.
TermGraph to_term_graph(const Signature& sig, const DiagramTerm& term);

/// Free gs-monoidal equality: identity of canonical term graphs. Throws
/// TypeMismatch when the terms are not parallel.
bool diagrams_equal(const Signature& sig, const DiagramTerm& a, const DiagramTerm& b);

/// Deterministic DOT rendering of a canonical graph; equal graphs render to
/// byte-identical text. Wires with fan-out != 1 appear as junction points.
std::string to_dot(const TermGraph& g);

/// Functorial evaluation: sorts map to model objects, generators to model
/// morphisms. Throws AssignmentMismatch on type-inconsistent assignments.
struct Assignment {
  std::map<std::string, ObjectExpr> sorts;
  std::map<std::string, Morphism> generators;
};
Morphism evaluate(const DiagramTerm& term, const Signature& sig, const Assignment& assign,
                  const CategoryModel& model);

}  // namespace gsmon

#endif  // GSMON_DIAGRAMS_DIAGRAMS_HPP
