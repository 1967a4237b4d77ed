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
// Term graphs: translation from free gs-monoidal terms and canonical
// labeling. Copy is wire fan-out, discard is fan-out zero, so the comonoid
// laws hold by construction and equality in the free category becomes graph
// isomorphism with pinned interfaces. Canonical numbering is computed by
// iterated colour refinement with deterministic individualization.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gsmon/diagrams/diagrams.hpp"

namespace gsmon {

namespace {

// --- construction ----------------------------------------------------------

struct Builder {
  struct BWire {
    std::string sort;
    int parent;
  };
  std::vector<BWire> wires;
  struct BNode {
    std::string gen;
    std::vector<int> ins, outs;
  };
  std::vector<BNode> nodes;

  int fresh(const std::string& sort) {
    wires.push_back({sort, static_cast<int>(wires.size())});
    return static_cast<int>(wires.size()) - 1;
  }
  int find(int w) {
    while (wires[w].parent != w) {
      wires[w].parent = wires[wires[w].parent].parent;
      w = wires[w].parent;
    }
    return w;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) wires[b].parent = a;
  }
};

struct Iface {
  std::vector<int> ins, outs;
};

Iface build(Builder& b, const Signature& sig, const ArrowExpr& e) {
  static const std::vector<ObjectExpr> kNoBinding;
  auto word_of = [&](const ObjPattern& p) { return p.instantiate(kNoBinding); };
  auto fresh_word = [&](const ObjectExpr& w) {
    std::vector<int> ws;
    for (const auto& s : w.word) ws.push_back(b.fresh(s));
    return ws;
  };
  switch (e.kind) {
    case ArrowExpr::Kind::Id: {
      auto ws = fresh_word(word_of(e.a));
      return {ws, ws};
    }
    case ArrowExpr::Kind::Sym: {
      auto wa = fresh_word(word_of(e.a));
      auto wb = fresh_word(word_of(e.b));
      Iface f;
      f.ins = wa;
      f.ins.insert(f.ins.end(), wb.begin(), wb.end());
      f.outs = wb;
      f.outs.insert(f.outs.end(), wa.begin(), wa.end());
      return f;
    }
    case ArrowExpr::Kind::Copy: {
      auto ws = fresh_word(word_of(e.a));
      Iface f;
      f.ins = ws;
      f.outs = ws;
      f.outs.insert(f.outs.end(), ws.begin(), ws.end());
      return f;
    }
    case ArrowExpr::Kind::Discard: {
      auto ws = fresh_word(word_of(e.a));
      return {ws, {}};
    }
    case ArrowExpr::Kind::Gen: {
      const auto* g = sig.generator(e.gen);
      if (!g) throw Error(ErrorKind::UnknownName, "unknown generator '" + e.gen + "'");
      Builder::BNode node;
      node.gen = g->name;
      node.ins = fresh_word(g->dom);
      node.outs = fresh_word(g->cod);
      b.nodes.push_back(node);
      return {node.ins, node.outs};
    }
    case ArrowExpr::Kind::Compose: {
      Iface l = build(b, sig, *e.lhs);
      Iface r = build(b, sig, *e.rhs);
      if (l.outs.size() != r.ins.size())
        throw Error(ErrorKind::ArityMismatch, "interface mismatch in composition");
      for (size_t k = 0; k < l.outs.size(); ++k) b.unite(l.outs[k], r.ins[k]);
      return {l.ins, r.outs};
    }
    case ArrowExpr::Kind::Tensor: {
      Iface l = build(b, sig, *e.lhs);
      Iface r = build(b, sig, *e.rhs);
      Iface f;
      f.ins = l.ins;
      f.ins.insert(f.ins.end(), r.ins.begin(), r.ins.end());
      f.outs = l.outs;
      f.outs.insert(f.outs.end(), r.outs.begin(), r.outs.end());
      return f;
    }
    default:
      throw Error(ErrorKind::SyntaxError, "term uses a construct outside the free gs language");
  }
}

// --- canonicalization -------------------------------------------------------

struct RawGraph {
  std::vector<TermGraph::Node> nodes;
  std::vector<std::string> wire_sorts;
  std::vector<int> inputs, outputs;
};

// One colour-refinement pass; colours are relabelled by the sorted set of
// signature strings so they are invariant under renumbering.
struct Refiner {
  const RawGraph& g;
  std::vector<int> node_color, wire_color;

  explicit Refiner(const RawGraph& graph) : g(graph) {
    node_color.assign(g.nodes.size(), 0);
    wire_color.assign(g.wire_sorts.size(), 0);
    // seed wires with (sort, pinned interface positions)
    std::vector<std::string> wsig(g.wire_sorts.size());
    for (size_t w = 0; w < g.wire_sorts.size(); ++w) {
      std::string s = "s:" + g.wire_sorts[w];
      for (size_t i = 0; i < g.inputs.size(); ++i)
        if (g.inputs[i] == static_cast<int>(w)) s += "|in" + std::to_string(i);
      for (size_t o = 0; o < g.outputs.size(); ++o)
        if (g.outputs[o] == static_cast<int>(w)) s += "|out" + std::to_string(o);
      wsig[w] = s;
    }
    relabel(wsig, wire_color);
    std::vector<std::string> nsig(g.nodes.size());
    for (size_t n = 0; n < g.nodes.size(); ++n) nsig[n] = "g:" + g.nodes[n].gen;
    relabel(nsig, node_color);
  }

  static void relabel(const std::vector<std::string>& sig, std::vector<int>& color) {
    std::vector<std::string> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (size_t i = 0; i < sig.size(); ++i)
      color[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
  }

  // Refine until the partition stabilizes. Returns the number of classes.
  void run() {
    while (true) {
      std::vector<std::string> nsig(g.nodes.size()), wsig(g.wire_sorts.size());
      for (size_t n = 0; n < g.nodes.size(); ++n) {
        std::string s = std::to_string(node_color[n]);
        s += "|i";
        for (int w : g.nodes[n].ins) s += ":" + std::to_string(wire_color[w]);
        s += "|o";
        for (int w : g.nodes[n].outs) s += ":" + std::to_string(wire_color[w]);
        nsig[n] = s;
      }
      for (size_t w = 0; w < g.wire_sorts.size(); ++w) {
        std::string s = std::to_string(wire_color[w]);
        // producer
        std::string prod = "?";
        for (size_t i = 0; i < g.inputs.size(); ++i)
          if (g.inputs[i] == static_cast<int>(w)) prod = "I" + std::to_string(i);
        for (size_t n = 0; n < g.nodes.size(); ++n)
          for (size_t p = 0; p < g.nodes[n].outs.size(); ++p)
            if (g.nodes[n].outs[p] == static_cast<int>(w))
              prod = "N" + std::to_string(node_color[n]) + "." + std::to_string(p);
        s += "|p:" + prod;
        // consumers, as a sorted multiset
        std::vector<std::string> cons;
        for (size_t o = 0; o < g.outputs.size(); ++o)
          if (g.outputs[o] == static_cast<int>(w)) cons.push_back("O" + std::to_string(o));
        for (size_t n = 0; n < g.nodes.size(); ++n)
          for (size_t p = 0; p < g.nodes[n].ins.size(); ++p)
            if (g.nodes[n].ins[p] == static_cast<int>(w))
              cons.push_back("C" + std::to_string(node_color[n]) + "." + std::to_string(p));
        std::sort(cons.begin(), cons.end());
        for (const auto& cstr : cons) s += "|c:" + cstr;
        wsig[w] = s;
      }
      std::vector<int> nn(node_color), ww(wire_color);
      relabel(nsig, nn);
      relabel(wsig, ww);
      if (nn == node_color && ww == wire_color) return;
      node_color = std::move(nn);
      wire_color = std::move(ww);
    }
  }

  bool discrete() const {
    std::set<int> nc(node_color.begin(), node_color.end());
    std::set<int> wc(wire_color.begin(), wire_color.end());
    return nc.size() == node_color.size() && wc.size() == wire_color.size();
  }
};

std::string encode_with_order(const RawGraph& g, const std::vector<int>& node_rank,
                              const std::vector<int>& wire_rank, const ObjectExpr& dom,
                              const ObjectExpr& cod) {
  // node_rank/wire_rank: canonical index per original index
  std::vector<int> node_by_rank(g.nodes.size()), wire_by_rank(g.wire_sorts.size());
  for (size_t i = 0; i < node_rank.size(); ++i) node_by_rank[node_rank[i]] = static_cast<int>(i);
  for (size_t i = 0; i < wire_rank.size(); ++i) wire_by_rank[wire_rank[i]] = static_cast<int>(i);
  std::ostringstream out;
  out << "D";
  for (const auto& s : dom.word) out << ":" << s;
  out << "|C";
  for (const auto& s : cod.word) out << ":" << s;
  out << "|I";
  for (int w : g.inputs) out << ":" << wire_rank[w];
  out << "|O";
  for (int w : g.outputs) out << ":" << wire_rank[w];
  out << "|W";
  for (size_t r = 0; r < wire_by_rank.size(); ++r) out << ":" << g.wire_sorts[wire_by_rank[r]];
  out << "|N";
  for (size_t r = 0; r < node_by_rank.size(); ++r) {
    const auto& n = g.nodes[node_by_rank[r]];
    out << "[" << n.gen << ";";
    for (int w : n.ins) out << wire_rank[w] << ",";
    out << ";";
    for (int w : n.outs) out << wire_rank[w] << ",";
    out << "]";
  }
  return out.str();
}

// Ranks items by (color, tiebreak by original index) -- only called when the
// partition is discrete, so the tiebreak never fires.
std::vector<int> ranks_of(const std::vector<int>& color) {
  std::vector<int> idx(color.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (color[a] != color[b]) return color[a] < color[b];
    return a < b;
  });
  std::vector<int> rank(color.size());
  for (size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = static_cast<int>(r);
  return rank;
}

// Individualization-refinement search for the least canonical encoding.
std::string canonical_encoding(const RawGraph& g, const Refiner& ref, const ObjectExpr& dom,
                               const ObjectExpr& cod, int depth = 0) {
  if (depth > 64)
    throw Error(ErrorKind::CarrierTooLarge, "canonical labeling recursion limit");
  if (ref.discrete())
    return encode_with_order(g, ranks_of(ref.node_color), ranks_of(ref.wire_color), dom, cod);

  // Pick the first ambiguous class: prefer nodes, smallest color value.
  auto pick_class = [](const std::vector<int>& color) {
    std::map<int, std::vector<int>> classes;
    for (size_t i = 0; i < color.size(); ++i) classes[color[i]].push_back(static_cast<int>(i));
    for (const auto& [c, members] : classes)
      if (members.size() > 1) return members;
    return std::vector<int>{};
  };
  std::vector<int> members = pick_class(ref.node_color);
  const bool node_class = !members.empty();
  if (!node_class) members = pick_class(ref.wire_color);

  std::string best;
  for (int m : members) {
    Refiner child = ref;
    if (node_class)
      child.node_color[m] = static_cast<int>(child.node_color.size()) + child.node_color[m] + 1;
    else
      child.wire_color[m] = static_cast<int>(child.wire_color.size()) + child.wire_color[m] + 1;
    child.run();
    std::string enc = canonical_encoding(g, child, dom, cod, depth + 1);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

RawGraph compact(Builder& b, const Iface& iface) {
  RawGraph g;
  std::map<int, int> id;
  auto wire_id = [&](int w) {
    w = b.find(w);
    auto it = id.find(w);
    if (it != id.end()) return it->second;
    const int nid = static_cast<int>(g.wire_sorts.size());
    g.wire_sorts.push_back(b.wires[w].sort);
    id.emplace(w, nid);
    return nid;
  };
  // Interfaces first so that unreachable wires (discarded inputs of inner
  // terms) still get stable ids afterwards.
  for (int w : iface.ins) g.inputs.push_back(wire_id(w));
  for (int w : iface.outs) g.outputs.push_back(wire_id(w));
  for (const auto& n : b.nodes) {
    TermGraph::Node node;
    node.gen = n.gen;
    for (int w : n.ins) node.ins.push_back(wire_id(w));
    for (int w : n.outs) node.outs.push_back(wire_id(w));
    g.nodes.push_back(std::move(node));
  }
  return g;
}

TermGraph canonicalize(const RawGraph& g, const ObjectExpr& dom, const ObjectExpr& cod) {
  Refiner ref(g);
  ref.run();
  // Recover the canonical order by re-deriving it from the best encoding:
  // run the search once for the encoding, then reorder greedily to match.
  // To keep a single source of truth we recompute ranks by refining with
  // deterministic individualization along the same rule as the search.
  Refiner work = ref;
  while (!work.discrete()) {
    auto pick = [](const std::vector<int>& color) {
      std::map<int, std::vector<int>> classes;
      for (size_t i = 0; i < color.size(); ++i) classes[color[i]].push_back(static_cast<int>(i));
      for (const auto& [c, members] : classes)
        if (members.size() > 1) return members;
      return std::vector<int>{};
    };
    std::vector<int> members = pick(work.node_color);
    const bool node_class = !members.empty();
    if (!node_class) members = pick(work.wire_color);
    // Choose the member whose individualization yields the least encoding.
    std::string best;
    int best_member = members.front();
    for (int m : members) {
      Refiner child = work;
      if (node_class)
        child.node_color[m] = static_cast<int>(child.node_color.size()) + child.node_color[m] + 1;
      else
        child.wire_color[m] = static_cast<int>(child.wire_color.size()) + child.wire_color[m] + 1;
      child.run();
      std::string enc = canonical_encoding(g, child, dom, cod);
      if (best.empty() || enc < best) {
        best = std::move(enc);
        best_member = m;
      }
    }
    if (node_class)
      work.node_color[best_member] =
          static_cast<int>(work.node_color.size()) + work.node_color[best_member] + 1;
    else
      work.wire_color[best_member] =
          static_cast<int>(work.wire_color.size()) + work.wire_color[best_member] + 1;
    work.run();
  }

  const std::vector<int> node_rank = ranks_of(work.node_color);
  const std::vector<int> wire_rank = ranks_of(work.wire_color);
  TermGraph out;
  out.dom = dom;
  out.cod = cod;
  out.wire_sorts.resize(g.wire_sorts.size());
  for (size_t w = 0; w < g.wire_sorts.size(); ++w) out.wire_sorts[wire_rank[w]] = g.wire_sorts[w];
  out.nodes.resize(g.nodes.size());
  for (size_t n = 0; n < g.nodes.size(); ++n) {
    TermGraph::Node node;
    node.gen = g.nodes[n].gen;
    for (int w : g.nodes[n].ins) node.ins.push_back(wire_rank[w]);
    for (int w : g.nodes[n].outs) node.outs.push_back(wire_rank[w]);
    out.nodes[node_rank[n]] = std::move(node);
  }
  for (int w : g.inputs) out.inputs.push_back(wire_rank[w]);
  for (int w : g.outputs) out.outputs.push_back(wire_rank[w]);
  return out;
}

}  // namespace

std::string TermGraph::encoding() const {
  std::ostringstream out;
  out << "D";
  for (const auto& s : dom.word) out << ":" << s;
  out << "|C";
  for (const auto& s : cod.word) out << ":" << s;
  out << "|I";
  for (int w : inputs) out << ":" << w;
  out << "|O";
  for (int w : outputs) out << ":" << w;
  out << "|W";
  for (const auto& s : wire_sorts) out << ":" << s;
  out << "|N";
  for (const auto& n : nodes) {
    out << "[" << n.gen << ";";
    for (int w : n.ins) out << w << ",";
    out << ";";
    for (int w : n.outs) out << w << ",";
    out << "]";
  }
  return out.str();
}

TermGraph to_term_graph(const Signature& sig, const DiagramTerm& term) {
  Builder b;
  Iface iface = build(b, sig, *term.expr);
  RawGraph g = compact(b, iface);
  if (g.nodes.size() > 64)
    throw Error(ErrorKind::CarrierTooLarge, "term graph beyond desk scale (64 nodes)");
  return canonicalize(g, term.dom, term.cod);
}

bool diagrams_equal(const Signature& sig, const DiagramTerm& a, const DiagramTerm& b) {
  if (a.dom != b.dom || a.cod != b.cod)
    throw Error(ErrorKind::TypeMismatch, "terms have different types");
  return to_term_graph(sig, a).encoding() == to_term_graph(sig, b).encoding();
}

}  // namespace gsmon
