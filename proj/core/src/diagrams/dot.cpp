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

#include <algorithm>
#include <sstream>

#include "gsmon/diagrams/diagrams.hpp"

namespace gsmon {

namespace {

struct Endpoint {
  std::string id;
};

}  // namespace

std::string to_dot(const TermGraph& g) {
  // Canonical ids make the output byte-stable for isomorphic graphs.
  std::ostringstream out;
  out << "digraph term {\n";
  out << "  rankdir=LR;\n";
  for (size_t i = 0; i < g.inputs.size(); ++i)
    out << "  in" << i << " [shape=plaintext,label=\"in" << i << ":" << g.dom.word[i]
        << "\"];\n";
  for (size_t o = 0; o < g.outputs.size(); ++o)
    out << "  out" << o << " [shape=plaintext,label=\"out" << o << ":" << g.cod.word[o]
        << "\"];\n";
  for (size_t n = 0; n < g.nodes.size(); ++n)
    out << "  n" << n << " [shape=box,label=\"" << g.nodes[n].gen << "\"];\n";

  // Producer and consumer endpoints per wire.
  std::vector<std::string> producer(g.wire_count());
  std::vector<std::vector<std::string>> consumers(g.wire_count());
  for (size_t i = 0; i < g.inputs.size(); ++i) producer[g.inputs[i]] = "in" + std::to_string(i);
  for (size_t o = 0; o < g.outputs.size(); ++o)
    consumers[g.outputs[o]].push_back("out" + std::to_string(o));
  for (size_t n = 0; n < g.nodes.size(); ++n) {
    for (int w : g.nodes[n].outs) producer[w] = "n" + std::to_string(n);
    for (int w : g.nodes[n].ins) consumers[w].push_back("n" + std::to_string(n));
  }
  for (int w = 0; w < g.wire_count(); ++w) {
    std::sort(consumers[w].begin(), consumers[w].end());
    const std::string label = g.wire_sorts[w];
    if (consumers[w].size() == 1) {
      out << "  " << producer[w] << " -> " << consumers[w][0] << " [label=\"" << label
          << "\"];\n";
    } else {
      // fan-out (or fan-out zero): render the wire as a junction point
      out << "  w" << w << " [shape=point,label=\"\"];\n";
      out << "  " << producer[w] << " -> w" << w << " [label=\"" << label << "\"];\n";
      for (const auto& c : consumers[w]) out << "  w" << w << " -> " << c << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace gsmon
