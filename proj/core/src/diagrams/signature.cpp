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

#include <sstream>

#include "gsmon/diagrams/diagrams.hpp"

namespace gsmon {

bool Signature::has_sort(const std::string& s) const {
  for (const auto& x : sorts)
    if (x == s) return true;
  return false;
}

const Signature::Generator* Signature::generator(const std::string& name) const {
  for (const auto& g : generators)
    if (g.name == name) return &g;
  return nullptr;
}

Signature Signature::parse(const std::string& text) {
  Signature sig;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& msg) {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "sort") {
      std::string name;
      if (!(ls >> name)) bad("expected sort name");
      if (sig.has_sort(name)) bad("duplicate sort '" + name + "'");
      sig.sorts.push_back(name);
      std::string rest;
      if (ls >> rest) bad("trailing tokens after sort declaration");
    } else if (head == "gen") {
      std::string name, tok;
      if (!(ls >> name)) bad("expected generator name");
      if (sig.generator(name)) bad("duplicate generator '" + name + "'");
      if (!(ls >> tok) || tok != ":") bad("expected ':' after generator name");
      ObjectExpr dom, cod;
      bool arrow_seen = false;
      while (ls >> tok) {
        if (tok == "->") {
          if (arrow_seen) bad("duplicate '->'");
          arrow_seen = true;
          continue;
        }
        if (!sig.has_sort(tok)) bad("unknown sort '" + tok + "'");
        (arrow_seen ? cod : dom).word.push_back(tok);
      }
      if (!arrow_seen) bad("expected '->' in generator type");
      sig.generators.push_back({name, std::move(dom), std::move(cod)});
    } else {
      bad("expected 'sort' or 'gen', got '" + head + "'");
    }
  }
  return sig;
}

}  // namespace gsmon
