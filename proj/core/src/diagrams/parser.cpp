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
#include <cctype>

#include "gsmon/diagrams/diagrams.hpp"

namespace gsmon {

namespace {

struct Token {
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (c == '(' || c == ')' || c == ';' || c == '*' || c == '{' || c == '}' || c == ',') {
      out.push_back({std::string(1, c), i});
      ++i;
      continue;
    }
    throw Error(ErrorKind::SyntaxError,
                "unexpected character '" + std::string(1, c) + "' at position " +
                    std::to_string(i));
  }
  return out;
}

class Parser {
 public:
  Parser(const Signature& sig, const std::string& text)
      : sig_(sig), text_(text), tokens_(tokenize(text)) {}

  ExprPtr parse() {
    ExprPtr e = parse_seq();
    if (pos_ < tokens_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    const size_t at = pos_ < tokens_.size() ? tokens_[pos_].pos : text_.size();
    throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(at));
  }

  bool peek(const std::string& t) const {
    return pos_ < tokens_.size() && tokens_[pos_].text == t;
  }
  bool eat(const std::string& t) {
    if (!peek(t)) return false;
    ++pos_;
    return true;
  }

  ExprPtr parse_seq() {
    ExprPtr e = parse_tensor();
    while (eat(";")) e = ex::seq(e, parse_tensor());
    return e;
  }

  ExprPtr parse_tensor() {
    ExprPtr e = parse_atom();
    while (eat("*")) e = ex::ten(e, parse_atom());
    return e;
  }

  // A sort word written as juxtaposed names, matched greedily longest-first.
  ObjectExpr juxtaposed_word(const std::string& s) {
    std::vector<std::string> sorted = sig_.sorts;
    std::sort(sorted.begin(), sorted.end(),
              [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    ObjectExpr w;
    size_t i = 0;
    while (i < s.size()) {
      bool matched = false;
      for (const auto& name : sorted)
        if (s.compare(i, name.size(), name) == 0) {
          w.word.push_back(name);
          i += name.size();
          matched = true;
          break;
        }
      if (!matched)
        throw Error(ErrorKind::UnknownName, "cannot read sort word '" + s + "'");
    }
    return w;
  }

  // Braced word: sorts separated by whitespace (already tokenized) up to '}'
  // or ','.
  ObjectExpr braced_word() {
    ObjectExpr w;
    while (!peek("}") && !peek(",")) {
      if (pos_ >= tokens_.size()) fail("unterminated '{'");
      const std::string s = tokens_[pos_].text;
      if (!sig_.has_sort(s)) throw Error(ErrorKind::UnknownName, "unknown sort '" + s + "'");
      w.word.push_back(s);
      ++pos_;
    }
    return w;
  }

  ObjectExpr structural_suffix(const std::string& rest) {
    if (!rest.empty()) return juxtaposed_word(rest);
    if (!eat("{")) fail("expected sort word");
    ObjectExpr w = braced_word();
    if (!eat("}")) fail("expected '}'");
    return w;
  }

  ExprPtr parse_atom() {
    if (eat("(")) {
      ExprPtr e = parse_seq();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    if (pos_ >= tokens_.size()) fail("expected a term");
    const std::string t = tokens_[pos_].text;
    ++pos_;
    for (const char* prefix : {"id_", "copy_", "discard_", "sym_"}) {
      const size_t n = std::string(prefix).size();
      if (t.rfind(prefix, 0) != 0) continue;
      const std::string rest = t.substr(n);
      if (t.rfind("sym_", 0) == 0) {
        if (!rest.empty()) fail("sym takes braced arguments: sym_{A,B}");
        if (!eat("{")) fail("expected '{' after sym_");
        ObjectExpr a = braced_word();
        if (!eat(",")) fail("expected ',' in sym_{A,B}");
        ObjectExpr b = braced_word();
        if (!eat("}")) fail("expected '}'");
        return ex::sym(ObjPattern::word(a), ObjPattern::word(b));
      }
      ObjectExpr w = structural_suffix(rest);
      if (t.rfind("id_", 0) == 0) return ex::id(ObjPattern::word(w));
      if (t.rfind("copy_", 0) == 0) return ex::copy(ObjPattern::word(w));
      return ex::discard(ObjPattern::word(w));
    }
    if (!sig_.generator(t))
      throw Error(ErrorKind::UnknownName, "unknown generator '" + t + "'");
    return ex::gen(t);
  }

  const Signature& sig_;
  const std::string& text_;
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

struct TypedExpr {
  ObjectExpr dom, cod;
};

TypedExpr infer(const Signature& sig, const ArrowExpr& e) {
  static const std::vector<ObjectExpr> kNoBinding;
  auto concrete = [&](const ObjPattern& p) { return p.instantiate(kNoBinding); };
  switch (e.kind) {
    case ArrowExpr::Kind::Id: {
      ObjectExpr w = concrete(e.a);
      return {w, w};
    }
    case ArrowExpr::Kind::Sym: {
      ObjectExpr a = concrete(e.a), b = concrete(e.b);
      return {a * b, b * a};
    }
    case ArrowExpr::Kind::Copy: {
      ObjectExpr w = concrete(e.a);
      return {w, w * w};
    }
    case ArrowExpr::Kind::Discard:
      return {concrete(e.a), ObjectExpr::unit()};
    case ArrowExpr::Kind::Gen: {
      const auto* g = sig.generator(e.gen);
      if (!g) throw Error(ErrorKind::UnknownName, "unknown generator '" + e.gen + "'");
      return {g->dom, g->cod};
    }
    case ArrowExpr::Kind::Compose: {
      TypedExpr l = infer(sig, *e.lhs);
      TypedExpr r = infer(sig, *e.rhs);
      if (l.cod != r.dom)
        throw Error(ErrorKind::ArityMismatch,
                    "cannot compose " + e.lhs->str() + " : -> " + l.cod.str() + " with " +
                        e.rhs->str() + " : " + r.dom.str() + " ->");
      return {l.dom, r.cod};
    }
    case ArrowExpr::Kind::Tensor: {
      TypedExpr l = infer(sig, *e.lhs);
      TypedExpr r = infer(sig, *e.rhs);
      return {l.dom * r.dom, l.cod * r.cod};
    }
    default:
      throw Error(ErrorKind::SyntaxError, "term uses a construct outside the free gs language");
  }
}

}  // namespace

DiagramTerm typecheck(const Signature& sig, const ExprPtr& expr) {
  TypedExpr t = infer(sig, *expr);
  return DiagramTerm{expr, std::move(t.dom), std::move(t.cod)};
}

DiagramTerm parse_term(const Signature& sig, const std::string& text) {
  Parser p(sig, text);
  return typecheck(sig, p.parse());
}

}  // namespace gsmon
