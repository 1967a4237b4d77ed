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

#include "gsmon/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace gsmon {

SemiringSpec SemiringSpec::from_json(const nlohmann::json& j) {
  SemiringSpec s;
  s.name = j.value("name", "");
  s.elements = j.at("elements").get<std::vector<std::string>>();
  s.add = j.at("add").get<std::vector<std::vector<std::string>>>();
  s.mul = j.at("mul").get<std::vector<std::vector<std::string>>>();
  s.zero = j.at("zero").get<std::string>();
  s.one = j.at("one").get<std::string>();
  if (j.contains("order") && !j["order"].is_null()) {
    std::vector<std::pair<std::string, std::string>> ord;
    for (const auto& p : j["order"]) ord.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    s.order = std::move(ord);
  }
  return s;
}

nlohmann::json SemiringSpec::to_json() const {
  nlohmann::json j;
  if (!name.empty()) j["name"] = name;
  j["elements"] = elements;
  j["add"] = add;
  j["mul"] = mul;
  j["zero"] = zero;
  j["one"] = one;
  if (order) {
    nlohmann::json ord = nlohmann::json::array();
    for (const auto& [a, b] : *order) ord.push_back({a, b});
    j["order"] = ord;
  }
  return j;
}

nlohmann::json SemiringViolation::to_json() const {
  return {{"law", law}, {"witness", witness}};
}

int Semiring::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == label) return i;
  throw Error(ErrorKind::UnknownName, "semiring element '" + label + "'");
}

bool Semiring::order_is_partial() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq(a, b) && leq(b, a)) return false;
  return true;
}

bool Semiring::zero_minimal() const {
  for (int a = 0; a < size(); ++a)
    if (!leq(zero_, a)) return false;
  return true;
}

nlohmann::json Semiring::to_json() const {
  SemiringSpec spec;
  spec.name = name_;
  spec.elements = elements_;
  const int n = size();
  spec.add.assign(n, std::vector<std::string>(n));
  spec.mul.assign(n, std::vector<std::string>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      spec.add[a][b] = elements_[add(a, b)];
      spec.mul[a][b] = elements_[mul(a, b)];
    }
  spec.zero = elements_[zero_];
  spec.one = elements_[one_];
  if (has_order_) {
    std::vector<std::pair<std::string, std::string>> ord;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (order_[a * n + b]) ord.emplace_back(elements_[a], elements_[b]);
    spec.order = std::move(ord);
  }
  return spec.to_json();
}

namespace {

struct Tables {
  int n;
  std::vector<int> add, mul;
  int zero, one;
  int a(int x, int y) const { return add[x * n + y]; }
  int m(int x, int y) const { return mul[x * n + y]; }
};

// Resolves label tables to index tables; throws TableShape on malformed input.
Tables resolve(const SemiringSpec& spec) {
  const int n = static_cast<int>(spec.elements.size());
  if (n == 0) throw Error(ErrorKind::TableShape, "no elements");
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(spec.elements[i], i).second)
      throw Error(ErrorKind::TableShape, "duplicate element label '" + spec.elements[i] + "'");
  }
  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw Error(ErrorKind::TableShape, "unknown element label '" + l + "'");
    return it->second;
  };
  auto flat = [&](const std::vector<std::vector<std::string>>& t, const char* which) {
    if (static_cast<int>(t.size()) != n)
      throw Error(ErrorKind::TableShape, std::string(which) + " table has wrong row count");
    std::vector<int> out(n * n);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(t[r].size()) != n)
        throw Error(ErrorKind::TableShape, std::string(which) + " table row " + std::to_string(r) + " has wrong length");
      for (int c = 0; c < n; ++c) out[r * n + c] = lookup(t[r][c]);
    }
    return out;
  };
  Tables tb;
  tb.n = n;
  tb.add = flat(spec.add, "add");
  tb.mul = flat(spec.mul, "mul");
  tb.zero = lookup(spec.zero);
  tb.one = lookup(spec.one);
  return tb;
}

}  // namespace

std::vector<SemiringViolation> validate_semiring(const SemiringSpec& spec) {
  Tables t = resolve(spec);
  const int n = t.n;
  const auto& el = spec.elements;
  std::vector<SemiringViolation> v;
  auto report = [&](const std::string& law, std::initializer_list<int> w) {
    std::vector<std::string> labels;
    for (int i : w) labels.push_back(el[i]);
    v.push_back({law, labels});
  };

  for (int a = 0; a < n; ++a) {
    if (t.a(t.zero, a) != a) report("add-unit", {a});
    if (t.m(t.one, a) != a) report("mul-unit", {a});
    if (t.m(t.zero, a) != t.zero) report("annihilation", {a});
    for (int b = 0; b < n; ++b) {
      if (t.a(a, b) != t.a(b, a)) report("add-commutativity", {a, b});
      if (t.m(a, b) != t.m(b, a)) report("mul-commutativity", {a, b});
      for (int c = 0; c < n; ++c) {
        if (t.a(t.a(a, b), c) != t.a(a, t.a(b, c))) report("add-associativity", {a, b, c});
        if (t.m(t.m(a, b), c) != t.m(a, t.m(b, c))) report("mul-associativity", {a, b, c});
        if (t.m(a, t.a(b, c)) != t.a(t.m(a, b), t.m(a, c))) report("distributivity", {a, b, c});
      }
    }
  }

  if (spec.order) {
    std::vector<char> leq(n * n, 0);
    for (const auto& [la, lb] : *spec.order) {
      auto ia = std::find(el.begin(), el.end(), la);
      auto ib = std::find(el.begin(), el.end(), lb);
      if (ia == el.end() || ib == el.end())
        throw Error(ErrorKind::TableShape, "order pair references unknown element");
      leq[(ia - el.begin()) * n + (ib - el.begin())] = 1;
    }
    for (int a = 0; a < n; ++a)
      if (!leq[a * n + a]) report("order-reflexivity", {a});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c])
            report("order-transitivity", {a, b, c});
    // Compatibility: a<=b and c<=d imply a+c <= b+d and a*c <= b*d.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!leq[a * n + b]) continue;
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            if (!leq[c * n + d]) continue;
            if (!leq[t.a(a, c) * n + t.a(b, d)]) report("order-add-compatibility", {a, b, c, d});
            if (!leq[t.m(a, c) * n + t.m(b, d)]) report("order-mul-compatibility", {a, b, c, d});
          }
      }
  }
  return v;
}

Semiring make_semiring(const SemiringSpec& spec) {
  auto violations = validate_semiring(spec);
  if (!violations.empty()) {
    nlohmann::json detail = nlohmann::json::array();
    for (const auto& w : violations) detail.push_back(w.to_json());
    throw Error(ErrorKind::LawViolation,
                "semiring '" + spec.name + "' fails " + violations.front().law, detail);
  }
  Tables t = resolve(spec);
  Semiring s;
  s.name_ = spec.name;
  s.elements_ = spec.elements;
  s.add_ = std::move(t.add);
  s.mul_ = std::move(t.mul);
  s.zero_ = t.zero;
  s.one_ = t.one;
  const int n = s.size();
  if (spec.order) {
    s.has_order_ = true;
    s.order_.assign(n * n, 0);
    for (const auto& [la, lb] : *spec.order)
      s.order_[s.index_of(la) * n + s.index_of(lb)] = 1;
  }
  if (!s.has_order_) s.order_ = canonical_preorder(s);
  return s;
}

std::vector<char> canonical_preorder(const Semiring& s) {
  const int n = s.size();
  std::vector<char> leq(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.add(a, c) == b) {
          leq[a * n + b] = 1;
          break;
        }
  // Reflexivity and transitivity hold by construction; verify anyway so a
  // broken table can never leak a bogus order downstream.
  for (int a = 0; a < n; ++a)
    if (!leq[a * n + a]) throw Error(ErrorKind::LawViolation, "canonical preorder not reflexive");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c])
          throw Error(ErrorKind::LawViolation, "canonical preorder not transitive");
  return leq;
}

namespace {

std::string grid_label(int i, int n) {
  // n grid points 0, 1/(n-1), ..., 1 labelled as exact fractions.
  if (i == 0) return "0";
  if (i == n - 1) return "1";
  return std::to_string(i) + "/" + std::to_string(n - 1);
}

SemiringSpec boolean_spec() {
  SemiringSpec s;
  s.name = "boolean";
  s.elements = {"0", "1"};
  s.add = {{"0", "1"}, {"1", "1"}};
  s.mul = {{"0", "0"}, {"0", "1"}};
  s.zero = "0";
  s.one = "1";
  return s;
}

SemiringSpec nat_trunc_spec(int k) {
  SemiringSpec s;
  s.name = "nat-trunc-" + std::to_string(k);
  for (int i = 0; i <= k; ++i) s.elements.push_back(std::to_string(i));
  auto cap = [&](long v) { return std::min<long>(v, k); };
  s.add.assign(k + 1, std::vector<std::string>(k + 1));
  s.mul.assign(k + 1, std::vector<std::string>(k + 1));
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b) {
      s.add[a][b] = std::to_string(cap(static_cast<long>(a) + b));
      s.mul[a][b] = std::to_string(cap(static_cast<long>(a) * b));
    }
  s.zero = "0";
  s.one = std::to_string(std::min(1, k));
  return s;
}

SemiringSpec maxmin_grid_spec(int n) {
  SemiringSpec s;
  s.name = "maxmin-grid-" + std::to_string(n);
  for (int i = 0; i < n; ++i) s.elements.push_back(grid_label(i, n));
  s.add.assign(n, std::vector<std::string>(n));
  s.mul.assign(n, std::vector<std::string>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      s.add[a][b] = s.elements[std::max(a, b)];
      s.mul[a][b] = s.elements[std::min(a, b)];
    }
  s.zero = s.elements[0];
  s.one = s.elements[n - 1];
  return s;
}

SemiringSpec maxtimes_grid_spec(int n) {
  SemiringSpec s;
  s.name = "maxtimes-grid-" + std::to_string(n);
  for (int i = 0; i < n; ++i) s.elements.push_back(grid_label(i, n));
  s.add.assign(n, std::vector<std::string>(n));
  s.mul.assign(n, std::vector<std::string>(n));
  // Product rounded to the grid, half-up. Associativity of the rounded
  // product is not guaranteed; make_semiring is the gatekeeper.
  auto round_mul = [&](int a, int b) {
    const double v = (static_cast<double>(a) * b) / (n - 1);
    int r = static_cast<int>(std::floor(v + 0.5));
    return std::min(r, n - 1);
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      s.add[a][b] = s.elements[std::max(a, b)];
      s.mul[a][b] = s.elements[round_mul(a, b)];
    }
  s.zero = s.elements[0];
  s.one = s.elements[n - 1];
  return s;
}

}  // namespace

std::vector<std::string> builtin_semiring_names() {
  return {"boolean",      "nat-trunc-1",    "nat-trunc-2",    "nat-trunc-3",
          "maxmin-grid-2", "maxmin-grid-3", "maxmin-grid-4",  "maxtimes-grid-2",
          "maxtimes-grid-3"};
}

SemiringSpec builtin_semiring_spec(const std::string& name) {
  if (name == "boolean") return boolean_spec();
  auto suffixed = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string tail = name.substr(prefix.size());
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    return std::stoi(tail);
  };
  if (auto k = suffixed("nat-trunc-")) {
    if (*k < 1 || *k > 64) throw Error(ErrorKind::UnknownName, "nat-trunc parameter out of range");
    return nat_trunc_spec(*k);
  }
  if (auto n = suffixed("maxmin-grid-")) {
    if (*n < 2 || *n > 64) throw Error(ErrorKind::UnknownName, "maxmin-grid parameter out of range");
    return maxmin_grid_spec(*n);
  }
  if (auto n = suffixed("maxtimes-grid-")) {
    if (*n < 2 || *n > 64) throw Error(ErrorKind::UnknownName, "maxtimes-grid parameter out of range");
    return maxtimes_grid_spec(*n);
  }
  throw Error(ErrorKind::UnknownName, "no builtin semiring '" + name + "'");
}

Semiring builtin_semiring(const std::string& name) {
  return make_semiring(builtin_semiring_spec(name));
}

const char* to_string(ElementPredicate p) {
  switch (p) {
    case ElementPredicate::Any: return "any";
    case ElementPredicate::Idempotent: return "idempotent";
    case ElementPredicate::NormalisedRow: return "normalised-row";
    case ElementPredicate::SubIdempotent: return "sub-idempotent";
    case ElementPredicate::SubNormalised: return "sub-normalised";
    case ElementPredicate::SupportAtMostOne: return "support-at-most-one";
  }
  return "?";
}

bool satisfies(const Semiring& s, ElementPredicate p, const std::vector<int>& vec) {
  switch (p) {
    case ElementPredicate::Any:
      return true;
    case ElementPredicate::Idempotent:
      for (int e : vec)
        if (s.mul(e, e) != e) return false;
      return true;
    case ElementPredicate::SubIdempotent:
      for (int e : vec)
        if (!s.leq(e, s.mul(e, e))) return false;
      return true;
    case ElementPredicate::NormalisedRow: {
      int sum = s.zero();
      for (int e : vec) sum = s.add(sum, e);
      return sum == s.one();
    }
    case ElementPredicate::SubNormalised: {
      int sum = s.zero();
      for (int e : vec) sum = s.add(sum, e);
      return s.leq(sum, s.one());
    }
    case ElementPredicate::SupportAtMostOne: {
      int nonzero = 0;
      for (int e : vec)
        if (e != s.zero()) ++nonzero;
      return nonzero <= 1;
    }
  }
  return false;
}

}  // namespace gsmon
