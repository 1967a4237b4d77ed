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

#include "gsmon/instances/build.hpp"

#include "gsmon/instances/subcategory.hpp"
#include "gsmon/monads/kleisli.hpp"
#include "gsmon/monads/monads.hpp"

namespace gsmon {

namespace {

constexpr int kMaxCarrierSize = 64;

// "sorts": {"X": 2} or {"X": ["a","b"]}
std::vector<std::pair<std::string, Carrier>> parse_sorts(const nlohmann::json& j) {
  std::vector<std::pair<std::string, Carrier>> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_number_integer()) {
      const int n = it.value().get<int>();
      if (n > kMaxCarrierSize)
        throw Error(ErrorKind::CarrierTooLarge,
                    "sort '" + it.key() + "' of size " + std::to_string(n));
      out.emplace_back(it.key(), default_carrier(it.key(), n));
    } else {
      auto labels = it.value().get<std::vector<std::string>>();
      if (static_cast<int>(labels.size()) > kMaxCarrierSize)
        throw Error(ErrorKind::CarrierTooLarge, "sort '" + it.key() + "'");
      out.emplace_back(it.key(), Carrier::discrete(std::move(labels)));
    }
  }
  return out;
}

SortSizes to_sizes(const std::vector<std::pair<std::string, Carrier>>& sorts) {
  SortSizes out;
  for (const auto& [s, c] : sorts) out.emplace_back(s, c.size());
  return out;
}

// "orders": {"X": "chain" | "discrete" | [[a,b],...]}
void apply_orders(std::vector<std::pair<std::string, Carrier>>& sorts,
                  const nlohmann::json& manifest) {
  const nlohmann::json orders =
      manifest.contains("orders") ? manifest["orders"] : nlohmann::json::object();
  for (auto& [name, c] : sorts) {
    const int n = c.size();
    c.ordered = true;
    c.leq.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) c.leq[i * n + i] = 1;
    if (!orders.contains(name)) continue;
    const auto& o = orders[name];
    if (o.is_string()) {
      const std::string s = o.get<std::string>();
      if (s == "chain") {
        for (int a = 0; a < n; ++a)
          for (int b = a; b < n; ++b) c.leq[a * n + b] = 1;
      } else if (s != "discrete") {
        throw Error(ErrorKind::UnknownKind, "order shorthand '" + s + "'");
      }
      continue;
    }
    auto index = [&](const std::string& l) {
      for (int i = 0; i < n; ++i)
        if (c.labels[i] == l) return i;
      throw Error(ErrorKind::UnknownName, "order pair references unknown element '" + l + "'");
    };
    for (const auto& p : o)
      c.leq[index(p.at(0).get<std::string>()) * n + index(p.at(1).get<std::string>())] = 1;
    // transitive closure of the listed pairs
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (c.leq[a * n + k] && c.leq[k * n + b]) c.leq[a * n + b] = 1;
  }
}

}  // namespace

ModelPtr build_instance(const nlohmann::json& manifest) {
  const std::string kind = manifest.at("kind").get<std::string>();

  if (kind == "subcategory") {
    ModelPtr inner = build_instance(manifest.at("inner"));
    Budget b;
    return std::make_shared<SubcategoryModel>(
        inner, sub_filter_from_name(manifest.at("filter").get<std::string>()), b);
  }
  if (kind == "kleisli") {
    ModelPtr base = build_instance(manifest.at("base"));
    MonadPtr monad = build_monad(base, manifest.at("monad"));
    Budget b;
    b.max_word_len = 1;
    b.hom_cap = 64;
    return kleisli(std::move(monad), b, manifest.value("force", false));
  }

  auto sorts = parse_sorts(manifest.at("sorts"));
  if (kind == "finset") return make_finset(to_sizes(sorts));
  if (kind == "finpar") return make_finpar(to_sizes(sorts));
  if (kind == "finrel") return make_finrel(to_sizes(sorts));
  if (kind == "finrel_forall") return make_finrel_forall(to_sizes(sorts));
  if (kind == "rel_plus") return make_rel_plus(to_sizes(sorts));
  if (kind == "wrel") {
    const auto& sj = manifest.at("semiring");
    Semiring s = sj.is_string() ? builtin_semiring(sj.get<std::string>())
                                : make_semiring(SemiringSpec::from_json(sj));
    return std::make_shared<WRelModel>(std::move(s), std::move(sorts));
  }
  if (kind == "span_x" || kind == "span_plus") {
    const int apex_cap = manifest.value("apex_cap", 3);
    return std::make_shared<SpanModel>(
        kind == "span_x" ? TensorKind::Product : TensorKind::Sum, std::move(sorts), apex_cap);
  }
  if (kind == "finpreord") {
    apply_orders(sorts, manifest);
    return make_finpreord(std::move(sorts));
  }
  if (kind == "finposet") {
    apply_orders(sorts, manifest);
    return make_finposet(std::move(sorts));
  }
  throw Error(ErrorKind::UnknownKind, "model kind '" + kind + "'");
}

}  // namespace gsmon
