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

#include "gsmon/monads/monads.hpp"

namespace gsmon {

namespace {

Semiring semiring_from_field(const nlohmann::json& j) {
  if (j.is_string()) return builtin_semiring(j.get<std::string>());
  return make_semiring(SemiringSpec::from_json(j));
}

}  // namespace

MonadPtr build_monad(ModelPtr base, const nlohmann::json& manifest) {
  const std::string kind = manifest.at("kind").get<std::string>();
  if (kind == "identity") return std::make_shared<IdentityMonad>(std::move(base));
  if (kind == "semiring") {
    auto table = std::dynamic_pointer_cast<const TableCategory>(base);
    if (!table)
      throw Error(ErrorKind::UnsupportedCapability, "semiring monad needs a table base model");
    return std::make_shared<SemiringMonad>(
        table, semiring_from_field(manifest.at("semiring")),
        semiring_variant_from_name(manifest.value("variant", "full")));
  }
  if (kind == "writer") {
    const auto& mj = manifest.at("monoid");
    const std::string sort = mj.at("sort").get<std::string>();
    const ObjectExpr m = ObjectExpr::sort(sort);
    Morphism mult, unit;
    if (mj.contains("mult") && mj.at("mult").is_object()) {
      mult = base->morphism_from_json(mj.at("mult"));
      unit = base->morphism_from_json(mj.at("unit"));
    } else {
      // Table form over a total-function base: mult as a nested label array,
      // unit as an element label.
      const Carrier mc = base->carrier(m);
      const Carrier mmc = base->carrier(m * m);
      auto label_index = [&](const Carrier& c, const std::string& l) {
        for (int i = 0; i < c.size(); ++i)
          if (c.labels[i] == l) return i;
        throw Error(ErrorKind::UnknownName, "monoid element '" + l + "'");
      };
      FunTable t;
      t.cod_size = mc.size();
      const auto& rows = mj.at("mult");
      for (const auto& row : rows)
        for (const auto& v : row) t.map.push_back(label_index(mc, v.get<std::string>()));
      if (static_cast<int>(t.map.size()) != mmc.size())
        throw Error(ErrorKind::TableShape, "monoid mult table has wrong size");
      mult = Morphism{m * m, m, std::move(t)};
      FunTable u;
      u.cod_size = mc.size();
      u.map = {label_index(mc, mj.at("unit").get<std::string>())};
      unit = Morphism{ObjectExpr::unit(), m, std::move(u)};
    }
    MonoidObject monoid = MonoidObject::validated(*base, m, std::move(mult), std::move(unit));
    return std::make_shared<WriterMonad>(std::move(base), std::move(monoid));
  }
  if (kind == "hoare_powerset") {
    auto table = std::dynamic_pointer_cast<const TableCategory>(base);
    if (!table) throw Error(ErrorKind::UnsupportedCapability, "hoare_powerset needs finpreord");
    return std::make_shared<HoarePowersetMonad>(table);
  }
  if (kind == "downset") {
    auto table = std::dynamic_pointer_cast<const TableCategory>(base);
    if (!table) throw Error(ErrorKind::UnsupportedCapability, "downset needs finposet");
    return std::make_shared<DownsetMonad>(table);
  }
  if (kind == "upweight") {
    auto table = std::dynamic_pointer_cast<const TableCategory>(base);
    if (!table) throw Error(ErrorKind::UnsupportedCapability, "upweight needs finpreord");
    return std::make_shared<UpweightMonad>(
        table, semiring_from_field(manifest.at("semiring")),
        semiring_variant_from_name(manifest.value("variant", "full")));
  }
  throw Error(ErrorKind::UnknownKind, "monad kind '" + kind + "'");
}

}  // namespace gsmon
