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

#include "gsmon/category.hpp"

#include <algorithm>

namespace gsmon {

std::vector<ObjectExpr> enumerate_words(const CategoryModel& model, int max_len) {
  std::vector<ObjectExpr> out;
  std::vector<ObjectExpr> level{ObjectExpr::unit()};
  out.push_back(ObjectExpr::unit());
  std::vector<std::string> sorted_sorts = model.sorts();
  std::sort(sorted_sorts.begin(), sorted_sorts.end());
  for (int len = 1; len <= max_len; ++len) {
    std::vector<ObjectExpr> next;
    for (const auto& w : level)
      for (const auto& s : sorted_sorts) next.push_back(w * ObjectExpr::sort(s));
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

namespace {

int label_index(const Carrier& c, const nlohmann::json& j, const char* what) {
  const std::string l = j.get<std::string>();
  for (int i = 0; i < c.size(); ++i)
    if (c.labels[i] == l) return i;
  throw Error(ErrorKind::UnknownName, std::string("unknown ") + what + " element '" + l + "'");
}

}  // namespace

nlohmann::json CategoryModel::morphism_to_json(const Morphism& f) const {
  const Carrier dc = carrier(f.dom);
  const Carrier cc = carrier(f.cod);
  nlohmann::json j;
  j["dom"] = f.dom.to_json();
  j["cod"] = f.cod.to_json();
  if (const auto* t = std::get_if<FunTable>(&f.payload)) {
    j["kind"] = "function";
    nlohmann::json m = nlohmann::json::array();
    for (int v : t->map) m.push_back(cc.labels[v]);
    j["map"] = m;
  } else if (const auto* t = std::get_if<ParTable>(&f.payload)) {
    j["kind"] = "partial";
    nlohmann::json m = nlohmann::json::array();
    for (int v : t->map) {
      if (v < 0)
        m.push_back(nullptr);
      else
        m.push_back(cc.labels[v]);
    }
    j["map"] = m;
  } else if (const auto* t = std::get_if<RelPairs>(&f.payload)) {
    j["kind"] = "relation";
    nlohmann::json m = nlohmann::json::array();
    for (auto [x, y] : t->pairs) m.push_back({dc.labels[x], cc.labels[y]});
    j["pairs"] = m;
  } else if (const auto* t = std::get_if<WeightMat>(&f.payload)) {
    j["kind"] = "matrix";
    nlohmann::json rows = nlohmann::json::array();
    const auto& labels = weight_labels();
    for (int r = 0; r < t->rows; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < t->cols; ++c) row.push_back(labels[t->at(r, c)]);
      rows.push_back(row);
    }
    j["entries"] = rows;
  } else if (const auto* t = std::get_if<SpanData>(&f.payload)) {
    j["kind"] = "span";
    j["apex_size"] = t->apex;
    nlohmann::json l = nlohmann::json::array(), r = nlohmann::json::array();
    for (int v : t->left) l.push_back(dc.labels[v]);
    for (int v : t->right) r.push_back(cc.labels[v]);
    j["left"] = l;
    j["right"] = r;
  }
  return j;
}

Morphism CategoryModel::morphism_from_json(const nlohmann::json& j) const {
  Morphism f;
  f.dom = ObjectExpr::from_json(j.at("dom"));
  f.cod = ObjectExpr::from_json(j.at("cod"));
  const Carrier dc = carrier(f.dom);
  const Carrier cc = carrier(f.cod);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "function") {
    FunTable t;
    t.cod_size = cc.size();
    for (const auto& v : j.at("map")) t.map.push_back(label_index(cc, v, "cod"));
    if (static_cast<int>(t.map.size()) != dc.size())
      throw Error(ErrorKind::TableShape, "function map length mismatch");
    f.payload = std::move(t);
  } else if (kind == "partial") {
    ParTable t;
    t.cod_size = cc.size();
    for (const auto& v : j.at("map"))
      t.map.push_back(v.is_null() ? -1 : label_index(cc, v, "cod"));
    if (static_cast<int>(t.map.size()) != dc.size())
      throw Error(ErrorKind::TableShape, "partial map length mismatch");
    f.payload = std::move(t);
  } else if (kind == "relation") {
    RelPairs t;
    t.dom_size = dc.size();
    t.cod_size = cc.size();
    for (const auto& p : j.at("pairs"))
      t.pairs.emplace_back(label_index(dc, p.at(0), "dom"), label_index(cc, p.at(1), "cod"));
    t.normalize();
    f.payload = std::move(t);
  } else if (kind == "matrix") {
    WeightMat t;
    const auto& rows = j.at("entries");
    t.rows = static_cast<int>(rows.size());
    t.cols = t.rows ? static_cast<int>(rows[0].size()) : cc.size();
    const auto& labels = weight_labels();
    auto windex = [&](const nlohmann::json& v) {
      const std::string l = v.get<std::string>();
      for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return static_cast<int>(i);
      throw Error(ErrorKind::UnknownName, "unknown weight '" + l + "'");
    };
    for (const auto& row : rows)
      for (const auto& v : row) t.entries.push_back(windex(v));
    f.payload = std::move(t);
  } else if (kind == "span") {
    SpanData t;
    t.apex = j.at("apex_size").get<int>();
    t.dom_size = dc.size();
    t.cod_size = cc.size();
    for (const auto& v : j.at("left")) t.left.push_back(label_index(dc, v, "dom"));
    for (const auto& v : j.at("right")) t.right.push_back(label_index(cc, v, "cod"));
    f.payload = std::move(t);
  } else {
    throw Error(ErrorKind::UnknownKind, "morphism payload kind '" + kind + "'");
  }
  return f;
}

}  // namespace gsmon
