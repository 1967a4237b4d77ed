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

#include "gsmon/instances/build.hpp"

namespace gsmon {

Carrier default_carrier(const std::string& sort, int size) {
  if (size < 0) throw Error(ErrorKind::TableShape, "negative carrier size");
  std::string base = sort;
  std::transform(base.begin(), base.end(), base.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::vector<std::string> labels;
  for (int i = 0; i < size; ++i) labels.push_back(base + std::to_string(i));
  return Carrier::discrete(std::move(labels));
}

Carrier chain_carrier(const std::string& sort, int size) {
  Carrier c = default_carrier(sort, size);
  c.ordered = true;
  c.leq.assign(static_cast<size_t>(size) * size, 0);
  for (int a = 0; a < size; ++a)
    for (int b = a; b < size; ++b) c.leq[a * size + b] = 1;
  return c;
}

Carrier discrete_ordered_carrier(const std::string& sort, int size) {
  Carrier c = default_carrier(sort, size);
  c.ordered = true;
  c.leq.assign(static_cast<size_t>(size) * size, 0);
  for (int a = 0; a < size; ++a) c.leq[a * size + a] = 1;
  return c;
}

namespace {
std::vector<std::pair<std::string, Carrier>> to_carriers(const SortSizes& sorts) {
  std::vector<std::pair<std::string, Carrier>> out;
  for (const auto& [s, n] : sorts) out.emplace_back(s, default_carrier(s, n));
  return out;
}
}  // namespace

std::shared_ptr<TableCategory> make_finset(const SortSizes& sorts) {
  TableCategory::Options opt;
  opt.maps = TableCategory::Maps::Total;
  opt.kind = "finset";
  return std::make_shared<TableCategory>("finset", to_carriers(sorts), opt);
}

std::shared_ptr<FinRelModel> make_finrel(const SortSizes& sorts) {
  return std::make_shared<FinRelModel>(to_carriers(sorts));
}

std::shared_ptr<FinRelForallModel> make_finrel_forall(const SortSizes& sorts) {
  return std::make_shared<FinRelForallModel>(to_carriers(sorts));
}

std::shared_ptr<RelPlusModel> make_rel_plus(const SortSizes& sorts) {
  return std::make_shared<RelPlusModel>(to_carriers(sorts));
}

std::shared_ptr<WRelModel> make_wrel(Semiring s, const SortSizes& sorts) {
  return std::make_shared<WRelModel>(std::move(s), to_carriers(sorts));
}

std::shared_ptr<SpanModel> make_span(TensorKind kind, const SortSizes& sorts, int apex_cap) {
  return std::make_shared<SpanModel>(kind, to_carriers(sorts), apex_cap);
}

}  // namespace gsmon
