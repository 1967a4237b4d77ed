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

#ifndef GSMON_INSTANCES_TABLE_MODEL_HPP
#define GSMON_INSTANCES_TABLE_MODEL_HPP

#include <functional>
#include <map>
#include <mutex>

#include "../category.hpp"

namespace gsmon {

/// Concrete categories whose morphisms are (total or partial) function
/// tables between product carriers: sets, partial functions, preorders and
/// posets with monotone maps. Monad constructions extend these models with
/// derived carriers (memoized behind a lock, so shared instances stay safe
/// for concurrent readers).
class TableCategory : public CategoryModel {
 public:
  enum class Maps { Total, Partial };

  struct Options {
    Maps maps = Maps::Total;
    bool enriched = false;         // pointwise order (total) / definedness order (partial)
    bool posetal = false;
    bool require_monotone = false; // hom-sets restricted to monotone tables
    std::string kind = "finset";   // manifest kind
  };

  TableCategory(std::string name, std::vector<std::pair<std::string, Carrier>> sorts,
                Options opt);

  TensorKind tensor_kind() const override { return TensorKind::Product; }
  Carrier carrier(const ObjectExpr& x) const override;

  Morphism identity(const ObjectExpr& x) const override;
  Morphism compose(const Morphism& f, const Morphism& g) const override;
  Morphism tensor(const Morphism& f, const Morphism& g) const override;
  Morphism symmetry(const ObjectExpr& x, const ObjectExpr& y) const override;
  std::optional<Morphism> copy(const ObjectExpr& x) const override;
  std::optional<Morphism> discard(const ObjectExpr& x) const override;

  std::optional<HomEnum> hom_enumerate(const ObjectExpr& x, const ObjectExpr& y, int cap,
                                       uint64_t seed) const override;
  std::optional<bool> hom_leq(const Morphism& f, const Morphism& g) const override;

  nlohmann::json manifest() const override;

  /// Registers a derived carrier under `name` unless already present; the
  /// maker runs at most once. Returns `name`.
  std::string ensure_sort(const std::string& name, const std::function<Carrier()>& maker) const;
  const Carrier& sort_carrier(const std::string& s) const;
  Maps maps() const { return opt_.maps; }
  bool monotone_only() const { return opt_.require_monotone; }

  /// True when the table respects carrier orders (vacuously true for
  /// unordered carriers).
  bool is_monotone(const Morphism& f) const;

 private:
  std::vector<int> table_of(const Morphism& f, const char* what) const;
  Morphism from_table(const ObjectExpr& dom, const ObjectExpr& cod, std::vector<int> t) const;

  Options opt_;
  nlohmann::json sorts_manifest_;
  mutable std::mutex mu_;
  mutable std::map<std::string, Carrier> carriers_;
};

}  // namespace gsmon

#endif  // GSMON_INSTANCES_TABLE_MODEL_HPP
