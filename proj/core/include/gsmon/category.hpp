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

#ifndef GSMON_CATEGORY_HPP
#define GSMON_CATEGORY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "carrier.hpp"
#include "error.hpp"
#include "morphism.hpp"
#include "object.hpp"

namespace gsmon {

/// Enumeration caps shared by the law engine, the taxonomy predicates and
/// the monad checks. The seed fully determines any sampled enumeration.
struct Budget {
  int max_word_len = 2;     // object metavariables range over words up to this length
  int hom_cap = 512;        // full enumeration up to this many arrows, sampled beyond
  int max_carrier = 4096;   // skip bindings whose carriers exceed this
  uint64_t seed = 0;

  void require_nonzero() const {
    if (max_word_len < 0 || hom_cap <= 0)
      throw Error(ErrorKind::BudgetZero, "enumeration budget is empty");
  }
};

/// How a model interprets the tensor on carriers.
enum class TensorKind { Product, Sum };

/// Capability record of a concrete strict symmetric monoidal category with
/// chosen structure. Operations follow diagram order: compose(f, g) = f ; g.
///
/// Models are immutable after construction (internal memo tables are
/// synchronized), so concurrent readers are safe.
class CategoryModel {
 public:
  virtual ~CategoryModel() = default;

  const std::string& name() const { return name_; }
  /// Declared sorts; object enumeration quantifies over these only.
  const std::vector<std::string>& sorts() const { return sorts_; }
  virtual TensorKind tensor_kind() const = 0;

  virtual Carrier carrier(const ObjectExpr& x) const = 0;

  virtual Morphism identity(const ObjectExpr& x) const = 0;
  virtual Morphism compose(const Morphism& f, const Morphism& g) const = 0;
  virtual Morphism tensor(const Morphism& f, const Morphism& g) const = 0;
  virtual Morphism symmetry(const ObjectExpr& x, const ObjectExpr& y) const = 0;

  /// Structural arrows; nullopt when the capability is absent.
  virtual std::optional<Morphism> copy(const ObjectExpr& x) const { return std::nullopt; }
  virtual std::optional<Morphism> discard(const ObjectExpr& x) const { return std::nullopt; }
  virtual std::optional<Morphism> cocopy(const ObjectExpr& x) const { return std::nullopt; }
  virtual std::optional<Morphism> codischarge(const ObjectExpr& x) const { return std::nullopt; }

  struct HomEnum {
    std::vector<Morphism> morphisms;
    bool truncated = false;  // true when caps or sampling cut the hom-set short
  };
  /// Enumerates hom(x, y) in deterministic order, fully when its size fits
  /// under `cap` and as a seeded sample otherwise. nullopt when the model
  /// cannot enumerate homs.
  virtual std::optional<HomEnum> hom_enumerate(const ObjectExpr& x, const ObjectExpr& y,
                                               int cap, uint64_t seed) const {
    return std::nullopt;
  }

  /// Hom preorder f <= g for parallel arrows; nullopt when unenriched.
  /// Throws NotParallel when endpoints differ.
  virtual std::optional<bool> hom_leq(const Morphism& f, const Morphism& g) const {
    return std::nullopt;
  }

  bool enriched() const { return enriched_; }
  /// Whether the enrichment is declared antisymmetric (verified in tests).
  bool posetal() const { return posetal_; }

  virtual bool equal(const Morphism& f, const Morphism& g) const { return f == g; }

  /// Serializes a morphism payload using carrier element labels, in the wire
  /// format fixed per payload kind.
  virtual nlohmann::json morphism_to_json(const Morphism& f) const;
  virtual Morphism morphism_from_json(const nlohmann::json& j) const;

  /// Weight element labels, for matrix payloads. Only weighted models
  /// override this.
  virtual const std::vector<std::string>& weight_labels() const {
    static const std::vector<std::string> none;
    return none;
  }

  /// The manifest that rebuilds this model (kind, sorts, parameters).
  virtual nlohmann::json manifest() const = 0;

 protected:
  std::string name_;
  std::vector<std::string> sorts_;
  bool enriched_ = false;
  bool posetal_ = false;
};

using ModelPtr = std::shared_ptr<const CategoryModel>;

/// All words over the model's sorts with length 0..max_len, in shortlex
/// order. This is the deterministic object enumeration every check uses.
std::vector<ObjectExpr> enumerate_words(const CategoryModel& model, int max_len);

}  // namespace gsmon

#endif  // GSMON_CATEGORY_HPP
