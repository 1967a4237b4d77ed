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

#include "gsmon/instances/subcategory.hpp"

#include "gsmon/taxonomy.hpp"

namespace gsmon {

const char* to_string(SubFilter f) {
  switch (f) {
    case SubFilter::Functional: return "functional";
    case SubFilter::Total: return "total";
    case SubFilter::TotalFunctional: return "total-functional";
    case SubFilter::Maps: return "maps";
  }
  return "?";
}

SubFilter sub_filter_from_name(const std::string& name) {
  if (name == "functional") return SubFilter::Functional;
  if (name == "total") return SubFilter::Total;
  if (name == "total-functional") return SubFilter::TotalFunctional;
  if (name == "maps") return SubFilter::Maps;
  throw Error(ErrorKind::UnknownKind, "subcategory filter '" + name + "'");
}

namespace {

bool is_functional(const CategoryModel& m, const Morphism& f) {
  auto cd = m.copy(f.dom);
  auto cc = m.copy(f.cod);
  if (!cd || !cc) throw Error(ErrorKind::UnsupportedCapability, "functional filter needs copy");
  return m.equal(m.compose(f, *cc), m.compose(*cd, m.tensor(f, f)));
}

bool is_total(const CategoryModel& m, const Morphism& f) {
  auto dd = m.discard(f.dom);
  auto dc = m.discard(f.cod);
  if (!dd || !dc) throw Error(ErrorKind::UnsupportedCapability, "total filter needs discard");
  return m.equal(m.compose(f, *dc), *dd);
}

}  // namespace

bool SubcategoryModel::passes(const Morphism& f) const {
  switch (filter_) {
    case SubFilter::Functional:
      return is_functional(*inner_, f);
    case SubFilter::Total:
      return is_total(*inner_, f);
    case SubFilter::TotalFunctional:
      return is_functional(*inner_, f) && is_total(*inner_, f);
    case SubFilter::Maps: {
      Budget b;
      b.hom_cap = 4096;
      return find_right_adjoint(*inner_, f, b).adjoint.has_value();
    }
  }
  return false;
}

SubcategoryModel::SubcategoryModel(ModelPtr inner, SubFilter filter, const Budget& verify_budget)
    : inner_(std::move(inner)), filter_(filter) {
  name_ = std::string(to_string(filter)) + "(" + inner_->name() + ")";
  sorts_ = inner_->sorts();
  enriched_ = inner_->enriched();
  posetal_ = inner_->posetal();
  if (filter_ == SubFilter::Maps && !inner_->enriched())
    throw Error(ErrorKind::NotEnriched, "maps filter needs a hom preorder");

  // Closure verification: structural arrows pass and filtered homs are
  // closed under composition and tensor, over the verification budget.
  auto words = enumerate_words(*inner_, std::min(verify_budget.max_word_len, 2));
  auto fail = [&](const std::string& what, const Morphism& w) {
    throw Error(ErrorKind::FilterNotClosed, what + " escapes filter " + to_string(filter_),
                inner_->morphism_to_json(w));
  };
  for (const auto& x : words) {
    if (auto cp = inner_->copy(x); cp && !passes(*cp)) fail("copy", *cp);
    if (auto ds = inner_->discard(x); ds && !passes(*ds)) fail("discard", *ds);
    if (!passes(inner_->identity(x))) fail("identity", inner_->identity(x));
  }
  const int cap = std::min(verify_budget.hom_cap, 64);
  for (const auto& x : words)
    for (const auto& y : words) {
      auto fs = hom_enumerate(x, y, cap, verify_budget.seed);
      if (!fs) continue;
      for (const auto& z : words) {
        auto gs = hom_enumerate(y, z, cap, verify_budget.seed + 1);
        if (!gs) continue;
        for (const auto& f : fs->morphisms)
          for (const auto& g : gs->morphisms)
            if (!passes(inner_->compose(f, g))) fail("composite", inner_->compose(f, g));
      }
      for (const auto& f : fs->morphisms) {
        Morphism t = inner_->tensor(f, inner_->identity(ObjectExpr::unit()));
        if (!passes(t)) fail("tensor", t);
      }
    }
}

std::optional<Morphism> SubcategoryModel::cocopy(const ObjectExpr& x) const {
  auto m = inner_->cocopy(x);
  if (m && passes(*m)) return m;
  return std::nullopt;
}

std::optional<Morphism> SubcategoryModel::codischarge(const ObjectExpr& x) const {
  auto m = inner_->codischarge(x);
  if (m && passes(*m)) return m;
  return std::nullopt;
}

std::optional<CategoryModel::HomEnum> SubcategoryModel::hom_enumerate(const ObjectExpr& x,
                                                                      const ObjectExpr& y,
                                                                      int cap,
                                                                      uint64_t seed) const {
  auto inner = inner_->hom_enumerate(x, y, std::max(cap * 4, cap), seed);
  if (!inner) return std::nullopt;
  HomEnum out;
  out.truncated = inner->truncated;
  for (const auto& f : inner->morphisms) {
    if (static_cast<int>(out.morphisms.size()) >= cap) {
      out.truncated = true;
      break;
    }
    if (passes(f)) out.morphisms.push_back(f);
  }
  return out;
}

nlohmann::json SubcategoryModel::manifest() const {
  return {{"kind", "subcategory"}, {"filter", to_string(filter_)}, {"inner", inner_->manifest()}};
}

}  // namespace gsmon
