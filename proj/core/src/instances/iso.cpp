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

#include "gsmon/instances/iso.hpp"

namespace gsmon {

IsoCheckResult check_model_iso(const CategoryModel& a, const CategoryModel& b,
                               const ModelIso& iso, const Budget& budget) {
  IsoCheckResult res;
  auto fail = [&](std::string what) {
    res.ok = false;
    res.failure = std::move(what);
    return res;
  };

  const auto words = enumerate_words(a, budget.max_word_len);

  // Structural arrows commute with the conversion.
  for (const auto& x : words) {
    if (!b.equal(iso.a_to_b(a.identity(x)), b.identity(x)))
      return fail("identity at " + x.str());
    for (const auto& y : words)
      if (!b.equal(iso.a_to_b(a.symmetry(x, y)), b.symmetry(x, y)))
        return fail("symmetry at " + x.str() + "," + y.str());
    auto check_struct = [&](auto getter_a, auto getter_b, const char* what) -> bool {
      auto ma = (a.*getter_a)(x);
      auto mb = (b.*getter_b)(x);
      if (ma.has_value() != mb.has_value()) return false;
      if (ma && !b.equal(iso.a_to_b(*ma), *mb)) return false;
      return true;
    };
    if (!check_struct(&CategoryModel::copy, &CategoryModel::copy, "copy"))
      return fail("copy at " + x.str());
    if (!check_struct(&CategoryModel::discard, &CategoryModel::discard, "discard"))
      return fail("discard at " + x.str());
    if (!check_struct(&CategoryModel::cocopy, &CategoryModel::cocopy, "cocopy"))
      return fail("cocopy at " + x.str());
    if (!check_struct(&CategoryModel::codischarge, &CategoryModel::codischarge, "codischarge"))
      return fail("codischarge at " + x.str());
  }

  // Hom bijection: mutually inverse, order-preserving, and count-matching.
  for (const auto& x : words)
    for (const auto& y : words) {
      auto ha = a.hom_enumerate(x, y, budget.hom_cap, budget.seed);
      auto hb = b.hom_enumerate(x, y, budget.hom_cap, budget.seed);
      if (!ha || !hb) continue;
      if (!ha->truncated && !hb->truncated &&
          ha->morphisms.size() != hb->morphisms.size())
        return fail("hom size mismatch at " + x.str() + "->" + y.str());
      for (const auto& f : ha->morphisms) {
        ++res.homs_checked;
        Morphism im = iso.a_to_b(f);
        if (!a.equal(iso.b_to_a(im), f))
          return fail("round trip a->b->a at " + x.str() + "->" + y.str());
      }
      for (const auto& g : hb->morphisms)
        if (!b.equal(iso.a_to_b(iso.b_to_a(g)), g))
          return fail("round trip b->a->b at " + x.str() + "->" + y.str());
      // Enrichment agreement on all enumerated parallel pairs.
      if (a.enriched() && b.enriched()) {
        for (const auto& f : ha->morphisms)
          for (const auto& g : ha->morphisms) {
            auto la = a.hom_leq(f, g);
            auto lb = b.hom_leq(iso.a_to_b(f), iso.a_to_b(g));
            if (la && lb && *la != *lb)
              return fail("hom order disagrees at " + x.str() + "->" + y.str());
          }
      }
    }

  // Functoriality on composable pairs and tensor pairs.
  for (const auto& x : words)
    for (const auto& y : words) {
      auto ha = a.hom_enumerate(x, y, budget.hom_cap, budget.seed);
      if (!ha) continue;
      for (const auto& z : words) {
        auto hg = a.hom_enumerate(y, z, budget.hom_cap, budget.seed + 1);
        if (!hg) continue;
        for (const auto& f : ha->morphisms)
          for (const auto& g : hg->morphisms) {
            ++res.pairs_checked;
            if (!b.equal(iso.a_to_b(a.compose(f, g)), b.compose(iso.a_to_b(f), iso.a_to_b(g))))
              return fail("composition at " + x.str() + "->" + y.str() + "->" + z.str());
          }
      }
      for (const auto& f : ha->morphisms)
        for (const auto& g : ha->morphisms)
          if (!b.equal(iso.a_to_b(a.tensor(f, g)), b.tensor(iso.a_to_b(f), iso.a_to_b(g))))
            return fail("tensor at " + x.str() + "->" + y.str());
    }

  return res;
}

}  // namespace gsmon
