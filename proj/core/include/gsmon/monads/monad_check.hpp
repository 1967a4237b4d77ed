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

#ifndef GSMON_MONADS_MONAD_CHECK_HPP
#define GSMON_MONADS_MONAD_CHECK_HPP

#include "../laws.hpp"
#include "monad_model.hpp"

namespace gsmon {

/// One verified diagram family of a symmetric monoidal monad.
struct MonadCheck {
  std::string name;
  LawStatus status = LawStatus::Pass;
  nlohmann::json witness;  // objects and both sides of the first violation
  long cases = 0;

  bool passed() const { return status == LawStatus::Pass; }
};

struct MonadReport {
  std::vector<MonadCheck> checks;
  bool all_pass() const;
  const MonadCheck* failing() const;
  nlohmann::json to_json() const;
};

/// Checks functoriality, eta/mu naturality, the monad unit and associativity
/// laws, lax-monoidal associativity/unitality/symmetry, and the two extra
/// squares that make a lax monoidal monad symmetric monoidal. Enumerations
/// are capped by the budget; oversized carriers degrade to budget-exhausted.
MonadReport check_monad(const MonadModel& t, const Budget& budget);

enum class MonadClass { Affine, Relevant, Gs, ColaxAffine, ColaxRelevant, ColaxGs };
const char* to_string(MonadClass c);
MonadClass monad_class_from_name(const std::string& name);

/// The affine/relevant square (or its colax inequality) quantified over
/// enumerated objects. Colax variants require the base to be enriched.
MonadCheck check_monad_class(const MonadModel& t, MonadClass cls, const Budget& budget);

}  // namespace gsmon

#endif  // GSMON_MONADS_MONAD_CHECK_HPP
