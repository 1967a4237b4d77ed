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

#include "gsmon/object.hpp"

namespace gsmon {

std::string ObjectExpr::str() const {
  if (word.empty()) return "I";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += "*";
    s += word[i];
  }
  return s;
}

namespace {
void collect(const RawObject& r, std::vector<std::string>& out) {
  switch (r.kind) {
    case RawObject::Kind::Unit:
      return;
    case RawObject::Kind::Sort:
      out.push_back(r.sort);
      return;
    case RawObject::Kind::Tensor:
      for (const auto& c : r.children) collect(c, out);
      return;
  }
}
}  // namespace

ObjectExpr flatten_object(const RawObject& raw) {
  ObjectExpr e;
  collect(raw, e.word);
  return e;
}

}  // namespace gsmon
