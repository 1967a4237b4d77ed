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

#include "gsmon/carrier.hpp"

namespace gsmon {

Carrier product_carrier(const std::vector<const Carrier*>& components) {
  Carrier out;
  if (components.empty()) {
    out.labels = {"()"};
    return out;
  }
  std::vector<int> sizes;
  bool ordered = false;
  for (const Carrier* c : components) {
    sizes.push_back(c->size());
    ordered = ordered || c->ordered;
  }
  ProductIndexer ix(sizes);
  out.labels.reserve(ix.total());
  for (int i = 0; i < ix.total(); ++i) {
    auto d = ix.decode(i);
    std::string l = "(";
    for (size_t k = 0; k < d.size(); ++k) {
      if (k) l += ",";
      l += components[k]->labels[d[k]];
    }
    l += ")";
    out.labels.push_back(std::move(l));
  }
  if (ordered) {
    out.ordered = true;
    out.leq.assign(static_cast<size_t>(ix.total()) * ix.total(), 0);
    for (int a = 0; a < ix.total(); ++a) {
      auto da = ix.decode(a);
      for (int b = 0; b < ix.total(); ++b) {
        auto db = ix.decode(b);
        bool le = true;
        for (size_t k = 0; k < da.size() && le; ++k) le = components[k]->le(da[k], db[k]);
        out.leq[static_cast<size_t>(a) * ix.total() + b] = le ? 1 : 0;
      }
    }
  }
  return out;
}

Carrier sum_carrier(const std::vector<const Carrier*>& components) {
  Carrier out;
  bool ordered = false;
  for (const Carrier* c : components) ordered = ordered || c->ordered;
  std::vector<int> sizes;
  for (const Carrier* c : components) sizes.push_back(c->size());
  SumIndexer ix(sizes);
  out.labels.reserve(ix.total());
  for (size_t k = 0; k < components.size(); ++k)
    for (int i = 0; i < components[k]->size(); ++i)
      out.labels.push_back("in" + std::to_string(k) + ":" + components[k]->labels[i]);
  if (ordered && ix.total() > 0) {
    out.ordered = true;
    out.leq.assign(static_cast<size_t>(ix.total()) * ix.total(), 0);
    for (int a = 0; a < ix.total(); ++a) {
      auto [ka, la] = ix.decode(a);
      for (int b = 0; b < ix.total(); ++b) {
        auto [kb, lb] = ix.decode(b);
        out.leq[static_cast<size_t>(a) * ix.total() + b] =
            (ka == kb && components[ka]->le(la, lb)) ? 1 : 0;
      }
    }
  }
  return out;
}

ProductIndexer::ProductIndexer(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  long total = 1;
  for (int s : sizes_) {
    total *= s;
    if (total > 1'000'000'000L) throw Error(ErrorKind::CarrierTooLarge, "product carrier overflow");
  }
  total_ = static_cast<int>(total);
}

int ProductIndexer::encode(const std::vector<int>& digits) const {
  int v = 0;
  for (size_t i = 0; i < sizes_.size(); ++i) v = v * sizes_[i] + digits[i];
  return v;
}

std::vector<int> ProductIndexer::decode(int index) const {
  std::vector<int> d(sizes_.size());
  for (int i = static_cast<int>(sizes_.size()) - 1; i >= 0; --i) {
    d[i] = index % sizes_[i];
    index /= sizes_[i];
  }
  return d;
}

SumIndexer::SumIndexer(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  int off = 0;
  for (int s : sizes_) {
    offsets_.push_back(off);
    off += s;
  }
  total_ = off;
}

std::pair<int, int> SumIndexer::decode(int index) const {
  for (int k = static_cast<int>(sizes_.size()) - 1; k >= 0; --k)
    if (index >= offsets_[k]) return {k, index - offsets_[k]};
  throw Error(ErrorKind::TableShape, "sum index out of range");
}

}  // namespace gsmon
