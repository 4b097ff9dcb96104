/*
 * Copyright (C) 2026 The permodel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <vector>

#include "permodel/value.hpp"

namespace fixture {

/// Every relation with at most `max_pairs` pairs drawn from keys x values.
inline std::vector<permodel::Relation> all_relations(const std::vector<permodel::Value>& keys,
                                                     const std::vector<permodel::Value>& values,
                                                     std::size_t max_pairs) {
  std::vector<permodel::Value> cells;
  for (const auto& k : keys) {
    for (const auto& v : values) cells.push_back(permodel::Value::pair(k, v));
  }
  std::vector<permodel::Relation> out;
  std::vector<permodel::Value> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    out.emplace_back(permodel::Set::from(chosen));
    if (chosen.size() == max_pairs) return;
    for (std::size_t i = from; i < cells.size(); ++i) {
      chosen.push_back(cells[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace fixture
