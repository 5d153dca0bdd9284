// Copyright 2026 The lampcs Authors.
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

#pragma once

#include <algorithm>
#include <compare>
#include <vector>

namespace lampcs {

/// Index set over a single signal vector (entries in [0, N)).
/// Algorithms keep selection order; serialization sorts.
using SupportSet = std::vector<int>;

/// One entry of a 2-D support: `row` indexes the time sample in [0, N),
/// `col` the measurement vector (antenna position) in [0, P).
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

using SupportSet2D = std::vector<Cell>;

inline bool contains(const SupportSet& support, int index) {
  return std::find(support.begin(), support.end(), index) != support.end();
}

inline bool contains(const SupportSet2D& support, Cell cell) {
  return std::find(support.begin(), support.end(), cell) != support.end();
}

inline SupportSet sorted_copy(SupportSet support) {
  std::sort(support.begin(), support.end());
  return support;
}

inline SupportSet2D sorted_copy(SupportSet2D support) {
  std::sort(support.begin(), support.end());
  return support;
}

}  // namespace lampcs
