// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Hand-transcribed tables used as fixed oracles. These do not go through any
// library builder.

#pragma once

#include <vector>

#include "hyperforge/core.hpp"

namespace testdata {

using hyperforge::AddTable;
using hyperforge::Carrier;
using hyperforge::Element;
using hyperforge::HyperStructure;
using hyperforge::MulTable;
using Lists = std::vector<std::vector<std::vector<Element>>>;

// {0, 1}
inline HyperStructure krasner() {
  Lists add = {{{0}, {1}}, {{1}, {0, 1}}};
  return HyperStructure(Carrier(2), AddTable::from_lists(add),
                        MulTable::from_rows({{0, 0}, {0, 1}}));
}

// 0 -> 0, 1 -> 1, -1 -> 2
inline HyperStructure sign() {
  Lists add = {{{0}, {1}, {2}}, {{1}, {1}, {0, 1, 2}}, {{2}, {0, 1, 2}, {2}}};
  return HyperStructure(Carrier(3), AddTable::from_lists(add),
                        MulTable::from_rows({{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}));
}

// 0, 1, a, a^2, a^3 with a^4 = 1; the 5 x 5 matrix read row by row.
inline Lists ex5_add() {
  return {{{0}, {1}, {2}, {3}, {4}},
          {{1}, {0, 1}, {3, 4}, {2, 4}, {2, 3}},
          {{2}, {3, 4}, {0, 2}, {1, 4}, {1, 3}},
          {{3}, {2, 4}, {1, 4}, {0, 3}, {1, 2}},
          {{4}, {2, 3}, {1, 3}, {1, 2}, {0, 4}}};
}

inline HyperStructure ex5() {
  std::vector<std::vector<Element>> mul(5, std::vector<Element>(5, 0));
  for (Element i = 1; i < 5; ++i)
    for (Element j = 1; j < 5; ++j) mul[i][j] = 1 + ((i - 1) + (j - 1)) % 4;
  return HyperStructure(Carrier(5), AddTable::from_lists(ex5_add()), MulTable::from_rows(mul));
}

}  // namespace testdata
