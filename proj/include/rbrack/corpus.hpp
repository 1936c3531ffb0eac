#pragma once

#include <string>
#include <vector>

#include "rbrack/cayley.hpp"

namespace rbrack {

struct NamedTable {
  std::string name;
  CayleyTable table;
  bool expect_quandle = false;  // claimed status; racks that may not be quandles
                                // carry false here
};

// The fixed test corpus: trivial and dihedral quandles, conjugation / core /
// Alexander quandles of small groups, a couple of products. Every entry is a
// rack; expect_quandle marks the ones that are quandles by construction.
std::vector<NamedTable> corpus_racks(int max_n);

// All labeled racks on {0..n-1}, enumerated through their translation maps
// (a table is a rack iff every S_y is a permutation and
// S_z S_y = S_{S_z(y)} S_z). Counts: 1, 2, 13, 114 for n = 1..4.
std::vector<CayleyTable> all_racks_of_size(int n);

}  // namespace rbrack
