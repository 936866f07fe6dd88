#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatbu/catalog.hpp"
#include "flatbu/characters.hpp"
#include "flatbu/seifert.hpp"

namespace flatbu {

/// Z/2-index of a free involution: the largest n for which every map to R^n
/// identifies some orbit pair.
enum class BUIndex { one = 1, two = 2, three = 3 };

inline int value(BUIndex i) { return static_cast<int>(i); }
std::optional<BUIndex> bu_index_from_int(int v);

/// Coefficient of [phi]^3 on the top class of H^3(N; Z/2), computed from the
/// Seifert invariants of the quotient N.
struct CupCube {
  bool nonzero = false;
  int case_number = 0;  // 1: d = 0 and c even, 2: d = 0 and c odd, 3: d > 0
  // Set when an odd a_k has phi(s_k) = 1; the a_k/2 term is then skipped.
  std::vector<std::string> warnings;
};

CupCube cup_cube(const SeifertInvariants& si, const Z2Char& phi);

struct IndexDecision {
  BUIndex index = BUIndex::two;
  std::optional<IntChar> lift;  // witness when index is 1
  CupCube cube;
};

/// 1 if phi has an integral lift, else 3 if the cup-cube is nonzero, else 2.
IndexDecision bu_index(const SeifertInvariants& si, const Z2Char& phi);
IndexDecision bu_index(ManifoldId id, const Z2Char& phi);

}  // namespace flatbu
