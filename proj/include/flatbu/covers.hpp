#pragma once

#include <cstddef>
#include <optional>

#include "flatbu/borsuk_ulam.hpp"
#include "flatbu/catalog.hpp"
#include "flatbu/characters.hpp"
#include "flatbu/presentation.hpp"
#include "flatbu/seifert.hpp"

namespace flatbu {

/// Reidemeister-Schreier presentation of ker(phi) with transversal {1, t},
/// before any simplification: 2n - 1 generators and 2m relators. The
/// generator x.c stands for r_c x r_{c + phi(x)}^-1 with r_0 = 1, r_1 = t;
/// t.0 is trivial and left out. When `transversal` is empty, t is the first
/// generator with phi = 1.
Presentation schreier_presentation(const Presentation& p, const Z2Char& phi,
                                   std::optional<std::size_t> transversal = std::nullopt);

/// schreier_presentation followed by tietze_simplify. Rejects phi = 0.
Presentation kernel_presentation_index2(const Presentation& p, const Z2Char& phi,
                                        std::optional<std::size_t> transversal = std::nullopt);

/// The double cover along phi is orientable iff w1 is 0 or phi.
bool cover_orientable(const SeifertInvariants& si, const Z2Char& phi);

/// Closed Seifert manifolds with Euclidean geometry: the base orbifold has
/// Euler characteristic 0 and the Euler number vanishes where it is defined.
bool is_flat(const SeifertInvariants& si);

struct CoverReport {
  ManifoldId base;
  Z2Char phi;
  ManifoldId cover;
  Presentation cover_presentation;
  AbelianGroup cover_h1;
  bool orientable = true;
  BUIndex index = BUIndex::two;
  std::optional<IntChar> lift;
};

/// Throws AmbiguousOrUnknown if the cover is not recognized.
CoverReport double_cover(ManifoldId base, const Z2Char& phi);

}  // namespace flatbu
