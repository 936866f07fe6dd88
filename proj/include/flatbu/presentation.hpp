#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "flatbu/smith.hpp"
#include "flatbu/word.hpp"

namespace flatbu {

/// Finitely presented group <generators | relators>.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t num_generators() const { return generators.size(); }

  /// Throws std::invalid_argument if a relator mentions an unknown generator.
  void validate() const;

  /// Generators minus relators.
  long deficiency() const {
    return static_cast<long>(generators.size()) - static_cast<long>(relators.size());
  }

  std::string to_string() const;
};

/// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(const Presentation& p);

/// Finitely generated abelian group Z^rank + Z/t_1 + ... with t_1 | t_2 | ...
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  std::string to_string() const;
};

AbelianGroup abelian_group_of(const IntMatrix& relations);
AbelianGroup abelianization(const Presentation& p);

/// Simplifies p with Tietze moves: free and cyclic reduction, removal of
/// trivial or duplicate relators, and elimination of a generator that
/// occurs exactly once, with exponent +-1, in some relator. At most
/// `max_passes` generators are eliminated.
Presentation tietze_simplify(const Presentation& p, int max_passes = 100);

}  // namespace flatbu
