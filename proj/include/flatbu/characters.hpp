#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "flatbu/presentation.hpp"

namespace flatbu {

/// Homomorphism to Z/2, given by its values on the generators.
struct Z2Char {
  std::vector<std::uint8_t> values;

  bool is_zero() const;
  std::uint8_t operator()(const Word& w) const;

  friend auto operator<=>(const Z2Char&, const Z2Char&) = default;
  std::string to_string() const;
};

/// Homomorphism to Z, given by its values on the generators.
struct IntChar {
  std::vector<mpz_class> values;

  friend bool operator==(const IntChar&, const IntChar&) = default;
  std::string to_string() const;
};

IntChar make_int_char(const std::vector<long>& values);

bool is_homomorphism(const Presentation& p, const Z2Char& phi);
bool is_homomorphism(const Presentation& p, const IntChar& psi);

/// psi kills every abelianized relator and psi = phi (mod 2).
bool is_lift_of(const Presentation& p, const IntChar& psi, const Z2Char& phi);

/// All epimorphisms onto Z/2, in lexicographic order of the value vector.
std::vector<Z2Char> z2_characters(const Presentation& p);

/// An integral lift of phi, or nullopt when phi does not factor through
/// Z -> Z/2. Decided on the Smith normal form of the relation matrix.
std::optional<IntChar> integral_lift(const Presentation& p, const Z2Char& phi);

namespace gf2 {

using Row = std::vector<std::uint8_t>;

/// Basis of {x : A x = 0} over GF(2); `a` holds the rows of A.
std::vector<Row> nullspace(std::vector<Row> a, std::size_t cols);

/// Some x with A x = b over GF(2), or nullopt.
std::optional<Row> solve(std::vector<Row> a, Row b, std::size_t cols);

}  // namespace gf2

}  // namespace flatbu
