#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "flatbu/word.hpp"

namespace flatbu {

using Rational = mpq_class;

/// Affine map x -> x L + t on row vectors of Q^3. Composition follows the
/// row convention: (f * g)(x) = g(f(x)), so a product of letters applies the
/// leftmost one first.
class AffineIsometry {
 public:
  AffineIsometry();
  AffineIsometry(std::array<Rational, 9> linear, std::array<Rational, 3> translation);

  /// Parses comma-separated rationals, e.g. ("0, 1, 0, -1, -1, 0, 0, 0, 1", "1/2, 0, -1/3").
  static AffineIsometry parse(std::string_view linear, std::string_view translation);

  const Rational& linear(std::size_t i, std::size_t j) const { return linear_[3 * i + j]; }
  const Rational& translation(std::size_t i) const { return translation_[i]; }

  AffineIsometry operator*(const AffineIsometry& then) const;
  AffineIsometry inverse() const;
  AffineIsometry pow(std::int64_t n) const;

  Rational determinant() const;
  bool has_identity_linear_part() const;
  bool is_identity() const;

  std::array<Rational, 3> apply(const std::array<Rational, 3>& x) const;

  friend bool operator==(const AffineIsometry&, const AffineIsometry&) = default;
  std::string to_string() const;

 private:
  std::array<Rational, 9> linear_;
  std::array<Rational, 3> translation_;
};

/// Product of the letters of w under rep (leftmost letter applied first).
AffineIsometry eval_word(std::span<const AffineIsometry> rep, const Word& w);

}  // namespace flatbu
