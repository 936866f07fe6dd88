#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "flatbu/characters.hpp"
#include "flatbu/presentation.hpp"

namespace flatbu {

/// Orientation type of a Seifert fibration: o = orientable base, n = not.
enum class SeifertType { o1, o2, n1, n2, n3, n4 };

std::string_view to_string(SeifertType t);
std::optional<SeifertType> parse_seifert_type(std::string_view s);

struct ExceptionalFiber {
  std::int64_t a = 2;
  std::int64_t b = 1;

  friend bool operator==(const ExceptionalFiber&, const ExceptionalFiber&) = default;
};

/// Seifert symbol {b; (type, g); (a_1,b_1), ..., (a_n,b_n)}.
struct SeifertInvariants {
  std::int64_t b = 0;
  SeifertType type = SeifertType::o1;
  std::int64_t genus = 0;
  std::vector<ExceptionalFiber> fibers;

  /// Throws std::invalid_argument on coprimality, genus or obstruction violations.
  void validate() const;

  bool base_orientable() const { return type == SeifertType::o1 || type == SeifertType::o2; }
  bool total_orientable() const { return type == SeifertType::o1 || type == SeifertType::n2; }

  /// Number of v generators: 2g for an orientable base, g otherwise.
  std::size_t num_surface_generators() const;
  std::size_t num_generators() const { return fibers.size() + num_surface_generators() + 1; }
  std::size_t fiber_generator() const { return num_generators() - 1; }
  std::size_t surface_generator(std::size_t j) const { return fibers.size() + j; }

  /// Sign e_j in the relator v_j h v_j^-1 h^-e_j.
  int fiber_sign(std::size_t j) const;

  std::string to_string() const;
};

/// Equality up to a permutation of the exceptional fibers.
bool equivalent_symbols(const SeifertInvariants& x, const SeifertInvariants& y);

struct DerivedInvariants {
  mpz_class a;  // lcm of the a_k, 1 without exceptional fibers
  mpz_class c;  // b a + sum b_k (a / a_k)
  std::size_t d = 0;  // number of even a_k
};

Presentation build_presentation(const SeifertInvariants& si);
DerivedInvariants derived_invariants(const SeifertInvariants& si);

/// First Stiefel-Whitney class on the generators of build_presentation(si).
Z2Char orientation_character(const SeifertInvariants& si);

/// Same manifold with the opposite orientation. Orientable total spaces only.
SeifertInvariants reverse_orientation(const SeifertInvariants& si);

/// Euler characteristic of the base orbifold, as an exact rational.
mpq_class base_orbifold_euler_characteristic(const SeifertInvariants& si);

/// Input schema: {"b": int, "type": "o1|o2|n1|n2|n3|n4", "g": int, "pairs": [[a,b],...]}.
SeifertInvariants seifert_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SeifertInvariants& si);

}  // namespace flatbu
