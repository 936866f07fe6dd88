#include "flatbu/borsuk_ulam.hpp"

#include <stdexcept>

namespace flatbu {

std::optional<BUIndex> bu_index_from_int(int v) {
  if (v < 1 || v > 3) return std::nullopt;
  return static_cast<BUIndex>(v);
}

CupCube cup_cube(const SeifertInvariants& si, const Z2Char& phi) {
  si.validate();
  if (phi.values.size() != si.num_generators()) {
    throw std::invalid_argument("cup_cube: character has " + std::to_string(phi.values.size()) +
                                " values, presentation has " + std::to_string(si.num_generators()) + " generators");
  }
  const auto inv = derived_invariants(si);
  CupCube out;

  if (inv.d > 0) {
    out.case_number = 3;
    long sum = 0;
    for (std::size_t k = 0; k < si.fibers.size(); ++k) {
      const auto a = si.fibers[k].a;
      if (!phi.values[k]) continue;
      if (a % 2 == 0) {
        sum += a / 2;
      } else {
        out.warnings.push_back("phi(s" + std::to_string(k + 1) + ") = 1 with odd a = " + std::to_string(a) +
                               "; its a/2 term is not an integer and was left out");
      }
    }
    out.nonzero = sum % 2 != 0;
    return out;
  }

  if (inv.c % 2 != 0) {
    out.case_number = 2;
    return out;
  }

  out.case_number = 1;
  const long phi_h = phi.values[si.fiber_generator()];
  const mpz_class half_c = inv.c / 2;
  long term = mpz_class(half_c % 2).get_si();
  auto phi_v = [&](std::size_t j) { return static_cast<long>(phi.values[si.surface_generator(j)]); };
  const long g = si.genus;
  switch (si.type) {
    case SeifertType::o1:
      break;
    case SeifertType::o2:
    case SeifertType::n1:
      for (std::size_t j = 0; j < si.num_surface_generators(); ++j) term += phi_v(j);
      break;
    case SeifertType::n2:
      term += g;
      break;
    case SeifertType::n3:
      term += phi_v(0) + g - 1;
      break;
    case SeifertType::n4:
      term += phi_v(0) + phi_v(1) + g - 2;
      break;
  }
  out.nonzero = (phi_h * term) % 2 != 0;
  return out;
}

IndexDecision bu_index(const SeifertInvariants& si, const Z2Char& phi) {
  const Presentation p = build_presentation(si);
  if (phi.values.size() != p.num_generators() || phi.is_zero() || !is_homomorphism(p, phi)) {
    throw std::invalid_argument("bu_index: " + phi.to_string() + " is not an epimorphism onto Z/2");
  }
  IndexDecision out;
  out.cube = cup_cube(si, phi);
  out.lift = integral_lift(p, phi);
  if (out.lift) {
    out.index = BUIndex::one;
  } else if (out.cube.nonzero) {
    out.index = BUIndex::three;
  } else {
    out.index = BUIndex::two;
  }
  return out;
}

IndexDecision bu_index(ManifoldId id, const Z2Char& phi) { return bu_index(catalog_entry(id).primary(), phi); }

}  // namespace flatbu
