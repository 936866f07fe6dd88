#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "flatbu/affine.hpp"
#include "flatbu/characters.hpp"
#include "flatbu/presentation.hpp"
#include "flatbu/seifert.hpp"

namespace flatbu {

/// The ten closed flat 3-manifolds: M1..M6 orientable, N1..N4 not.
enum class ManifoldId { M1, M2, M3, M4, M5, M6, N1, N2, N3, N4 };

inline constexpr std::array<ManifoldId, 10> kAllManifolds{
    ManifoldId::M1, ManifoldId::M2, ManifoldId::M3, ManifoldId::M4, ManifoldId::M5,
    ManifoldId::M6, ManifoldId::N1, ManifoldId::N2, ManifoldId::N3, ManifoldId::N4};

std::string_view to_string(ManifoldId id);
std::optional<ManifoldId> parse_manifold_id(std::string_view s);

/// An automorphism theta of pi_1 given by generator images, with its inverse.
/// `relates` lists pairs (i, j) of 1-based classical epimorphism numbers
/// claimed to satisfy phi_i = phi_j o theta.
struct AutomorphismCertificate {
  std::string description;
  std::vector<Word> images;
  std::vector<Word> inverse_images;
  std::vector<std::pair<int, int>> relates;
  // True for an entry added to correct a claimed certificate that fails
  // verification; such entries are kept apart from the claims themselves.
  bool corrected = false;
};

/// A claimed integral lift psi of the classical epimorphism phi_{epi}.
struct ClaimedLift {
  int epi = 0;
  std::vector<long> psi;
};

struct CatalogEntry {
  ManifoldId id;
  std::vector<SeifertInvariants> forms;  // forms[0] is the primary form
  bool orientable = true;
  AbelianGroup h1;
  std::vector<AffineIsometry> rep;  // one per generator of the primary presentation
  std::vector<AutomorphismCertificate> certificates;

  // Classical numbering phi_1, phi_2, ... of the epimorphisms onto Z/2.
  std::vector<Z2Char> classical_epis;
  std::vector<ClaimedLift> claimed_lifts;
  std::vector<int> claimed_no_lift;  // classical numbers claimed not to lift

  const SeifertInvariants& primary() const { return forms.front(); }
  Presentation presentation() const;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(ManifoldId id);

/// Looks up the unique entry with this (H1, orientability) signature.
/// Throws AmbiguousOrUnknown otherwise.
ManifoldId identify(const AbelianGroup& h1, bool orientable);

/// Word problem in pi_1(id) through the faithful affine representation.
bool is_trivial(ManifoldId id, const Word& w);

/// Rank of the pure translations among products of at most `max_factors`
/// generator powers g^e with 0 < |e| <= 2, under the affine representation.
/// Stops early once rank 3 is reached.
std::size_t translation_rank(ManifoldId id, int max_factors = 4);

/// 1-based classical number of phi, if phi is an epimorphism of id.
std::optional<int> classical_number(ManifoldId id, const Z2Char& phi);

/// Catalog entry having a form equal to si up to the order of the fibers.
std::optional<ManifoldId> find_form(const SeifertInvariants& si);

nlohmann::json catalog_json();

}  // namespace flatbu
