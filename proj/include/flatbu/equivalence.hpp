#pragma once

#include <vector>

#include "flatbu/borsuk_ulam.hpp"
#include "flatbu/catalog.hpp"
#include "flatbu/characters.hpp"
#include "flatbu/word.hpp"

namespace flatbu {

/// Every relator, with generators replaced by their images, is trivial in pi_1(id).
bool check_homomorphism(ManifoldId id, const std::vector<Word>& images);

struct CertificateCheck {
  bool forward_homomorphism = false;
  bool inverse_homomorphism = false;
  bool mutually_inverse = false;
  bool relations_hold = false;  // phi_i = phi_j o theta for every listed (i, j)

  bool automorphism() const { return forward_homomorphism && inverse_homomorphism && mutually_inverse; }
  bool ok() const { return automorphism() && relations_hold; }
};

CertificateCheck check_certificate(ManifoldId id, const AutomorphismCertificate& cert);

/// Both maps are homomorphisms and compose to the identity on generators.
bool verify_certificate(ManifoldId id, const AutomorphismCertificate& cert);

/// phi o theta, read off the exponent sums of the image words.
Z2Char pull_back(const Z2Char& phi, const std::vector<Word>& images);

struct EpiClass {
  std::vector<Z2Char> members;  // lexicographic order
  ManifoldId cover;
  BUIndex index;
};

/// Orbits of the epimorphisms under the verified certificates. Throws
/// IncompleteSeparation if two classes agree on (cover, index).
std::vector<EpiClass> partition_epimorphisms(ManifoldId id);

}  // namespace flatbu
