#include "flatbu/equivalence.hpp"

#include <algorithm>
#include <numeric>

#include "flatbu/covers.hpp"
#include "flatbu/errors.hpp"

namespace flatbu {

bool check_homomorphism(ManifoldId id, const std::vector<Word>& images) {
  const Presentation p = catalog_entry(id).presentation();
  if (images.size() != p.num_generators()) return false;
  for (const auto& w : images) {
    for (const auto& l : w.letters()) {
      if (l.gen >= p.num_generators()) return false;
    }
  }
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [&](const Word& r) { return is_trivial(id, substitute(r, images)); });
}

namespace {

bool composes_to_identity(ManifoldId id, const std::vector<Word>& outer, const std::vector<Word>& inner) {
  for (std::size_t g = 0; g < inner.size(); ++g) {
    const Word w = Word::generator(g).inverse() * substitute(inner[g], outer);
    if (!is_trivial(id, w)) return false;
  }
  return true;
}

}  // namespace

CertificateCheck check_certificate(ManifoldId id, const AutomorphismCertificate& cert) {
  CertificateCheck out;
  out.forward_homomorphism = check_homomorphism(id, cert.images);
  out.inverse_homomorphism = check_homomorphism(id, cert.inverse_images);
  if (out.forward_homomorphism && out.inverse_homomorphism) {
    out.mutually_inverse = composes_to_identity(id, cert.images, cert.inverse_images) &&
                           composes_to_identity(id, cert.inverse_images, cert.images);
  }
  if (out.forward_homomorphism) {
    const auto& epis = catalog_entry(id).classical_epis;
    const auto valid = [&](int k) { return k >= 1 && static_cast<std::size_t>(k) <= epis.size(); };
    out.relations_hold = std::all_of(cert.relates.begin(), cert.relates.end(), [&](const auto& rel) {
      return valid(rel.first) && valid(rel.second) &&
             epis[rel.first - 1] == pull_back(epis[rel.second - 1], cert.images);
    });
  }
  return out;
}

bool verify_certificate(ManifoldId id, const AutomorphismCertificate& cert) {
  return check_certificate(id, cert).automorphism();
}

Z2Char pull_back(const Z2Char& phi, const std::vector<Word>& images) {
  Z2Char out;
  out.values.reserve(images.size());
  for (const auto& w : images) out.values.push_back(phi(w));
  return out;
}

std::vector<EpiClass> partition_epimorphisms(ManifoldId id) {
  const auto& entry = catalog_entry(id);
  const auto epis = z2_characters(entry.presentation());

  std::vector<std::size_t> parent(epis.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto position = [&](const Z2Char& phi) {
    return static_cast<std::size_t>(std::find(epis.begin(), epis.end(), phi) - epis.begin());
  };

  for (const auto& cert : entry.certificates) {
    if (!verify_certificate(id, cert)) continue;
    for (std::size_t i = 0; i < epis.size(); ++i) {
      const std::size_t j = position(pull_back(epis[i], cert.images));
      if (j == epis.size()) continue;  // cannot happen for an automorphism
      parent[find(i)] = find(j);
    }
  }

  std::vector<EpiClass> classes;
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < epis.size(); ++i) {
    const std::size_t r = find(i);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      const auto report = double_cover(id, epis[i]);
      roots.push_back(r);
      classes.push_back({{epis[i]}, report.cover, report.index});
    } else {
      classes[static_cast<std::size_t>(it - roots.begin())].members.push_back(epis[i]);
    }
  }

  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      if (classes[a].cover == classes[b].cover && classes[a].index == classes[b].index) {
        throw IncompleteSeparation(std::string(to_string(id)) + ": classes of " + classes[a].members[0].to_string() +
                                   " and " + classes[b].members[0].to_string() + " share cover " +
                                   std::string(to_string(classes[a].cover)) + " and index " +
                                   std::to_string(value(classes[a].index)) + " but no certificate relates them");
      }
    }
  }
  return classes;
}

}  // namespace flatbu
