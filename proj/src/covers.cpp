#include "flatbu/covers.hpp"

#include <stdexcept>

namespace flatbu {

namespace {

// Index of the Schreier generator (coset, gen) in the kernel presentation,
// or -1 for the trivial one.
struct SchreierIndex {
  std::size_t t;
  long operator()(std::size_t coset, std::size_t gen) const {
    if (gen == t && coset == 0) return -1;
    long k = static_cast<long>(2 * gen + coset);
    if (gen > t || (gen == t && coset == 1)) --k;
    return k;
  }
};

}  // namespace

Presentation schreier_presentation(const Presentation& p, const Z2Char& phi, std::optional<std::size_t> transversal) {
  p.validate();
  const std::size_t n = p.num_generators();
  if (phi.values.size() != n) throw std::invalid_argument("schreier_presentation: character size mismatch");
  if (phi.is_zero()) throw std::invalid_argument("schreier_presentation: phi = 0 is not an epimorphism");
  if (!is_homomorphism(p, phi)) throw std::invalid_argument("schreier_presentation: phi does not kill every relator");

  std::size_t t = n;
  if (transversal) {
    if (*transversal >= n || !phi.values[*transversal]) {
      throw std::invalid_argument("schreier_presentation: transversal generator must have phi = 1");
    }
    t = *transversal;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      if (phi.values[i]) {
        t = i;
        break;
      }
    }
  }
  const SchreierIndex index{t};

  Presentation out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t c = 0; c < 2; ++c) {
      if (index(c, x) >= 0) out.generators.push_back(p.generators[x] + "." + std::to_string(c));
    }
  }

  auto rewrite = [&](const Word& w, std::size_t coset) {
    std::vector<Letter> letters;
    for (const auto& l : w.letters()) {
      const std::size_t step = phi.values[l.gen];
      const std::int64_t reps = l.exp > 0 ? l.exp : -l.exp;
      for (std::int64_t r = 0; r < reps; ++r) {
        if (l.exp > 0) {
          const long k = index(coset, l.gen);
          if (k >= 0) letters.push_back({static_cast<std::size_t>(k), 1});
          coset ^= step;
        } else {
          coset ^= step;
          const long k = index(coset, l.gen);
          if (k >= 0) letters.push_back({static_cast<std::size_t>(k), -1});
        }
      }
    }
    return free_reduce(Word(std::move(letters)));
  };

  for (const auto& r : p.relators) {
    out.relators.push_back(rewrite(r, 0));
    out.relators.push_back(rewrite(r, 1));
  }
  return out;
}

Presentation kernel_presentation_index2(const Presentation& p, const Z2Char& phi,
                                        std::optional<std::size_t> transversal) {
  return tietze_simplify(schreier_presentation(p, phi, transversal));
}

bool cover_orientable(const SeifertInvariants& si, const Z2Char& phi) {
  const Z2Char w1 = orientation_character(si);
  return w1.is_zero() || w1 == phi;
}

bool is_flat(const SeifertInvariants& si) {
  si.validate();
  if (base_orbifold_euler_characteristic(si) != 0) return false;
  if (!si.total_orientable()) return true;
  return derived_invariants(si).c == 0;
}

CoverReport double_cover(ManifoldId base, const Z2Char& phi) {
  const auto& entry = catalog_entry(base);
  const Presentation p = entry.presentation();
  CoverReport out{base, phi, base, kernel_presentation_index2(p, phi), {}, true, BUIndex::two, std::nullopt};
  out.cover_h1 = abelianization(out.cover_presentation);
  out.orientable = cover_orientable(entry.primary(), phi);
  out.cover = identify(out.cover_h1, out.orientable);
  const auto decision = bu_index(base, phi);
  out.index = decision.index;
  out.lift = decision.lift;
  return out;
}

}  // namespace flatbu
