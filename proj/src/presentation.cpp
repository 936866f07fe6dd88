#include "flatbu/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace flatbu {

void Presentation::validate() const {
  for (const auto& r : relators) {
    for (const auto& l : r.letters()) {
      if (l.gen >= generators.size()) {
        throw std::invalid_argument("relator uses generator index " + std::to_string(l.gen) + " but only " +
                                    std::to_string(generators.size()) + " generators exist");
      }
    }
  }
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
  os << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) os << (i ? ", " : "") << flatbu::to_string(relators[i], generators);
  os << " >";
  return os.str();
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (const auto& l : p.relators[i].letters()) {
      if (l.gen >= p.generators.size()) throw std::invalid_argument("relation_matrix: generator index out of range");
      m(i, l.gen) += mpz_class(static_cast<long>(l.exp));
    }
  }
  return m;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << '^' << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AbelianGroup abelian_group_of(const IntMatrix& relations) {
  SmithForm f = smith_normal_form(relations);
  AbelianGroup g;
  g.rank = relations.cols() - f.rank;
  for (const auto& d : f.diagonal()) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

AbelianGroup abelianization(const Presentation& p) { return abelian_group_of(relation_matrix(p)); }

namespace {

struct Elimination {
  std::size_t relator;
  std::size_t position;
  std::size_t gen;
  std::int64_t cost;
};

void normalize_relators(std::vector<Word>& relators) {
  std::vector<Word> kept;
  for (const auto& r : relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (std::find(kept.begin(), kept.end(), c) != kept.end()) continue;
    kept.push_back(std::move(c));
  }
  relators = std::move(kept);
}

std::optional<Elimination> pick_elimination(const Presentation& p) {
  std::vector<std::int64_t> occurrences(p.generators.size(), 0);
  for (const auto& r : p.relators) {
    for (const auto& l : r.letters()) occurrences[l.gen] += std::llabs(l.exp);
  }
  std::optional<Elimination> best;
  for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
    const auto& letters = p.relators[ri].letters();
    for (std::size_t pos = 0; pos < letters.size(); ++pos) {
      const Letter& l = letters[pos];
      if (std::llabs(l.exp) != 1) continue;
      bool unique = true;
      for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k != pos && letters[k].gen == l.gen) {
          unique = false;
          break;
        }
      }
      if (!unique) continue;
      // Substituting a word of length len-1 for every other occurrence.
      const std::int64_t len = p.relators[ri].length();
      const std::int64_t cost = (len - 1) * (occurrences[l.gen] - 1) - len;
      if (!best || cost < best->cost ||
          (cost == best->cost && p.relators[ri].length() < p.relators[best->relator].length())) {
        best = Elimination{ri, pos, l.gen, cost};
      }
    }
  }
  return best;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, int max_passes) {
  p.validate();
  Presentation out = p;
  normalize_relators(out.relators);

  for (int pass = 0; pass < max_passes; ++pass) {
    auto elim = pick_elimination(out);
    if (!elim) break;

    // Rotate the relator so the chosen letter comes first: g^e w = 1.
    const auto& letters = out.relators[elim->relator].letters();
    std::vector<Letter> rest(letters.begin() + static_cast<long>(elim->position) + 1, letters.end());
    rest.insert(rest.end(), letters.begin(), letters.begin() + static_cast<long>(elim->position));
    const std::int64_t e = letters[elim->position].exp;
    Word w(std::move(rest));
    Word value = e == 1 ? w.inverse() : w;

    std::vector<Word> images;
    const std::size_t g = elim->gen;
    for (std::size_t i = 0; i < out.generators.size(); ++i) {
      if (i == g) {
        images.push_back(value);
      } else {
        images.push_back(Word::generator(i < g ? i : i - 1));
      }
    }
    // Renumber the value itself: it never mentions g.
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (i == g) images[i] = substitute(value, images);
    }

    std::vector<Word> relators;
    for (std::size_t ri = 0; ri < out.relators.size(); ++ri) {
      if (ri == elim->relator) continue;
      relators.push_back(substitute(out.relators[ri], images));
    }
    out.generators.erase(out.generators.begin() + static_cast<long>(g));
    out.relators = std::move(relators);
    normalize_relators(out.relators);
  }
  return out;
}

}  // namespace flatbu
