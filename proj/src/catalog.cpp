#include "flatbu/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "flatbu/errors.hpp"

namespace flatbu {

namespace {

SeifertInvariants symbol(std::int64_t b, SeifertType type, std::int64_t g, std::vector<ExceptionalFiber> fibers = {}) {
  SeifertInvariants si{b, type, g, std::move(fibers)};
  si.validate();
  return si;
}

AbelianGroup group(std::size_t rank, std::vector<long> torsion = {}) {
  AbelianGroup g{rank, {}};
  for (long t : torsion) g.torsion.emplace_back(t);
  return g;
}

std::vector<Z2Char> chars(std::initializer_list<std::vector<std::uint8_t>> rows) {
  std::vector<Z2Char> out;
  for (const auto& r : rows) out.push_back(Z2Char{r});
  return out;
}

AffineIsometry affine(std::string_view linear, std::string_view translation) {
  return AffineIsometry::parse(linear, translation);
}

AutomorphismCertificate certificate(const SeifertInvariants& si, std::string description,
                                    std::vector<std::string> images, std::vector<std::string> inverse,
                                    std::vector<std::pair<int, int>> relates) {
  const auto names = build_presentation(si).generators;
  AutomorphismCertificate c;
  c.description = std::move(description);
  for (const auto& w : images) c.images.push_back(parse_word(w, names));
  for (const auto& w : inverse) c.inverse_images.push_back(parse_word(w, names));
  c.relates = std::move(relates);
  return c;
}

// Exchanges s_i and s_{i+1} (1-based) among n exceptional fibers plus h.
AutomorphismCertificate fiber_exchange(const SeifertInvariants& si, int i, std::vector<std::pair<int, int>> relates) {
  const int n = static_cast<int>(si.fibers.size());
  auto s = [](int k) { return "s" + std::to_string(k); };
  std::vector<std::string> img, inv;
  for (int k = 1; k <= n; ++k) {
    if (k == i) {
      img.push_back(s(i) + " " + s(i + 1) + " " + s(i) + "^-1");
      inv.push_back(s(i + 1));
    } else if (k == i + 1) {
      img.push_back(s(i));
      inv.push_back(s(i + 1) + "^-1 " + s(i) + " " + s(i + 1));
    } else {
      img.push_back(s(k));
      inv.push_back(s(k));
    }
  }
  img.push_back("h");
  inv.push_back("h");
  return certificate(si, "exchange " + s(i) + " and " + s(i + 1), img, inv, std::move(relates));
}

// Exchanges v1 and v2 on a two-generator Klein-bottle-type base.
AutomorphismCertificate surface_exchange(const SeifertInvariants& si, std::vector<std::pair<int, int>> relates) {
  return certificate(si, "v1 -> v1 v2 v1^-1, v2 -> v1", {"v1 v2 v1^-1", "v1", "h"}, {"v2", "v2^-1 v1 v2", "h"},
                     std::move(relates));
}

std::vector<CatalogEntry> build_catalog() {
  using T = SeifertType;
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e{ManifoldId::M1, {symbol(0, T::o1, 1)}, true, group(3), {}, {}, {}, {}, {}};
    e.rep = {
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "0, 1/2, 0"),  // v1
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "1/2, 0, 0"),  // v2
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "0, 0, 1"),    // h
    };
    const auto& si = e.primary();
    e.certificates = {
        certificate(si, "exchange v1 and v2", {"v2", "v1", "h"}, {"v2", "v1", "h"}, {{1, 2}, {5, 6}}),
        certificate(si, "exchange v2 and h", {"v1", "h", "v2"}, {"v1", "h", "v2"}, {{2, 4}, {3, 5}}),
        certificate(si, "v1 -> v1 v2", {"v1 v2", "v2", "h"}, {"v1 v2^-1", "v2", "h"}, {{6, 7}, {2, 3}}),
    };
    e.classical_epis = chars({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{ManifoldId::M2,
                   {symbol(-2, T::o1, 0, {{2, 1}, {2, 1}, {2, 1}, {2, 1}}), symbol(0, T::n2, 2)},
                   true, group(1, {2, 2}), {}, {}, {}, {}, {}};
    e.rep = {
        affine("-1, 0, 0, 0, -1, 0, 0, 0, 1", "1/2, -1/2, -1/2"),  // s1
        affine("-1, 0, 0, 0, -1, 0, 0, 0, 1", "0, 0, -1/2"),       // s2
        affine("-1, 0, 0, 0, -1, 0, 0, 0, 1", "0, 1/2, -1/2"),     // s3
        affine("-1, 0, 0, 0, -1, 0, 0, 0, 1", "1/2, 0, -1/2"),     // s4
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "0, 0, 1"),            // h
    };
    const auto& si = e.primary();
    e.certificates = {
        fiber_exchange(si, 1, {{4, 2}, {5, 3}}),
        fiber_exchange(si, 2, {{2, 1}, {6, 5}}),
        fiber_exchange(si, 3, {{3, 2}, {5, 4}}),
    };
    e.classical_epis = chars({{1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 1, 1, 0, 0},
                              {0, 1, 0, 1, 0}, {0, 0, 1, 1, 0}, {1, 1, 1, 1, 0}});
    e.claimed_lifts = {{7, {1, 1, 1, 1, -2}}};
    e.claimed_no_lift = {1};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{ManifoldId::M3, {symbol(-1, T::o1, 0, {{3, 1}, {3, 1}, {3, 1}})}, true, group(1, {3}),
                   {}, {}, {}, {}, {}};
    e.rep = {
        affine("0, 1, 0, -1, -1, 0, 0, 0, 1", "1/2, 1/2, -1/3"),  // s1
        affine("0, 1, 0, -1, -1, 0, 0, 0, 1", "0, 0, -1/3"),      // s2
        affine("0, 1, 0, -1, -1, 0, 0, 0, 1", "0, 1/2, -1/3"),    // s3
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "0, 0, 1"),           // h
    };
    e.classical_epis = chars({{1, 1, 1, 1}});
    e.claimed_lifts = {{1, {1, 1, 1, -3}}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{ManifoldId::M4, {symbol(-1, T::o1, 0, {{2, 1}, {4, 1}, {4, 1}})}, true, group(1, {2}),
                   {}, {}, {}, {}, {}};
    e.rep = {
        affine("-1, 0, 0, 0, -1, 0, 0, 0, 1", "0, 1/2, -1/2"),  // s1
        affine("0, 1, 0, -1, 0, 0, 0, 0, 1", "0, 0, -1/4"),     // s2
        affine("0, 1, 0, -1, 0, 0, 0, 0, 1", "0, 1/2, -1/4"),   // s3
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "0, 0, 1"),         // h
    };
    e.certificates = {fiber_exchange(e.primary(), 2, {{2, 1}})};
    e.classical_epis = chars({{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}});
    e.claimed_lifts = {{3, {2, 1, 1, -4}}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{ManifoldId::M5, {symbol(-1, T::o1, 0, {{2, 1}, {3, 1}, {6, 1}})}, true, group(1),
                   {}, {}, {}, {}, {}};
    e.rep = {
        affine("-1, 0, 0, 0, -1, 0, 0, 0, 1", "0, 1/2, -1/2"),  // s1
        affine("0, 1, 0, -1, -1, 0, 0, 0, 1", "0, 0, -1/3"),    // s2
        affine("1, 1, 0, -1, 0, 0, 0, 0, 1", "0, 1/2, -1/6"),   // s3
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "0, 0, 1"),         // h
    };
    e.classical_epis = chars({{1, 0, 1, 0}});
    e.claimed_lifts = {{1, {3, 2, 1, -6}}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{ManifoldId::M6, {symbol(-1, T::n2, 1, {{2, 1}, {2, 1}})}, true, group(0, {4, 4}),
                   {}, {}, {}, {}, {}};
    e.rep = {
        affine("-1, 0, 0, 0, -1, 0, 0, 0, 1", "1, 0, -1/2"),  // s1
        affine("-1, 0, 0, 0, -1, 0, 0, 0, 1", "0, 0, -1/2"),  // s2
        affine("1, 0, 0, 0, -1, 0, 0, 0, -1", "1/2, 1/2, 0"),  // v1
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "0, 0, 1"),        // h
    };
    const auto& si = e.primary();
    e.certificates = {
        certificate(si, "v1 -> s2 v1, s2 -> (s2 v1) s2^-1 (s2 v1)^-1", {"s1", "s2 v1 s2^-1 v1^-1 s2^-1", "s2 v1", "h"},
                    {"s1", "v1^-1 s2^-1 v1", "v1^-1 s2 v1^2", "h"}, {{1, 2}}),
        certificate(si, "s1 -> v1, s2 -> v1 s1^-2, v1 -> s1, h -> v1^-2", {"v1", "v1 s1^-2", "s1", "v1^-2"},
                    {"v1", "s1 v1^-2", "s1", "s1^-2"}, {{1, 3}}),
    };
    // The claimed inverse above sends [s1, h] to [v1, s1^-2] = s1^4, which is
    // not trivial. The forward map squares to the identity, so it is its own
    // inverse.
    auto involution = certificate(si, "s1 <-> v1, s2 -> v1 s1^-2, h -> v1^-2 (self-inverse)",
                                  {"v1", "v1 s1^-2", "s1", "v1^-2"}, {"v1", "v1 s1^-2", "s1", "v1^-2"}, {{1, 3}});
    involution.corrected = true;
    e.certificates.push_back(std::move(involution));
    e.classical_epis = chars({{1, 1, 0, 0}, {1, 1, 1, 0}, {0, 0, 1, 0}});
    e.claimed_no_lift = {1};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{ManifoldId::N1, {symbol(0, T::n1, 2), symbol(0, T::o2, 1)}, false, group(2, {2}),
                   {}, {}, {}, {}, {}};
    e.rep = {
        affine("1, 0, 0, 0, -1, 0, 0, 0, 1", "-1/2, 0, 0"),   // v1
        affine("1, 0, 0, 0, -1, 0, 0, 0, 1", "1/2, 1/2, 0"),  // v2
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "0, 0, 1"),       // h
    };
    const auto& si = e.primary();
    e.certificates = {
        certificate(si, "v1 -> h v1, v2 -> h^-1 v2", {"h v1", "h^-1 v2", "h"}, {"h^-1 v1", "h v2", "h"}, {{4, 1}}),
        surface_exchange(si, {{3, 2}, {7, 6}}),
    };
    e.classical_epis = chars({{1, 1, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}, {1, 1, 0}, {1, 0, 0}, {0, 1, 0}});
    e.claimed_lifts = {{1, {2, -2, 1}}, {5, {1, -2, 0}}};
    e.claimed_no_lift = {6};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{ManifoldId::N2, {symbol(1, T::n1, 2), symbol(1, T::o2, 1)}, false, group(2), {}, {}, {}, {}, {}};
    e.rep = {
        affine("1, 0, 0, 0, -1, 0, 0, 0, 1", "-1/2, 0, 1/2"),  // v1
        affine("1, 0, 0, 0, -1, 0, 0, 0, 1", "1/2, 1/2, 0"),   // v2
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "0, 0, 1"),        // h
    };
    e.certificates = {surface_exchange(e.primary(), {{3, 2}})};
    e.classical_epis = chars({{1, 1, 0}, {1, 0, 0}, {0, 1, 0}});
    e.claimed_lifts = {{1, {1, 0, 0}}, {2, {1, 0, -2}}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{ManifoldId::N3, {symbol(0, T::n3, 2)}, false, group(1, {2, 2}), {}, {}, {}, {}, {}};
    e.rep = {
        affine("1, 0, 0, 0, -1, 0, 0, 0, 1", "-1/2, 0, 0"),    // v1
        affine("1, 0, 0, 0, -1, 0, 0, 0, -1", "1/2, 1/2, 0"),  // v2
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "0, 0, 1"),        // h
    };
    e.certificates = {
        certificate(e.primary(), "v2 -> v2 h", {"v1", "v2 h", "h"}, {"v1", "v2 h^-1", "h"}, {{2, 1}, {4, 3}}),
    };
    e.classical_epis = chars({{1, 1, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}, {1, 1, 0}, {1, 0, 0}, {0, 1, 0}});
    e.claimed_lifts = {{5, {1, 1, 0}}};
    e.claimed_no_lift = {1, 6, 7};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{ManifoldId::N4, {symbol(1, T::n3, 2), symbol(0, T::n1, 1, {{2, 1}, {2, 1}})}, false,
                   group(1, {4}), {}, {}, {}, {}, {}};
    e.rep = {
        affine("1, 0, 0, 0, -1, 0, 0, 0, 1", "-1/2, 0, 1/2"),  // v1
        affine("1, 0, 0, 0, -1, 0, 0, 0, -1", "1/2, 1/2, 0"),  // v2
        affine("1, 0, 0, 0, 1, 0, 0, 0, 1", "0, 0, 1"),        // h
    };
    e.classical_epis = chars({{1, 1, 0}, {1, 0, 0}, {0, 1, 0}});
    e.claimed_lifts = {{1, {1, -1, 0}}};
    e.claimed_no_lift = {2, 3};
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::string_view to_string(ManifoldId id) {
  static constexpr std::array<std::string_view, 10> names{"M1", "M2", "M3", "M4", "M5",
                                                          "M6", "N1", "N2", "N3", "N4"};
  return names[static_cast<std::size_t>(id)];
}

std::optional<ManifoldId> parse_manifold_id(std::string_view s) {
  for (auto id : kAllManifolds) {
    const auto name = to_string(id);
    if (s.size() == name.size() && std::toupper(static_cast<unsigned char>(s[0])) == name[0] && s[1] == name[1]) {
      return id;
    }
  }
  return std::nullopt;
}

Presentation CatalogEntry::presentation() const { return build_presentation(primary()); }

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(ManifoldId id) { return catalog().at(static_cast<std::size_t>(id)); }

ManifoldId identify(const AbelianGroup& h1, bool orientable) {
  std::vector<ManifoldId> matches;
  for (const auto& e : catalog()) {
    if (e.h1 == h1 && e.orientable == orientable) matches.push_back(e.id);
  }
  if (matches.size() != 1) {
    throw AmbiguousOrUnknown("no unique flat manifold with H1 = " + h1.to_string() +
                             (orientable ? ", orientable" : ", non-orientable") + " (" +
                             std::to_string(matches.size()) + " matches)");
  }
  return matches.front();
}

bool is_trivial(ManifoldId id, const Word& w) { return eval_word(catalog_entry(id).rep, w).is_identity(); }

std::size_t translation_rank(ManifoldId id, int max_factors) {
  const auto& rep = catalog_entry(id).rep;
  std::vector<AffineIsometry> steps;
  for (const auto& g : rep) {
    for (int e : {-2, -1, 1, 2}) steps.push_back(g.pow(e));
  }

  std::vector<std::array<Rational, 3>> basis;
  auto add = [&](const std::array<Rational, 3>& v) {
    auto rows = basis;
    rows.push_back(v);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 3 && rank < rows.size(); ++col) {
      std::size_t pivot = rank;
      while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        const Rational f = rows[r][col] / rows[rank][col];
        for (std::size_t i = 0; i < 3; ++i) rows[r][i] -= f * rows[rank][i];
      }
      ++rank;
    }
    if (rank > basis.size()) basis.push_back(v);
  };

  std::vector<AffineIsometry> frontier{AffineIsometry{}};
  for (int depth = 0; depth < max_factors && basis.size() < 3; ++depth) {
    std::vector<AffineIsometry> next;
    for (const auto& f : frontier) {
      for (const auto& s : steps) {
        AffineIsometry g = f * s;
        if (g.has_identity_linear_part()) {
          add({g.translation(0), g.translation(1), g.translation(2)});
          if (basis.size() == 3) return 3;
        }
        next.push_back(std::move(g));
      }
    }
    frontier = std::move(next);
  }
  return basis.size();
}

std::optional<int> classical_number(ManifoldId id, const Z2Char& phi) {
  const auto& epis = catalog_entry(id).classical_epis;
  auto it = std::find(epis.begin(), epis.end(), phi);
  if (it == epis.end()) return std::nullopt;
  return static_cast<int>(it - epis.begin()) + 1;
}

std::optional<ManifoldId> find_form(const SeifertInvariants& si) {
  for (const auto& e : catalog()) {
    for (const auto& f : e.forms) {
      if (equivalent_symbols(f, si)) return e.id;
    }
  }
  return std::nullopt;
}

nlohmann::json catalog_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : catalog()) {
    nlohmann::json forms = nlohmann::json::array();
    for (const auto& f : e.forms) {
      auto j = to_json(f);
      j["symbol"] = f.to_string();
      forms.push_back(j);
    }
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& t : e.h1.torsion) torsion.push_back(t.get_si());
    out.push_back({{"id", std::string(to_string(e.id))},
                   {"orientable", e.orientable},
                   {"h1", {{"rank", e.h1.rank}, {"torsion", torsion}, {"text", e.h1.to_string()}}},
                   {"forms", forms}});
  }
  return out;
}

}  // namespace flatbu
