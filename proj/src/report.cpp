#include "flatbu/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "flatbu/errors.hpp"

namespace flatbu {

namespace {

using nlohmann::json;

json mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

json char_json(const Z2Char& phi) {
  json out = json::array();
  for (auto v : phi.values) out.push_back(static_cast<int>(v));
  return out;
}

json int_char_json(const IntChar& psi) {
  json out = json::array();
  for (const auto& v : psi.values) out.push_back(mpz_json(v));
  return out;
}

std::size_t epi_number(ManifoldId id, const Z2Char& phi) {
  const auto epis = z2_characters(catalog_entry(id).presentation());
  return static_cast<std::size_t>(std::find(epis.begin(), epis.end(), phi) - epis.begin()) + 1;
}

std::string classical_list(ManifoldId id, const std::vector<Z2Char>& epis) {
  std::vector<int> nums;
  for (const auto& phi : epis) nums.push_back(classical_number(id, phi).value_or(0));
  std::sort(nums.begin(), nums.end());
  std::string out;
  for (int n : nums) out += (out.empty() ? "" : ",") + std::to_string(n);
  return out;
}

std::string emit_table(const std::vector<Edge>& edges) {
  struct Part {
    char label;
    std::vector<ManifoldId> covers;
  };
  using M = ManifoldId;
  const std::vector<Part> parts{{'A', {M::M1}}, {'B', {M::M2}}, {'C', {M::M3}}, {'D', {M::M4}}, {'E', {M::M5, M::M6}},
                                {'F', {M::N1}}, {'G', {M::N2}}, {'H', {M::N3}}, {'I', {M::N4}}};
  std::ostringstream os;
  os << "Free involutions on the flat Seifert manifolds, grouped by the covering manifold.\n"
     << "Epimorphisms are listed in the classical numbering phi_i of the quotient.\n\n";
  for (const auto& part : parts) {
    std::vector<Edge> mine;
    for (const auto& e : edges) {
      if (std::find(part.covers.begin(), part.covers.end(), e.cover) != part.covers.end()) mine.push_back(e);
    }
    std::sort(mine.begin(), mine.end(), [](const Edge& x, const Edge& y) {
      return std::pair(x.base, value(x.index)) < std::pair(y.base, value(y.index));
    });
    os << part.label << ") ";
    if (mine.empty()) {
      for (std::size_t i = 0; i < part.covers.size(); ++i) {
        os << (i ? " and " : "") << to_string(part.covers[i]);
      }
      os << ": no involution.\n\n";
      continue;
    }
    os << to_string(part.covers.front()) << " admits " << mine.size() << " free involution"
       << (mine.size() == 1 ? "" : "s") << ".\n";
    for (std::size_t i = 0; i < mine.size(); ++i) {
      const auto& e = mine[i];
      os << "   tau_" << i + 1 << ": quotient " << to_string(e.base) << ", Z2-index " << value(e.index)
         << "   [phi " << classical_list(e.base, e.epis) << " of " << to_string(e.base) << "]\n";
    }
    os << '\n';
  }
  return os.str();
}

std::string emit_dot(const std::vector<Edge>& edges) {
  std::ostringstream os;
  os << "digraph flat_seifert {\n  rankdir=LR;\n";
  for (auto id : kAllManifolds) {
    os << "  " << to_string(id) << " [label=\"" << to_string(id) << "\"];\n";
  }
  for (const auto& e : edges) {
    os << "  " << to_string(e.cover) << " -> " << to_string(e.base) << " [label=\"" << value(e.index) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_json(const std::vector<Edge>& edges) {
  json covers = json::array();
  for (auto id : kAllManifolds) {
    for (const auto& phi : z2_characters(catalog_entry(id).presentation())) covers.push_back(to_json(double_cover(id, phi)));
  }
  json graph = json::array();
  for (const auto& e : edges) {
    json epis = json::array();
    for (const auto& phi : e.epis) epis.push_back(char_json(phi));
    graph.push_back({{"cover", std::string(to_string(e.cover))},
                     {"base", std::string(to_string(e.base))},
                     {"index", value(e.index)},
                     {"epis", epis}});
  }
  return json{{"covers", covers}, {"edges", graph}}.dump(2) + "\n";
}

}  // namespace

std::vector<Edge> full_classification() {
  std::vector<Edge> out;
  for (auto id : kAllManifolds) {
    for (auto& cls : partition_epimorphisms(id)) out.push_back({cls.cover, id, cls.index, std::move(cls.members)});
  }
  return out;
}

std::array<int, 10> source_degrees(const std::vector<Edge>& edges) {
  std::array<int, 10> out{};
  for (const auto& e : edges) ++out[static_cast<std::size_t>(e.cover)];
  return out;
}

std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "table") return ReportFormat::table;
  if (s == "json") return ReportFormat::json;
  if (s == "dot") return ReportFormat::dot;
  return std::nullopt;
}

std::string emit(ReportFormat format) {
  const auto edges = full_classification();
  switch (format) {
    case ReportFormat::table:
      return emit_table(edges);
    case ReportFormat::json:
      return emit_json(edges);
    case ReportFormat::dot:
      return emit_dot(edges);
  }
  throw std::logic_error("emit: unhandled format");
}

std::string emit(std::string_view format) {
  auto f = parse_report_format(format);
  if (!f) throw std::invalid_argument("unknown format \"" + std::string(format) + "\" (expected table, json or dot)");
  return emit(*f);
}

json to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relators) rels.push_back(to_string(r, p.generators));
  return {{"generators", p.generators}, {"relators", rels}};
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& r : j.at("relators")) p.relators.push_back(parse_word(r.get<std::string>(), p.generators));
  return p;
}

json to_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(mpz_json(t));
  return {{"rank", g.rank}, {"torsion", torsion}, {"text", g.to_string()}};
}

AbelianGroup abelian_group_from_json(const json& j) {
  AbelianGroup g;
  g.rank = j.at("rank").get<std::size_t>();
  for (const auto& t : j.at("torsion")) g.torsion.push_back(mpz_from_json(t));
  return g;
}

json to_json(const CoverReport& r) {
  const auto classical = classical_number(r.base, r.phi);
  return {{"base", std::string(to_string(r.base))},
          {"phi", char_json(r.phi)},
          {"epi", epi_number(r.base, r.phi)},
          {"classical", classical ? json(*classical) : json(nullptr)},
          {"cover", std::string(to_string(r.cover))},
          {"cover_presentation", to_json(r.cover_presentation)},
          {"cover_h1", to_json(r.cover_h1)},
          {"orientable", r.orientable},
          {"index", value(r.index)},
          {"lift", r.lift ? int_char_json(*r.lift) : json(nullptr)}};
}

CoverReport cover_report_from_json(const json& j) {
  auto id = [](const json& v) {
    auto parsed = parse_manifold_id(v.get<std::string>());
    if (!parsed) throw std::invalid_argument("unknown manifold id " + v.dump());
    return *parsed;
  };
  CoverReport r{id(j.at("base")), {}, id(j.at("cover")), presentation_from_json(j.at("cover_presentation")),
                abelian_group_from_json(j.at("cover_h1")), j.at("orientable").get<bool>(), BUIndex::two, std::nullopt};
  for (const auto& v : j.at("phi")) r.phi.values.push_back(static_cast<std::uint8_t>(v.get<int>()));
  auto index = bu_index_from_int(j.at("index").get<int>());
  if (!index) throw std::invalid_argument("index must be 1, 2 or 3");
  r.index = *index;
  if (!j.at("lift").is_null()) {
    IntChar psi;
    for (const auto& v : j.at("lift")) psi.values.push_back(mpz_from_json(v));
    r.lift = std::move(psi);
  }
  return r;
}

json analyze(const SeifertInvariants& si) {
  si.validate();
  const Presentation p = build_presentation(si);
  const auto inv = derived_invariants(si);
  const bool flat = is_flat(si);
  const auto known = find_form(si);

  json epis = json::array();
  const auto chars = z2_characters(p);
  for (std::size_t k = 0; k < chars.size(); ++k) {
    const auto& phi = chars[k];
    const auto decision = bu_index(si, phi);
    const Presentation kernel = kernel_presentation_index2(p, phi);
    const AbelianGroup h1 = abelianization(kernel);
    const bool orientable = cover_orientable(si, phi);
    json cover{{"h1", to_json(h1)}, {"orientable", orientable}, {"id", nullptr}};
    if (flat) {
      try {
        cover["id"] = std::string(to_string(identify(h1, orientable)));
      } catch (const AmbiguousOrUnknown& e) {
        cover["note"] = e.what();
      }
    }
    json entry{{"k", k + 1},
               {"phi", char_json(phi)},
               {"lift", decision.lift ? int_char_json(*decision.lift) : json(nullptr)},
               {"cup_cube",
                {{"case", decision.cube.case_number},
                 {"nonzero", decision.cube.nonzero},
                 {"warnings", decision.cube.warnings}}},
               {"index", value(decision.index)},
               {"cover", cover}};
    if (known) {
      const auto classical = classical_number(*known, phi);
      if (classical && equivalent_symbols(si, catalog_entry(*known).primary())) entry["classical"] = *classical;
    }
    epis.push_back(std::move(entry));
  }

  return {{"symbol", si.to_string()},
          {"input", to_json(si)},
          {"catalog_id", known ? json(std::string(to_string(*known))) : json(nullptr)},
          {"orientable", si.total_orientable()},
          {"derived", {{"a", mpz_json(inv.a)}, {"c", mpz_json(inv.c)}, {"d", inv.d}}},
          {"orbifold_euler_characteristic", base_orbifold_euler_characteristic(si).get_str()},
          {"flat", flat},
          {"presentation", to_json(p)},
          {"h1", to_json(abelianization(p))},
          {"orientation_character", char_json(orientation_character(si))},
          {"epimorphisms", epis}};
}

}  // namespace flatbu
