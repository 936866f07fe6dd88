#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flatbu/acceptance.hpp"
#include "flatbu/covers.hpp"
#include "flatbu/equivalence.hpp"
#include "flatbu/errors.hpp"
#include "flatbu/report.hpp"

namespace py = pybind11;
using namespace flatbu;

// Structured results cross the boundary as JSON text; the Python package
// decodes them. Big integers are passed as decimal strings.
namespace {

ManifoldId id_of(const std::string& s) {
  auto id = parse_manifold_id(s);
  if (!id) throw py::value_error("unknown manifold \"" + s + "\"");
  return *id;
}

Z2Char epi_of(ManifoldId id, int k) {
  const auto epis = z2_characters(catalog_entry(id).presentation());
  if (k < 1 || static_cast<std::size_t>(k) > epis.size()) {
    throw py::index_error("epimorphism number must be in 1.." + std::to_string(epis.size()));
  }
  return epis[static_cast<std::size_t>(k - 1)];
}

std::vector<std::vector<int>> to_lists(const std::vector<Z2Char>& chars) {
  std::vector<std::vector<int>> out;
  for (const auto& c : chars) out.emplace_back(c.values.begin(), c.values.end());
  return out;
}

std::vector<std::vector<std::string>> matrix_strings(const IntMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).get_str());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_flatbu, m) {
  m.doc() = "Borsuk-Ulam indices of free involutions on flat Seifert 3-manifolds";

  py::register_exception<AmbiguousOrUnknown>(m, "AmbiguousOrUnknown", PyExc_LookupError);
  py::register_exception<IncompleteSeparation>(m, "IncompleteSeparation", PyExc_RuntimeError);

  m.def("catalog_json", [] { return catalog_json().dump(); });

  m.def("epimorphisms", [](const std::string& id) { return to_lists(z2_characters(catalog_entry(id_of(id)).presentation())); },
        py::arg("id"), "Epimorphisms onto Z/2 in lexicographic order.");

  m.def("classical_number", [](const std::string& id, const std::vector<int>& phi) {
        Z2Char c;
        for (int v : phi) c.values.push_back(static_cast<std::uint8_t>(v & 1));
        return classical_number(id_of(id), c);
      }, py::arg("id"), py::arg("phi"));

  m.def("cover_json", [](const std::string& id, int k) {
        const auto base = id_of(id);
        return to_json(double_cover(base, epi_of(base, k))).dump();
      }, py::arg("id"), py::arg("epi"));

  m.def("index", [](const std::string& id, int k) {
        const auto base = id_of(id);
        return value(bu_index(base, epi_of(base, k)).index);
      }, py::arg("id"), py::arg("epi"));

  m.def("classes", [](const std::string& id) {
        std::vector<py::dict> out;
        for (const auto& c : partition_epimorphisms(id_of(id))) {
          py::dict d;
          d["members"] = to_lists(c.members);
          d["cover"] = std::string(to_string(c.cover));
          d["index"] = value(c.index);
          out.push_back(d);
        }
        return out;
      }, py::arg("id"));

  m.def("graph", [](const std::string& format) { return emit(std::string_view(format)); }, py::arg("format") = "table");

  m.def("analyze_json", [](const std::string& symbol_json) {
        return analyze(seifert_from_json(nlohmann::json::parse(symbol_json))).dump();
      }, py::arg("symbol_json"));

  m.def("smith_normal_form", [](const std::vector<std::vector<std::string>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows[0].size();
        IntMatrix a(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i].size() != cols) throw py::value_error("ragged matrix");
          for (std::size_t j = 0; j < cols; ++j) a(i, j) = mpz_class(rows[i][j]);
        }
        const auto f = smith_normal_form(a);
        return py::make_tuple(matrix_strings(f.U), matrix_strings(f.D), matrix_strings(f.V), f.rank);
      }, py::arg("rows"), "Returns (U, D, V, rank) with U A V = D; entries as decimal strings.");

  m.def("abelianization", [](const std::vector<std::string>& generators, const std::vector<std::string>& relators) {
        Presentation p{generators, {}};
        for (const auto& r : relators) p.relators.push_back(parse_word(r, p.generators));
        const auto g = abelianization(p);
        std::vector<std::string> torsion;
        for (const auto& t : g.torsion) torsion.push_back(t.get_str());
        return py::make_tuple(g.rank, torsion);
      }, py::arg("generators"), py::arg("relators"));

  m.def("run_acceptance", [] {
        std::vector<py::dict> out;
        for (const auto& r : run_acceptance()) {
          py::dict d;
          d["number"] = r.number;
          d["title"] = r.title;
          d["passed"] = r.passed;
          d["details"] = r.details;
          out.push_back(d);
        }
        return out;
      });
}
