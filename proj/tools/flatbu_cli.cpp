#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flatbu/acceptance.hpp"
#include "flatbu/borsuk_ulam.hpp"
#include "flatbu/covers.hpp"
#include "flatbu/equivalence.hpp"
#include "flatbu/report.hpp"

using namespace flatbu;

namespace {

ManifoldId require_id(const std::string& s) {
  auto id = parse_manifold_id(s);
  if (!id) throw CLI::ValidationError("id", "unknown manifold \"" + s + "\" (expected M1..M6 or N1..N4)");
  return *id;
}

Z2Char require_epi(ManifoldId id, int k) {
  const auto epis = z2_characters(catalog_entry(id).presentation());
  if (k < 1 || static_cast<std::size_t>(k) > epis.size()) {
    throw CLI::ValidationError("--epi", std::string(to_string(id)) + " has " + std::to_string(epis.size()) +
                                            " epimorphisms; --epi must be in 1.." + std::to_string(epis.size()));
  }
  return epis[static_cast<std::size_t>(k - 1)];
}

std::string describe(ManifoldId id, const Z2Char& phi) {
  const auto names = catalog_entry(id).presentation().generators;
  std::ostringstream os;
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? " " : "") << names[i] << '=' << int(phi.values[i]);
  if (auto c = classical_number(id, phi)) os << "   (classical phi_" << *c << ")";
  return os.str();
}

void print_catalog(bool json) {
  if (json) {
    std::cout << catalog_json().dump(2) << '\n';
    return;
  }
  for (const auto& e : catalog()) {
    std::cout << to_string(e.id) << "  " << (e.orientable ? "orientable    " : "non-orientable") << "  H1 = "
              << e.h1.to_string() << '\n';
    for (const auto& f : e.forms) std::cout << "      " << f.to_string() << '\n';
  }
}

void print_epis(ManifoldId id) {
  const auto epis = z2_characters(catalog_entry(id).presentation());
  std::cout << to_string(id) << ": " << epis.size() << " epimorphisms onto Z/2\n";
  for (std::size_t k = 0; k < epis.size(); ++k) std::cout << "  " << k + 1 << ": " << describe(id, epis[k]) << '\n';
}

void print_cover(ManifoldId id, int k, bool json) {
  const auto r = double_cover(id, require_epi(id, k));
  if (json) {
    std::cout << to_json(r).dump(2) << '\n';
    return;
  }
  std::cout << "base         " << to_string(id) << ", epimorphism " << k << ": " << describe(id, r.phi) << '\n'
            << "kernel       " << r.cover_presentation.to_string() << '\n'
            << "H1           " << r.cover_h1.to_string() << '\n'
            << "orientable   " << (r.orientable ? "yes" : "no") << '\n'
            << "cover        " << to_string(r.cover) << '\n';
}

void print_index(ManifoldId id, int k) {
  const Z2Char phi = require_epi(id, k);
  const auto d = bu_index(id, phi);
  std::cout << to_string(id) << ", epimorphism " << k << ": " << describe(id, phi) << '\n';
  if (d.lift) {
    std::cout << "integral lift " << d.lift->to_string() << '\n';
  } else {
    std::cout << "no integral lift\n";
  }
  std::cout << "cup-cube      " << (d.cube.nonzero ? "nonzero" : "zero") << " (case " << d.cube.case_number << ")\n";
  for (const auto& w : d.cube.warnings) std::cout << "warning: " << w << '\n';
  std::cout << "Z2-index      " << value(d.index) << '\n';
}

void print_classes(ManifoldId id) {
  const auto classes = partition_epimorphisms(id);
  const auto epis = z2_characters(catalog_entry(id).presentation());
  std::cout << to_string(id) << ": " << classes.size() << " classes of epimorphisms\n";
  for (const auto& c : classes) {
    std::cout << "  {";
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      const auto k = std::find(epis.begin(), epis.end(), c.members[i]) - epis.begin() + 1;
      std::cout << (i ? ", " : "") << k;
      if (auto n = classical_number(id, c.members[i])) std::cout << "=phi_" << *n;
    }
    std::cout << "}  cover " << to_string(c.cover) << ", Z2-index " << value(c.index) << '\n';
  }
}

void print_result(const CriterionResult& r) {
  std::cout << (r.passed ? "PASS" : "FAIL") << "  ";
  if (r.number > 0) {
    std::cout << "criterion " << r.number << ": ";
  } else {
    std::cout << "supplementary: ";
  }
  std::cout << r.title << '\n';
  for (const auto& d : r.details) std::cout << "        " << d << '\n';
}

int run_check() {
  bool ok = true;
  for (const auto& r : run_acceptance()) {
    print_result(r);
    ok = ok && r.passed;
  }
  for (const auto& r : run_supplementary_checks()) {
    print_result(r);
    ok = ok && r.passed;
  }
  std::cout << (ok ? "all checks passed" : "some checks failed") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borsuk-Ulam indices of free involutions on the flat Seifert 3-manifolds"};
  app.require_subcommand(1);

  bool json = false;
  std::string id_text, format = "table", input;
  int epi = 0;

  auto* cat = app.add_subcommand("catalog", "list the ten flat manifolds with their Seifert forms and H1");
  cat->add_flag("--json", json, "emit JSON");

  auto* epis = app.add_subcommand("epis", "list the epimorphisms onto Z/2 in lexicographic order");
  epis->add_option("id", id_text, "manifold id, M1..M6 or N1..N4")->required();

  auto* cover = app.add_subcommand("cover", "double cover along the k-th epimorphism");
  cover->add_option("id", id_text, "manifold id")->required();
  cover->add_option("--epi", epi, "1-based epimorphism number")->required();
  cover->add_flag("--json", json, "emit the cover report as JSON");

  auto* index = app.add_subcommand("index", "Z2-index of the involution given by the k-th epimorphism");
  index->add_option("id", id_text, "manifold id")->required();
  index->add_option("--epi", epi, "1-based epimorphism number")->required();

  auto* classes = app.add_subcommand("classes", "equivalence classes of epimorphisms");
  classes->add_option("id", id_text, "manifold id")->required();

  auto* graph = app.add_subcommand("graph", "the full classification graph");
  graph->add_option("--format", format, "table, json or dot")
      ->check(CLI::IsMember({"table", "json", "dot"}))
      ->capture_default_str();

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a Seifert symbol given as JSON");
  analyze_cmd->add_option("--input", input, "file with {\"b\", \"type\", \"g\", \"pairs\"}")
      ->required()
      ->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "run the acceptance corpus; nonzero exit on any mismatch");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cat->parsed()) print_catalog(json);
    if (epis->parsed()) print_epis(require_id(id_text));
    if (cover->parsed()) print_cover(require_id(id_text), epi, json);
    if (index->parsed()) print_index(require_id(id_text), epi);
    if (classes->parsed()) print_classes(require_id(id_text));
    if (graph->parsed()) std::cout << emit(format);
    if (analyze_cmd->parsed()) {
      std::ifstream in(input);
      const auto j = nlohmann::json::parse(in);
      std::cout << analyze(seifert_from_json(j)).dump(2) << '\n';
    }
    if (check->parsed()) return run_check();
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
