#include <doctest.h>

#include "flatbu/seifert.hpp"

using namespace flatbu;

namespace {

std::vector<std::string> relator_strings(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relators) out.push_back(to_string(r, p.generators));
  return out;
}

}  // namespace

TEST_SUITE("seifert") {
  TEST_CASE("3-torus presentation") {
    auto p = build_presentation({0, SeifertType::o1, 1, {}});
    CHECK(p.generators == std::vector<std::string>{"v1", "v2", "h"});
    CHECK(relator_strings(p) == std::vector<std::string>{"v1 h v1^-1 h^-1", "v2 h v2^-1 h^-1", "v1 v2 v1^-1 v2^-1"});
  }

  TEST_CASE("n3 presentation has one flipped fiber sign") {
    auto p = build_presentation({0, SeifertType::n3, 2, {}});
    CHECK(relator_strings(p) == std::vector<std::string>{"v1 h v1^-1 h^-1", "v2 h v2^-1 h", "v1^2 v2^2"});
  }

  TEST_CASE("four fibers of order two") {
    auto p = build_presentation({-2, SeifertType::o1, 0, {{2, 1}, {2, 1}, {2, 1}, {2, 1}}});
    auto rels = relator_strings(p);
    CHECK(rels[1] == "s1^2 h");
    CHECK(rels.back() == "s1 s2 s3 s4 h^2");
  }

  TEST_CASE("generator and relator counts") {
    for (const auto& si : {SeifertInvariants{0, SeifertType::o1, 2, {{3, 1}}}, SeifertInvariants{1, SeifertType::n1, 3, {}},
                           SeifertInvariants{0, SeifertType::n4, 4, {{2, 1}, {5, 2}}}}) {
      auto p = build_presentation(si);
      const auto n = si.fibers.size(), g = si.num_surface_generators();
      CHECK(p.num_generators() == n + g + 1);
      CHECK(p.relators.size() == 2 * n + g + 1);
      CHECK(is_homomorphism(p, orientation_character(si)));
    }
  }

  TEST_CASE("derived invariants") {
    auto m2 = derived_invariants({-2, SeifertType::o1, 0, {{2, 1}, {2, 1}, {2, 1}, {2, 1}}});
    CHECK(m2.a == 2);
    CHECK(m2.c == 0);
    CHECK(m2.d == 4);
    auto m4 = derived_invariants({-1, SeifertType::o1, 0, {{2, 1}, {4, 1}, {4, 1}}});
    CHECK(m4.a == 4);
    CHECK(m4.c == 0);
    CHECK(m4.d == 3);
    auto m1 = derived_invariants({0, SeifertType::o1, 1, {}});
    CHECK(m1.a == 1);
    CHECK(m1.c == 0);
    CHECK(m1.d == 0);
  }

  TEST_CASE("orientation character by type") {
    CHECK(orientation_character({0, SeifertType::n1, 2, {}}).values == std::vector<std::uint8_t>{1, 1, 0});
    CHECK(orientation_character({0, SeifertType::n3, 2, {}}).values == std::vector<std::uint8_t>{1, 0, 0});
    CHECK(orientation_character({0, SeifertType::n4, 3, {}}).values == std::vector<std::uint8_t>{1, 1, 0, 0});
    CHECK(orientation_character({0, SeifertType::o2, 1, {}}).values == std::vector<std::uint8_t>{1, 1, 0});
    CHECK(orientation_character({-1, SeifertType::n2, 1, {{2, 1}, {2, 1}}}).is_zero());
    CHECK(orientation_character({0, SeifertType::o1, 1, {}}).is_zero());
  }

  TEST_CASE("orientation reversal") {
    SeifertInvariants x{-2, SeifertType::o1, 0, {{3, 2}, {3, 2}, {3, 2}}};
    auto y = reverse_orientation(x);
    CHECK(equivalent_symbols(y, SeifertInvariants{-1, SeifertType::o1, 0, {{3, 1}, {3, 1}, {3, 1}}}));
    CHECK(equivalent_symbols(reverse_orientation(y), x));
    SeifertInvariants t{0, SeifertType::o1, 1, {}};
    CHECK(equivalent_symbols(reverse_orientation(t), t));
    CHECK_THROWS(reverse_orientation({0, SeifertType::n1, 2, {}}));

    // c changes sign, so its parity and a, d are kept.
    SeifertInvariants z{1, SeifertType::o1, 0, {{2, 1}, {4, 3}, {5, 2}}};
    auto dz = derived_invariants(z), dr = derived_invariants(reverse_orientation(z));
    CHECK(dr.a == dz.a);
    CHECK(dr.c == -dz.c);
    CHECK(dr.d == dz.d);
  }

  TEST_CASE("validation") {
    CHECK_THROWS(SeifertInvariants{0, SeifertType::o1, 0, {{4, 2}}}.validate());
    CHECK_THROWS(SeifertInvariants{0, SeifertType::o1, 0, {{1, 1}}}.validate());
    CHECK_THROWS(SeifertInvariants{0, SeifertType::n1, 0, {}}.validate());
    CHECK_THROWS(SeifertInvariants{0, SeifertType::n3, 1, {}}.validate());
    CHECK_THROWS(SeifertInvariants{2, SeifertType::n1, 2, {}}.validate());
    CHECK_NOTHROW(SeifertInvariants{-7, SeifertType::o1, 0, {{2, 1}}}.validate());
  }

  TEST_CASE("orbifold Euler characteristic") {
    CHECK(base_orbifold_euler_characteristic({0, SeifertType::o1, 1, {}}) == 0);
    CHECK(base_orbifold_euler_characteristic({-1, SeifertType::o1, 0, {{2, 1}, {3, 1}, {6, 1}}}) == 0);
    CHECK(base_orbifold_euler_characteristic({0, SeifertType::n1, 1, {{2, 1}, {2, 1}}}) == 0);
    CHECK(base_orbifold_euler_characteristic({0, SeifertType::o1, 0, {{2, 1}, {3, 1}, {5, 1}}}) == mpq_class(1, 30));
  }

  TEST_CASE("JSON round trip and schema errors") {
    SeifertInvariants si{-1, SeifertType::n2, 1, {{2, 1}, {2, 1}}};
    auto j = to_json(si);
    CHECK(j["type"] == "n2");
    CHECK(equivalent_symbols(seifert_from_json(j), si));
    CHECK_THROWS(seifert_from_json(nlohmann::json{{"b", 0}, {"type", "q7"}, {"g", 1}, {"pairs", nlohmann::json::array()}}));
    CHECK_THROWS(seifert_from_json(nlohmann::json{{"b", 0}, {"type", "o1"}}));
  }

  TEST_CASE("symbol equality ignores fiber order only") {
    SeifertInvariants x{-1, SeifertType::o1, 0, {{2, 1}, {4, 1}, {4, 1}}};
    SeifertInvariants y{-1, SeifertType::o1, 0, {{4, 1}, {2, 1}, {4, 1}}};
    CHECK(equivalent_symbols(x, y));
    y.b = 0;
    CHECK_FALSE(equivalent_symbols(x, y));
  }
}
