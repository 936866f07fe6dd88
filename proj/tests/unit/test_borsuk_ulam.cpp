#include <doctest.h>

#include "flatbu/borsuk_ulam.hpp"
#include "flatbu/covers.hpp"

using namespace flatbu;

TEST_SUITE("borsuk_ulam") {
  TEST_CASE("cup-cube in the three cases") {
    const auto m4 = catalog_entry(ManifoldId::M4).primary();
    auto c = cup_cube(m4, Z2Char{{1, 1, 0, 0}});
    CHECK(c.case_number == 3);
    CHECK(c.nonzero);

    const auto m2 = catalog_entry(ManifoldId::M2).primary();
    c = cup_cube(m2, Z2Char{{1, 1, 0, 0, 0}});
    CHECK(c.case_number == 3);
    CHECK_FALSE(c.nonzero);

    const auto n1 = catalog_entry(ManifoldId::N1).primary();
    c = cup_cube(n1, Z2Char{{1, 0, 1}});
    CHECK(c.case_number == 1);
    CHECK(c.nonzero);
    CHECK_FALSE(cup_cube(n1, Z2Char{{1, 0, 0}}).nonzero);

    const auto n3 = catalog_entry(ManifoldId::N3).primary();
    CHECK(cup_cube(n3, Z2Char{{0, 1, 1}}).nonzero);

    const auto n2 = catalog_entry(ManifoldId::N2).primary();  // c = 1
    c = cup_cube(n2, Z2Char{{1, 0, 0}});
    CHECK(c.case_number == 2);
    CHECK_FALSE(c.nonzero);
  }

  TEST_CASE("cup-cube formulas by type in case one") {
    // phi(h) = 1 and c = 0 isolate the type-dependent term.
    CHECK_FALSE(cup_cube({0, SeifertType::o1, 1, {}}, Z2Char{{0, 0, 1}}).nonzero);
    CHECK(cup_cube({2, SeifertType::o1, 1, {}}, Z2Char{{0, 0, 1}}).nonzero);  // c/2 = 1
    CHECK(cup_cube({0, SeifertType::n2, 1, {}}, Z2Char{{0, 1}}).nonzero);     // g = 1
    CHECK_FALSE(cup_cube({0, SeifertType::n2, 2, {}}, Z2Char{{0, 0, 1}}).nonzero);
    CHECK_FALSE(cup_cube({0, SeifertType::n4, 3, {}}, Z2Char{{1, 0, 0, 1}}).nonzero);  // 1 + 0 + 3 - 2
    CHECK(cup_cube({0, SeifertType::n4, 3, {}}, Z2Char{{1, 1, 0, 1}}).nonzero);        // 1 + 1 + 3 - 2
    CHECK(cup_cube({0, SeifertType::n3, 2, {}}, Z2Char{{0, 0, 1}}).nonzero);           // 0 + 2 - 1
  }

  TEST_CASE("odd-order fibers never carry phi(s) = 1 once some order is even") {
    // An even a_j has odd b_j, so phi(h) = 0, and then a_k phi(s_k) = 0 forces
    // phi(s_k) = 0 for odd a_k. The warning can only come from an assignment
    // that is not a homomorphism.
    SeifertInvariants si{0, SeifertType::o1, 0, {{2, 1}, {3, 1}, {6, -1}}};
    const auto p = build_presentation(si);
    for (const auto& phi : z2_characters(p)) CHECK(cup_cube(si, phi).warnings.empty());
    SeifertInvariants big{1, SeifertType::o1, 2, {{2, 1}, {3, 1}, {5, 2}, {4, 3}}};
    for (const auto& phi : z2_characters(build_presentation(big))) CHECK(cup_cube(big, phi).warnings.empty());

    Z2Char raw{{0, 1, 0, 0}};
    CHECK_FALSE(is_homomorphism(p, raw));
    CHECK(cup_cube(si, raw).warnings.size() == 1);
    CHECK_THROWS(cup_cube(si, Z2Char{{1, 0}}));
  }

  TEST_CASE("index decisions") {
    CHECK(bu_index(ManifoldId::M4, Z2Char{{1, 1, 0, 0}}).index == BUIndex::three);
    CHECK(bu_index(ManifoldId::M2, Z2Char{{1, 1, 0, 0, 0}}).index == BUIndex::two);
    CHECK(bu_index(ManifoldId::M3, Z2Char{{1, 1, 1, 1}}).index == BUIndex::one);
    auto d = bu_index(ManifoldId::N2, Z2Char{{1, 0, 0}});
    CHECK(d.index == BUIndex::one);
    REQUIRE(d.lift);
    CHECK(is_lift_of(catalog_entry(ManifoldId::N2).presentation(), *d.lift, Z2Char{{1, 0, 0}}));
    CHECK_THROWS(bu_index(ManifoldId::M1, Z2Char{{0, 0, 0}}));
  }

  TEST_CASE("every decision is exclusive and witnessed") {
    for (const auto& e : catalog()) {
      for (const auto& f : e.forms) {
        const auto p = build_presentation(f);
        for (const auto& phi : z2_characters(p)) {
          auto d = bu_index(f, phi);
          CHECK(value(d.index) >= 1);
          CHECK(value(d.index) <= 3);
          CHECK((d.index == BUIndex::one) == d.lift.has_value());
          if (d.lift) CHECK(is_lift_of(p, *d.lift, phi));
          if (d.index == BUIndex::three) CHECK(d.cube.nonzero);
          if (d.index == BUIndex::two) CHECK_FALSE(d.cube.nonzero);
          CHECK(d.cube.warnings.empty());
        }
      }
    }
  }

  TEST_CASE("index conversions") {
    CHECK(bu_index_from_int(3) == BUIndex::three);
    CHECK_FALSE(bu_index_from_int(0));
    CHECK_FALSE(bu_index_from_int(4));
  }
}
