#include <doctest.h>

#include "flatbu/catalog.hpp"
#include "flatbu/errors.hpp"

using namespace flatbu;

TEST_SUITE("catalog") {
  TEST_CASE("ten entries with the stated forms") {
    CHECK(catalog().size() == 10);
    CHECK(equivalent_symbols(catalog_entry(ManifoldId::M6).primary(),
                             SeifertInvariants{-1, SeifertType::n2, 1, {{2, 1}, {2, 1}}}));
    const auto& n4 = catalog_entry(ManifoldId::N4);
    REQUIRE(n4.forms.size() == 2);
    CHECK(equivalent_symbols(n4.forms[1], SeifertInvariants{0, SeifertType::n1, 1, {{2, 1}, {2, 1}}}));
    int orientable = 0;
    for (const auto& e : catalog()) orientable += e.orientable;
    CHECK(orientable == 6);
  }

  TEST_CASE("stored H1 agrees with the Smith form of every form") {
    for (const auto& e : catalog()) {
      CAPTURE(to_string(e.id));
      for (const auto& f : e.forms) {
        CHECK(abelianization(build_presentation(f)) == e.h1);
        CHECK(f.total_orientable() == e.orientable);
      }
    }
  }

  TEST_CASE("(H1, orientability) signatures are pairwise distinct") {
    for (const auto& x : catalog()) {
      for (const auto& y : catalog()) {
        if (x.id != y.id) CHECK_FALSE((x.h1 == y.h1 && x.orientable == y.orientable));
      }
    }
  }

  TEST_CASE("identify") {
    CHECK(identify(AbelianGroup{3, {}}, true) == ManifoldId::M1);
    CHECK(identify(AbelianGroup{1, {2, 2}}, true) == ManifoldId::M2);
    CHECK(identify(AbelianGroup{1, {2, 2}}, false) == ManifoldId::N3);
    CHECK_THROWS_AS(identify(AbelianGroup{5, {}}, true), AmbiguousOrUnknown);
    CHECK_THROWS_AS(identify(AbelianGroup{3, {}}, false), AmbiguousOrUnknown);
  }

  TEST_CASE("affine representations satisfy the relators") {
    for (const auto& e : catalog()) {
      CAPTURE(to_string(e.id));
      const auto p = e.presentation();
      REQUIRE(e.rep.size() == p.num_generators());
      for (const auto& r : p.relators) CHECK(is_trivial(e.id, r));
      CHECK(translation_rank(e.id) == 3);
    }
  }

  TEST_CASE("linear parts have finite order and signs match w1") {
    for (const auto& e : catalog()) {
      const auto w1 = orientation_character(e.primary());
      for (std::size_t g = 0; g < e.rep.size(); ++g) {
        AffineIsometry linear_only(
            {e.rep[g].linear(0, 0), e.rep[g].linear(0, 1), e.rep[g].linear(0, 2), e.rep[g].linear(1, 0),
             e.rep[g].linear(1, 1), e.rep[g].linear(1, 2), e.rep[g].linear(2, 0), e.rep[g].linear(2, 1),
             e.rep[g].linear(2, 2)},
            {0, 0, 0});
        bool finite = false;
        for (int k = 1; k <= 6 && !finite; ++k) finite = linear_only.pow(k).is_identity();
        CHECK(finite);
        CHECK((e.rep[g].determinant() < 0) == static_cast<bool>(w1.values[g]));
      }
    }
  }

  TEST_CASE("word problem examples") {
    const std::vector<std::string> names{"v1", "v2", "h"};
    CHECK_FALSE(is_trivial(ManifoldId::M1, parse_word("h", names)));
    CHECK(is_trivial(ManifoldId::M1, parse_word("v1 v2 v1^-1 v2^-1", names)));
    CHECK_FALSE(is_trivial(ManifoldId::N1, parse_word("v1 v2 v1^-1 v2^-1", names)));
    CHECK(is_trivial(ManifoldId::N1, parse_word("v1^2 v2^2", names)));
  }

  TEST_CASE("ids, classical numbering and lookup by form") {
    CHECK(parse_manifold_id("n3") == ManifoldId::N3);
    CHECK_FALSE(parse_manifold_id("M7"));
    CHECK_FALSE(parse_manifold_id("M"));
    CHECK(classical_number(ManifoldId::M2, Z2Char{{1, 1, 1, 1, 0}}) == 7);
    CHECK_FALSE(classical_number(ManifoldId::M2, Z2Char{{1, 0, 0, 0, 0}}));
    CHECK(find_form({0, SeifertType::n2, 2, {}}) == ManifoldId::M2);
    CHECK(find_form({-1, SeifertType::o1, 0, {{6, 1}, {2, 1}, {3, 1}}}) == ManifoldId::M5);
    CHECK_FALSE(find_form({0, SeifertType::o1, 2, {}}));
  }

  TEST_CASE("catalog JSON") {
    auto j = catalog_json();
    REQUIRE(j.size() == 10);
    CHECK(j[1]["id"] == "M2");
    CHECK(j[1]["forms"].size() == 2);
    CHECK(j[5]["h1"]["text"] == "Z/4 + Z/4");
  }
}
