#include <doctest.h>

#include "flatbu/covers.hpp"

using namespace flatbu;

TEST_SUITE("covers") {
  TEST_CASE("raw Schreier bookkeeping") {
    const auto p = catalog_entry(ManifoldId::M2).presentation();
    for (const auto& phi : z2_characters(p)) {
      auto raw = schreier_presentation(p, phi);
      CHECK(raw.num_generators() == 2 * p.num_generators() - 1);
      CHECK(raw.relators.size() == 2 * p.relators.size());
      CHECK(raw.deficiency() == 2 * p.deficiency() - 1);
    }
  }

  TEST_CASE("index two: the kernel of Z -> Z/2 is 2Z") {
    Presentation p{{"a"}, {}};
    auto k = kernel_presentation_index2(p, Z2Char{{1}});
    CHECK(abelianization(k) == AbelianGroup{1, {}});
    // Z/4 has the index-two subgroup Z/2.
    Presentation q{{"a"}, {Word::generator(0, 4)}};
    CHECK(abelianization(kernel_presentation_index2(q, Z2Char{{1}})) == AbelianGroup{0, {2}});
  }

  TEST_CASE("free group of rank two: the kernel is free of rank three") {
    Presentation p{{"a", "b"}, {}};
    auto k = kernel_presentation_index2(p, Z2Char{{1, 0}});
    CHECK(abelianization(k) == AbelianGroup{3, {}});
  }

  TEST_CASE("rejects trivial and invalid characters") {
    const auto p = catalog_entry(ManifoldId::M1).presentation();
    CHECK_THROWS(kernel_presentation_index2(p, Z2Char{{0, 0, 0}}));
    const auto q = catalog_entry(ManifoldId::M6).presentation();
    CHECK_THROWS(kernel_presentation_index2(q, Z2Char{{1, 0, 0, 0}}));
    CHECK_THROWS(schreier_presentation(p, Z2Char{{1, 0, 0}}, 1));
  }

  TEST_CASE("torus covers are tori") {
    const auto p = catalog_entry(ManifoldId::M1).presentation();
    for (const auto& phi : z2_characters(p)) {
      CHECK(abelianization(kernel_presentation_index2(p, phi)) == AbelianGroup{3, {}});
    }
  }

  TEST_CASE("named cover identifications") {
    CHECK(double_cover(ManifoldId::M2, Z2Char{{1, 1, 1, 1, 0}}).cover == ManifoldId::M1);
    CHECK(double_cover(ManifoldId::M5, Z2Char{{1, 0, 1, 0}}).cover == ManifoldId::M3);
    CHECK(double_cover(ManifoldId::N4, Z2Char{{1, 0, 0}}).cover == ManifoldId::M2);
    CHECK(double_cover(ManifoldId::N3, Z2Char{{0, 1, 1}}).cover == ManifoldId::N3);
    auto r = double_cover(ManifoldId::N1, Z2Char{{1, 0, 1}});
    CHECK(r.cover_h1 == AbelianGroup{2, {}});
    CHECK(r.cover == ManifoldId::N2);
  }

  TEST_CASE("orientability of the cover") {
    const auto n3 = catalog_entry(ManifoldId::N3).primary();
    CHECK(cover_orientable(n3, Z2Char{{1, 0, 0}}));
    CHECK_FALSE(cover_orientable(n3, Z2Char{{0, 1, 0}}));
    const auto m4 = catalog_entry(ManifoldId::M4).primary();
    for (const auto& phi : z2_characters(build_presentation(m4))) CHECK(cover_orientable(m4, phi));
  }

  TEST_CASE("the kernel's image in H1 of the base has index two") {
    // Rows: the base relations, then the abelianized Schreier generators
    // r_c x r_{c+phi(x)}^-1. The quotient of Z^n by all of them is Z/2.
    for (auto id : kAllManifolds) {
      const auto p = catalog_entry(id).presentation();
      const std::size_t n = p.num_generators();
      for (const auto& phi : z2_characters(p)) {
        std::size_t t = 0;
        while (!phi.values[t]) ++t;
        IntMatrix rel = relation_matrix(p);
        IntMatrix m(rel.rows() + 2 * n, n);
        for (std::size_t i = 0; i < rel.rows(); ++i) {
          for (std::size_t j = 0; j < n; ++j) m(i, j) = rel(i, j);
        }
        for (std::size_t x = 0; x < n; ++x) {
          for (int c = 0; c < 2; ++c) {
            const std::size_t row = rel.rows() + 2 * x + static_cast<std::size_t>(c);
            m(row, x) += 1;
            if (c) m(row, t) += 1;
            if ((c + phi.values[x]) % 2) m(row, t) -= 1;
          }
        }
        CHECK(abelian_group_of(m) == AbelianGroup{0, {2}});
      }
    }
  }

  TEST_CASE("transversal choice does not change H1") {
    for (auto id : kAllManifolds) {
      const auto p = catalog_entry(id).presentation();
      for (const auto& phi : z2_characters(p)) {
        const auto h1 = abelianization(schreier_presentation(p, phi));
        for (std::size_t t = 0; t < p.num_generators(); ++t) {
          if (phi.values[t]) CHECK(abelianization(schreier_presentation(p, phi, t)) == h1);
        }
      }
    }
  }

  TEST_CASE("flatness test") {
    for (const auto& e : catalog()) {
      for (const auto& f : e.forms) CHECK(is_flat(f));
    }
    CHECK_FALSE(is_flat({0, SeifertType::o1, 2, {}}));
    CHECK_FALSE(is_flat({1, SeifertType::o1, 1, {}}));  // nilgeometry
    CHECK_FALSE(is_flat({-1, SeifertType::o1, 0, {{2, 1}, {3, 1}, {5, 1}}}));
  }
}
