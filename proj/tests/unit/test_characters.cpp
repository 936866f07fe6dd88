#include <doctest.h>

#include "flatbu/characters.hpp"
#include "flatbu/seifert.hpp"

using namespace flatbu;

namespace {

std::vector<Z2Char> brute_force(const Presentation& p) {
  std::vector<Z2Char> out;
  const std::size_t n = p.num_generators();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Z2Char phi;
    for (std::size_t i = 0; i < n; ++i) phi.values.push_back((mask >> i) & 1u);
    if (is_homomorphism(p, phi)) out.push_back(phi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("GF(2) nullspace and solve") {
    using gf2::Row;
    auto basis = gf2::nullspace({Row{1, 1, 0}, Row{0, 1, 1}}, 3);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Row{1, 1, 1});
    CHECK(gf2::nullspace({}, 2).size() == 2);
    auto x = gf2::solve({Row{1, 1}, Row{0, 1}}, Row{1, 1}, 2);
    REQUIRE(x);
    CHECK(*x == Row{0, 1});
    CHECK_FALSE(gf2::solve({Row{1, 1}, Row{1, 1}}, Row{0, 1}, 2));
  }

  TEST_CASE("epimorphisms of Seifert groups match brute force") {
    for (const auto& si : {SeifertInvariants{0, SeifertType::o1, 1, {}},
                           SeifertInvariants{-2, SeifertType::o1, 0, {{2, 1}, {2, 1}, {2, 1}, {2, 1}}},
                           SeifertInvariants{0, SeifertType::n3, 2, {}},
                           SeifertInvariants{1, SeifertType::o1, 1, {{3, 1}, {5, 2}}},
                           SeifertInvariants{0, SeifertType::n4, 3, {{2, 1}}}}) {
      const auto p = build_presentation(si);
      CHECK(z2_characters(p) == brute_force(p));
    }
  }

  TEST_CASE("integral lifts on the 3-torus") {
    const auto p = build_presentation({0, SeifertType::o1, 1, {}});
    for (const auto& phi : z2_characters(p)) {
      auto psi = integral_lift(p, phi);
      REQUIRE(psi);
      CHECK(is_lift_of(p, *psi, phi));
    }
  }

  TEST_CASE("no lift through a finite abelianization") {
    // <a | a^4>: the character a -> 1 does not come from Z.
    Presentation p{{"a"}, {Word::generator(0, 4)}};
    Z2Char phi{{1}};
    CHECK(is_homomorphism(p, phi));
    CHECK_FALSE(integral_lift(p, phi));
  }

  TEST_CASE("lifts need the right parity, not only a homomorphism") {
    // Klein bottle <a, b | a^2 b^2>: psi = (1, -1) lifts (1, 1), psi = (0, 0) does not.
    Presentation p{{"a", "b"}, {parse_word("a^2 b^2", std::vector<std::string>{"a", "b"})}};
    CHECK(is_lift_of(p, make_int_char({1, -1}), Z2Char{{1, 1}}));
    CHECK_FALSE(is_lift_of(p, make_int_char({0, 0}), Z2Char{{1, 1}}));
    CHECK_FALSE(is_lift_of(p, make_int_char({1, 1}), Z2Char{{1, 1}}));
    CHECK_FALSE(integral_lift(p, Z2Char{{1, 0}}));
    CHECK(integral_lift(p, Z2Char{{1, 1}}));
  }

  TEST_CASE("evaluation on words uses exponent sums mod 2") {
    Z2Char phi{{1, 0}};
    auto names = std::vector<std::string>{"a", "b"};
    CHECK(phi(parse_word("a b a", names)) == 0);
    CHECK(phi(parse_word("a^-3 b", names)) == 1);
  }
}
