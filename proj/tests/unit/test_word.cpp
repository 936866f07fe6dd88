#include <doctest.h>

#include "flatbu/word.hpp"

using namespace flatbu;

TEST_SUITE("word") {
  const std::vector<std::string> names{"a", "b", "h"};

  TEST_CASE("products reduce freely") {
    Word a = Word::generator(0), b = Word::generator(1);
    CHECK((a * a.inverse()).empty());
    CHECK((a * b * b.inverse() * a).letters() == std::vector<Letter>{{0, 2}});
    CHECK(power(a * b, 3).length() == 6);
    CHECK(power(a, -4) == Word::generator(0, -4));
  }

  TEST_CASE("letters with exponent zero are rejected") { CHECK_THROWS(Word({{0, 0}})); }

  TEST_CASE("cyclic reduction conjugates away the ends") {
    Word w = parse_word("b a h a^-1 b^-1", names);
    CHECK(cyclic_reduce(w) == parse_word("h", names));
    CHECK(cyclic_reduce(parse_word("a b a^-1", names)) == parse_word("b", names));
  }

  TEST_CASE("commutator and exponent sums") {
    Word c = commutator(Word::generator(0), Word::generator(1));
    CHECK(to_string(c, names) == "a b a^-1 b^-1");
    CHECK(exponent_sums(c, 3) == std::vector<std::int64_t>{0, 0, 0});
    CHECK(exponent_sums(parse_word("a^2 h^-3 a", names), 3) == std::vector<std::int64_t>{3, 0, -3});
  }

  TEST_CASE("substitution is a homomorphism") {
    std::vector<Word> images{parse_word("b", names), parse_word("a b", names), parse_word("h", names)};
    Word x = parse_word("a b^-1 h", names), y = parse_word("h^2 a", names);
    CHECK(substitute(x * y, images) == substitute(x, images) * substitute(y, images));
    CHECK(substitute(x.inverse(), images) == substitute(x, images).inverse());
  }

  TEST_CASE("parse and print round-trip") {
    for (const char* text : {"a", "a^-1 b^2 h", "h^-5", "1"}) {
      Word w = parse_word(text, names);
      CHECK(parse_word(to_string(w, names), names) == w);
    }
    CHECK(parse_word("1", names).empty());
    CHECK_THROWS(parse_word("z", names));
    CHECK_THROWS(parse_word("a^x", names));
  }
}
