#include "flatbu/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace flatbu {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().gen == l.gen) {
    out.back().exp += l.exp;
    if (out.back().exp == 0) out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.exp == 0) throw std::invalid_argument("word letter with exponent 0");
  }
}

Word Word::generator(std::size_t gen, std::int64_t exp) {
  if (exp == 0) return {};
  return Word({Letter{gen, exp}});
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& l : letters_) n += std::llabs(l.exp);
  return n;
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i].gen == letters_[i - 1].gen) return false;
  }
  return true;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->gen, -it->exp});
  return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + rhs.letters_.size());
  for (const auto& l : letters_) push_reduced(out, l);
  for (const auto& l : rhs.letters_) push_reduced(out, l);
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) push_reduced(out, l);
  return Word(std::move(out));
}

Word cyclic_reduce(const Word& w) {
  std::vector<Letter> letters = free_reduce(w).letters();
  // Conjugating by the last letter merges it into the first.
  while (letters.size() >= 2 && letters.front().gen == letters.back().gen) {
    letters.front().exp += letters.back().exp;
    letters.pop_back();
    if (letters.front().exp == 0) letters.erase(letters.begin());
  }
  return Word(std::move(letters));
}

Word power(const Word& w, std::int64_t n) {
  if (w.size() == 1) return Word::generator(w.letters()[0].gen, w.letters()[0].exp * n);
  Word base = n < 0 ? w.inverse() : w;
  Word out;
  for (std::int64_t i = 0; i < std::llabs(n); ++i) out = out * base;
  return out;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word substitute(const Word& w, std::span<const Word> images) {
  Word out;
  for (const auto& l : w.letters()) {
    if (l.gen >= images.size()) throw std::out_of_range("substitute: generator without image");
    out = out * power(images[l.gen], l.exp);
  }
  return out;
}

std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t num_generators) {
  std::vector<std::int64_t> sums(num_generators, 0);
  for (const auto& l : w.letters()) {
    if (l.gen >= num_generators) throw std::out_of_range("exponent_sums: generator index out of range");
    sums[l.gen] += l.exp;
  }
  return sums;
}

std::string to_string(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    if (l.gen < names.size()) {
      os << names[l.gen];
    } else {
      os << 'x' << l.gen;
    }
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

Word parse_word(std::string_view text, std::span<const std::string> names) {
  std::vector<Letter> letters;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    if (token == "1") continue;
    std::string name = token;
    std::int64_t exp = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      try {
        std::size_t used = 0;
        exp = std::stoll(token.substr(caret + 1), &used);
        if (used != token.size() - caret - 1) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_word: bad exponent in \"" + token + '"');
      }
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("parse_word: unknown generator \"" + name + '"');
    if (exp != 0) letters.push_back({static_cast<std::size_t>(it - names.begin()), exp});
  }
  return Word(std::move(letters));
}

}  // namespace flatbu
