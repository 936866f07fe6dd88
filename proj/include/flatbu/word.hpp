#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flatbu {

/// One run-length letter g^exp of a free-group word. `gen` is 0-based.
struct Letter {
  std::size_t gen = 0;
  std::int64_t exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Element of a free group stored run-length. Letters never carry exponent 0;
/// adjacent letters may share a generator until the word is freely reduced.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  static Word generator(std::size_t gen, std::int64_t exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  /// Total number of generator symbols, i.e. the sum of |exp|.
  std::int64_t length() const;
  bool is_reduced() const;

  Word inverse() const;

  /// Group product; the result is freely reduced.
  Word operator*(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);

/// Freely and cyclically reduced conjugate of w.
Word cyclic_reduce(const Word& w);

Word power(const Word& w, std::int64_t n);

/// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

/// Image of w under the endomorphism sending generator g to images[g].
Word substitute(const Word& w, std::span<const Word> images);

std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t num_generators);

std::string to_string(const Word& w, std::span<const std::string> names);

/// Parses the to_string format, e.g. "s1 s2^-1 h^2"; "1" or "" is the empty word.
Word parse_word(std::string_view text, std::span<const std::string> names);

}  // namespace flatbu
