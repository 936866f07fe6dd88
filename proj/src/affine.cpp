#include "flatbu/affine.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace flatbu {

namespace {

std::vector<Rational> parse_rationals(std::string_view text) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream is{std::string(text)};
  while (std::getline(is, item, ',')) {
    const auto begin = item.find_first_not_of(' ');
    const auto end = item.find_last_not_of(' ');
    if (begin == std::string::npos) throw std::invalid_argument("empty rational in affine data");
    Rational q(item.substr(begin, end - begin + 1));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace

AffineIsometry::AffineIsometry() {
  for (std::size_t i = 0; i < 3; ++i) linear_[3 * i + i] = 1;
}

AffineIsometry::AffineIsometry(std::array<Rational, 9> linear, std::array<Rational, 3> translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (determinant() == 0) throw std::invalid_argument("affine map with singular linear part");
}

AffineIsometry AffineIsometry::parse(std::string_view linear, std::string_view translation) {
  auto l = parse_rationals(linear);
  auto t = parse_rationals(translation);
  if (l.size() != 9 || t.size() != 3) throw std::invalid_argument("affine data needs 9 + 3 entries");
  std::array<Rational, 9> la;
  std::array<Rational, 3> ta;
  std::copy(l.begin(), l.end(), la.begin());
  std::copy(t.begin(), t.end(), ta.begin());
  return AffineIsometry(la, ta);
}

AffineIsometry AffineIsometry::operator*(const AffineIsometry& then) const {
  // x L1 + t1, then (x L1 + t1) L2 + t2.
  AffineIsometry out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += linear(i, k) * then.linear(k, j);
      out.linear_[3 * i + j] = s;
    }
  }
  for (std::size_t j = 0; j < 3; ++j) {
    Rational s = then.translation_[j];
    for (std::size_t k = 0; k < 3; ++k) s += translation_[k] * then.linear(k, j);
    out.translation_[j] = s;
  }
  return out;
}

Rational AffineIsometry::determinant() const {
  const auto& m = linear_;
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

AffineIsometry AffineIsometry::inverse() const {
  const auto& m = linear_;
  const Rational det = determinant();
  std::array<Rational, 9> inv{
      (m[4] * m[8] - m[5] * m[7]) / det, (m[2] * m[7] - m[1] * m[8]) / det, (m[1] * m[5] - m[2] * m[4]) / det,
      (m[5] * m[6] - m[3] * m[8]) / det, (m[0] * m[8] - m[2] * m[6]) / det, (m[2] * m[3] - m[0] * m[5]) / det,
      (m[3] * m[7] - m[4] * m[6]) / det, (m[1] * m[6] - m[0] * m[7]) / det, (m[0] * m[4] - m[1] * m[3]) / det};
  std::array<Rational, 3> t;
  for (std::size_t j = 0; j < 3; ++j) {
    Rational s = 0;
    for (std::size_t k = 0; k < 3; ++k) s -= translation_[k] * inv[3 * k + j];
    t[j] = s;
  }
  return AffineIsometry(inv, t);
}

AffineIsometry AffineIsometry::pow(std::int64_t n) const {
  AffineIsometry base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  AffineIsometry out;
  while (e) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

bool AffineIsometry::has_identity_linear_part() const {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (linear(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool AffineIsometry::is_identity() const {
  return has_identity_linear_part() && translation_[0] == 0 && translation_[1] == 0 && translation_[2] == 0;
}

std::array<Rational, 3> AffineIsometry::apply(const std::array<Rational, 3>& x) const {
  std::array<Rational, 3> y = translation_;
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) y[j] += x[k] * linear(k, j);
  }
  return y;
}

std::string AffineIsometry::to_string() const {
  std::ostringstream os;
  os << "L=[";
  for (std::size_t i = 0; i < 9; ++i) os << (i == 0 ? "" : (i % 3 == 0 ? "; " : " ")) << linear_[i];
  os << "] t=(" << translation_[0] << ' ' << translation_[1] << ' ' << translation_[2] << ')';
  return os.str();
}

AffineIsometry eval_word(std::span<const AffineIsometry> rep, const Word& w) {
  AffineIsometry out;
  for (const auto& l : w.letters()) {
    if (l.gen >= rep.size()) throw std::out_of_range("eval_word: generator without a representation");
    out = out * rep[l.gen].pow(l.exp);
  }
  return out;
}

}  // namespace flatbu
