#include "flatbu/characters.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flatbu {

bool Z2Char::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](std::uint8_t v) { return v == 0; });
}

std::uint8_t Z2Char::operator()(const Word& w) const {
  std::int64_t total = 0;
  for (const auto& l : w.letters()) {
    if (l.gen >= values.size()) throw std::out_of_range("Z2Char: generator index out of range");
    if (values[l.gen]) total += l.exp;
  }
  return static_cast<std::uint8_t>(((total % 2) + 2) % 2);
}

std::string Z2Char::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << int(values[i]);
  os << ')';
  return os.str();
}

std::string IntChar::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ')';
  return os.str();
}

IntChar make_int_char(const std::vector<long>& values) {
  IntChar psi;
  for (long v : values) psi.values.emplace_back(v);
  return psi;
}

bool is_homomorphism(const Presentation& p, const Z2Char& phi) {
  if (phi.values.size() != p.num_generators()) return false;
  return std::all_of(p.relators.begin(), p.relators.end(), [&](const Word& r) { return phi(r) == 0; });
}

bool is_homomorphism(const Presentation& p, const IntChar& psi) {
  if (psi.values.size() != p.num_generators()) return false;
  for (const auto& r : p.relators) {
    mpz_class total = 0;
    for (const auto& l : r.letters()) total += psi.values[l.gen] * mpz_class(static_cast<long>(l.exp));
    if (total != 0) return false;
  }
  return true;
}

bool is_lift_of(const Presentation& p, const IntChar& psi, const Z2Char& phi) {
  if (psi.values.size() != phi.values.size() || !is_homomorphism(p, psi)) return false;
  for (std::size_t i = 0; i < psi.values.size(); ++i) {
    mpz_class r = psi.values[i] % 2;
    if ((r != 0) != (phi.values[i] != 0)) return false;
  }
  return true;
}

namespace gf2 {

namespace {

// Row-reduces `a` in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> eliminate(std::vector<Row>& a, std::size_t cols, Row* rhs) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t sel = r;
    while (sel < a.size() && !a[sel][c]) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[r], a[sel]);
    if (rhs) std::swap((*rhs)[r], (*rhs)[sel]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != r && a[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
        if (rhs) (*rhs)[i] ^= (*rhs)[r];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<Row> nullspace(std::vector<Row> a, std::size_t cols) {
  auto pivots = eliminate(a, cols, nullptr);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row x(cols, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Row> solve(std::vector<Row> a, Row b, std::size_t cols) {
  auto pivots = eliminate(a, cols, &b);
  for (std::size_t r = pivots.size(); r < a.size(); ++r) {
    if (b[r]) return std::nullopt;
  }
  Row x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

}  // namespace gf2

std::vector<Z2Char> z2_characters(const Presentation& p) {
  const std::size_t n = p.num_generators();
  IntMatrix m = relation_matrix(p);
  std::vector<gf2::Row> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    gf2::Row row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = mpz_class(m(i, j) % 2) != 0 ? 1 : 0;
    rows.push_back(std::move(row));
  }
  auto basis = gf2::nullspace(std::move(rows), n);
  if (basis.size() >= 63) throw std::length_error("z2_characters: too many characters to enumerate");

  std::vector<Z2Char> out;
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    Z2Char phi{std::vector<std::uint8_t>(n, 0)};
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if ((mask >> b) & 1) {
        for (std::size_t j = 0; j < n; ++j) phi.values[j] ^= basis[b][j];
      }
    }
    out.push_back(std::move(phi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<IntChar> integral_lift(const Presentation& p, const Z2Char& phi) {
  const std::size_t n = p.num_generators();
  if (phi.values.size() != n) throw std::invalid_argument("integral_lift: character has wrong length");
  // Integral solutions of M psi = 0 are V y with y_i = 0 for i < rank, so the
  // lattice is spanned by the trailing columns of V.
  SmithForm f = smith_normal_form(relation_matrix(p));
  const std::size_t k = n - f.rank;
  std::vector<gf2::Row> rows(n, gf2::Row(k, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = mpz_class(f.V(i, f.rank + j) % 2) != 0 ? 1 : 0;
  }
  auto y = gf2::solve(rows, gf2::Row(phi.values.begin(), phi.values.end()), k);
  if (!y) return std::nullopt;

  IntChar psi{std::vector<mpz_class>(n, 0)};
  for (std::size_t j = 0; j < k; ++j) {
    if (!(*y)[j]) continue;
    for (std::size_t i = 0; i < n; ++i) psi.values[i] += f.V(i, f.rank + j);
  }
  auto first = std::find_if(psi.values.begin(), psi.values.end(), [](const mpz_class& v) { return v != 0; });
  if (first != psi.values.end() && *first < 0) {
    for (auto& v : psi.values) v = -v;
  }
  return psi;
}

}  // namespace flatbu
