#include "flatbu/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flatbu {

std::string_view to_string(SeifertType t) {
  switch (t) {
    case SeifertType::o1: return "o1";
    case SeifertType::o2: return "o2";
    case SeifertType::n1: return "n1";
    case SeifertType::n2: return "n2";
    case SeifertType::n3: return "n3";
    case SeifertType::n4: return "n4";
  }
  return "?";
}

std::optional<SeifertType> parse_seifert_type(std::string_view s) {
  for (auto t : {SeifertType::o1, SeifertType::o2, SeifertType::n1, SeifertType::n2, SeifertType::n3,
                 SeifertType::n4}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

void SeifertInvariants::validate() const {
  auto fail = [this](const std::string& why) {
    throw std::invalid_argument("invalid Seifert invariants " + to_string() + ": " + why);
  };
  if (genus < 0) fail("negative genus");
  switch (type) {
    case SeifertType::o2:
    case SeifertType::n1:
    case SeifertType::n2:
      if (genus < 1) fail("type needs genus >= 1");
      break;
    case SeifertType::n3:
      if (genus < 2) fail("type n3 needs genus >= 2");
      break;
    case SeifertType::n4:
      if (genus < 3) fail("type n4 needs genus >= 3");
      break;
    case SeifertType::o1:
      break;
  }
  for (const auto& f : fibers) {
    if (f.a < 2) fail("exceptional fiber with a < 2");
    if (std::gcd(f.a, f.b) != 1) fail("exceptional fiber with gcd(a, b) != 1");
  }
  if (!total_orientable() && b != 0 && b != 1) fail("non-orientable total space needs b in {0, 1}");
}

std::size_t SeifertInvariants::num_surface_generators() const {
  return base_orientable() ? static_cast<std::size_t>(2 * genus) : static_cast<std::size_t>(genus);
}

int SeifertInvariants::fiber_sign(std::size_t j) const {
  switch (type) {
    case SeifertType::o1:
    case SeifertType::n1:
      return 1;
    case SeifertType::o2:
    case SeifertType::n2:
      return -1;
    case SeifertType::n3:
      return j == 0 ? 1 : -1;
    case SeifertType::n4:
      return j < 2 ? 1 : -1;
  }
  return 1;
}

std::string SeifertInvariants::to_string() const {
  std::ostringstream os;
  os << '{' << b << ";(" << flatbu::to_string(type) << ',' << genus << ");";
  for (std::size_t k = 0; k < fibers.size(); ++k) {
    os << (k ? "," : "") << '(' << fibers[k].a << ',' << fibers[k].b << ')';
  }
  os << '}';
  return os.str();
}

bool equivalent_symbols(const SeifertInvariants& x, const SeifertInvariants& y) {
  if (x.b != y.b || x.type != y.type || x.genus != y.genus || x.fibers.size() != y.fibers.size()) return false;
  auto key = [](const ExceptionalFiber& f) { return std::pair(f.a, f.b); };
  auto fx = x.fibers, fy = y.fibers;
  auto less = [&](const ExceptionalFiber& p, const ExceptionalFiber& q) { return key(p) < key(q); };
  std::sort(fx.begin(), fx.end(), less);
  std::sort(fy.begin(), fy.end(), less);
  return fx == fy;
}

Presentation build_presentation(const SeifertInvariants& si) {
  si.validate();
  const std::size_t n = si.fibers.size();
  const std::size_t gp = si.num_surface_generators();
  const std::size_t h = si.fiber_generator();

  Presentation p;
  for (std::size_t k = 0; k < n; ++k) p.generators.push_back("s" + std::to_string(k + 1));
  for (std::size_t j = 0; j < gp; ++j) p.generators.push_back("v" + std::to_string(j + 1));
  p.generators.push_back("h");

  const Word hw = Word::generator(h);
  for (std::size_t k = 0; k < n; ++k) {
    p.relators.push_back(commutator(Word::generator(k), hw));
    p.relators.push_back(Word({{k, si.fibers[k].a}, {h, si.fibers[k].b}}));
  }
  for (std::size_t j = 0; j < gp; ++j) {
    const std::size_t v = si.surface_generator(j);
    p.relators.push_back(Word({{v, 1}, {h, 1}, {v, -1}, {h, -si.fiber_sign(j)}}));
  }

  std::vector<Letter> last;
  for (std::size_t k = 0; k < n; ++k) last.push_back({k, 1});
  if (si.base_orientable()) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(si.genus); ++i) {
      const std::size_t x = si.surface_generator(2 * i), y = si.surface_generator(2 * i + 1);
      last.insert(last.end(), {{x, 1}, {y, 1}, {x, -1}, {y, -1}});
    }
  } else {
    for (std::size_t j = 0; j < gp; ++j) last.push_back({si.surface_generator(j), 2});
  }
  if (si.b != 0) last.push_back({h, -si.b});
  p.relators.push_back(Word(std::move(last)));
  return p;
}

DerivedInvariants derived_invariants(const SeifertInvariants& si) {
  DerivedInvariants d;
  d.a = 1;
  for (const auto& f : si.fibers) d.a = lcm(d.a, mpz_class(static_cast<long>(f.a)));
  d.c = mpz_class(static_cast<long>(si.b)) * d.a;
  for (const auto& f : si.fibers) {
    d.c += mpz_class(static_cast<long>(f.b)) * (d.a / mpz_class(static_cast<long>(f.a)));
    if (f.a % 2 == 0) ++d.d;
  }
  return d;
}

Z2Char orientation_character(const SeifertInvariants& si) {
  si.validate();
  Z2Char w{std::vector<std::uint8_t>(si.num_generators(), 0)};
  const bool reverses_base = !si.base_orientable();
  for (std::size_t j = 0; j < si.num_surface_generators(); ++j) {
    const bool reverses_fiber = si.fiber_sign(j) < 0;
    w.values[si.surface_generator(j)] = reverses_base != reverses_fiber ? 1 : 0;
  }
  return w;
}

SeifertInvariants reverse_orientation(const SeifertInvariants& si) {
  si.validate();
  if (!si.total_orientable()) {
    throw std::invalid_argument("reverse_orientation: total space of " + si.to_string() + " is not orientable");
  }
  SeifertInvariants out = si;
  out.b = -si.b - static_cast<std::int64_t>(si.fibers.size());
  for (auto& f : out.fibers) f.b = f.a - f.b;
  return out;
}

mpq_class base_orbifold_euler_characteristic(const SeifertInvariants& si) {
  mpq_class chi = si.base_orientable() ? mpq_class(2 - 2 * si.genus) : mpq_class(2 - si.genus);
  for (const auto& f : si.fibers) chi -= 1 - mpq_class(1, f.a);
  chi.canonicalize();
  return chi;
}

SeifertInvariants seifert_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("Seifert invariants must be a JSON object");
  for (const char* key : {"b", "type", "g", "pairs"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("Seifert invariants: missing field \"") + key + '"');
  }
  SeifertInvariants si;
  si.b = j.at("b").get<std::int64_t>();
  auto type = parse_seifert_type(j.at("type").get<std::string>());
  if (!type) throw std::invalid_argument("Seifert invariants: unknown type " + j.at("type").dump());
  si.type = *type;
  si.genus = j.at("g").get<std::int64_t>();
  for (const auto& pair : j.at("pairs")) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("Seifert invariants: pairs must be [a, b]");
    si.fibers.push_back({pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>()});
  }
  si.validate();
  return si;
}

nlohmann::json to_json(const SeifertInvariants& si) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& f : si.fibers) pairs.push_back({f.a, f.b});
  return {{"b", si.b}, {"type", std::string(to_string(si.type))}, {"g", si.genus}, {"pairs", pairs}};
}

}  // namespace flatbu
