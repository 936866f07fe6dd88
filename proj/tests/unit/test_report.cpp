#include <doctest.h>

#include <regex>

#include "flatbu/report.hpp"

using namespace flatbu;

namespace {

std::size_t count_matches(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("classification graph") {
    auto edges = full_classification();
    CHECK(edges.size() == 22);
    CHECK(source_degrees(edges) == std::array<int, 10>{4, 5, 2, 1, 0, 0, 7, 1, 1, 1});
    CHECK(std::find(edges.begin(), edges.end(), Edge{ManifoldId::N2, ManifoldId::N1, BUIndex::three, {}}) != edges.end());
  }

  TEST_CASE("dot output") {
    auto dot = emit("dot");
    CHECK(count_matches(dot, std::regex(R"(^  [MN]\d \[label)", std::regex::multiline)) == 10);
    CHECK(count_matches(dot, std::regex(R"(^  [MN]\d -> [MN]\d \[label="[123]"\];)", std::regex::multiline)) == 22);
    CHECK(emit("dot") == dot);
  }

  TEST_CASE("table output") {
    auto table = emit(ReportFormat::table);
    CHECK(table.find("E) M5 and M6: no involution.") != std::string::npos);
    CHECK(table.find("G) N2 admits 1 free involution.") != std::string::npos);
    CHECK(table.find("F) N1 admits 7 free involutions.") != std::string::npos);
  }

  TEST_CASE("unknown format") { CHECK_THROWS_AS(emit("svg"), std::invalid_argument); }

  TEST_CASE("JSON output and cover report round trip") {
    auto j = nlohmann::json::parse(emit("json"));
    CHECK(j["covers"].size() == 42);
    CHECK(j["edges"].size() == 22);
    for (const auto& item : j["covers"]) {
      auto r = cover_report_from_json(item);
      CHECK(to_json(r) == item);
      CHECK(abelianization(r.cover_presentation) == r.cover_h1);
      CHECK(r.cover_h1 == catalog_entry(r.cover).h1);
    }
    CHECK_THROWS(cover_report_from_json(nlohmann::json{{"base", "X9"}}));
  }

  TEST_CASE("analyze a catalog form and a non-flat symbol") {
    auto a = analyze({-1, SeifertType::o1, 0, {{2, 1}, {4, 1}, {4, 1}}});
    CHECK(a["catalog_id"] == "M4");
    CHECK(a["flat"] == true);
    REQUIRE(a["epimorphisms"].size() == 3);
    for (const auto& e : a["epimorphisms"]) CHECK(e["cover"]["id"].is_string());

    auto b = analyze({0, SeifertType::o1, 0, {{2, 1}, {3, 1}, {5, 1}}});
    CHECK(b["flat"] == false);
    CHECK(b["catalog_id"].is_null());
    for (const auto& e : b["epimorphisms"]) CHECK(e["cover"]["id"].is_null());

    auto c = analyze({0, SeifertType::n1, 1, {{2, 1}, {2, 1}}});
    CHECK(c["catalog_id"] == "N4");
    std::vector<std::string> covers;
    for (const auto& e : c["epimorphisms"]) covers.push_back(e["cover"]["id"]);
    std::sort(covers.begin(), covers.end());
    CHECK(covers == std::vector<std::string>{"M2", "N1", "N1"});
  }
}
