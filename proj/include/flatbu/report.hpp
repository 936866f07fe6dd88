#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "flatbu/covers.hpp"
#include "flatbu/equivalence.hpp"

namespace flatbu {

/// One class of free involutions: `cover` double covers `base` along each
/// epimorphism in `epis`, with Z/2-index `index`.
struct Edge {
  ManifoldId cover;
  ManifoldId base;
  BUIndex index;
  std::vector<Z2Char> epis;

  friend bool operator==(const Edge& x, const Edge& y) {
    return x.cover == y.cover && x.base == y.base && x.index == y.index;
  }
};

/// One edge per equivalence class, bases in catalog order.
std::vector<Edge> full_classification();

/// Number of edges leaving each manifold, read as a cover, in catalog order.
std::array<int, 10> source_degrees(const std::vector<Edge>& edges);

enum class ReportFormat { table, json, dot };
std::optional<ReportFormat> parse_report_format(std::string_view s);

std::string emit(ReportFormat format);
/// Throws std::invalid_argument on an unknown format name.
std::string emit(std::string_view format);

nlohmann::json to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AbelianGroup& g);
AbelianGroup abelian_group_from_json(const nlohmann::json& j);

/// Schema: {"base", "phi", "epi", "classical", "cover", "cover_presentation",
/// "cover_h1", "orientable", "index", "lift"}; "classical" and "lift" may be null.
nlohmann::json to_json(const CoverReport& r);
CoverReport cover_report_from_json(const nlohmann::json& j);

/// Full analysis of an arbitrary Seifert symbol: derived invariants, every
/// epimorphism with its lift, cup-cube and index, and the cover when the
/// base is flat.
nlohmann::json analyze(const SeifertInvariants& si);

}  // namespace flatbu
