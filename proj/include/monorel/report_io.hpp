#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "monorel/gossez.hpp"
#include "monorel/report.hpp"
#include "monorel/subspace.hpp"

namespace monorel {

// Rationals are written as canonical "p" or "p/q" strings everywhere.

nlohmann::json vec_json(const Vec& v);
/// {"x": [...], "y": [...]}
nlohmann::json point_json(const Point& z);
/// {"n": .., "dim": .., "basis": [[x.., y..], ..]} with the canonical basis.
nlohmann::json subspace_json(const Subspace& s);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json report_json(const ClassificationReport& r, std::string_view kind);
nlohmann::json sequence_json(const EvConstSeq& y);
nlohmann::json gossez_json(const GossezReport& r);

/// "(x_1 x_2 ; y_1 y_2)"
std::string format_point(const Point& z);
std::string format_vec(const Vec& v);
std::string format_verdict(const Verdict& v);

std::string report_text(const ClassificationReport& r, std::string_view kind);
std::string subspace_text(const Subspace& s);
std::string sequence_text(const EvConstSeq& y);
std::string gossez_text(const GossezReport& r);

}  // namespace monorel
