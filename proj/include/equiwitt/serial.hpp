#pragma once

#include <json.hpp>

#include "equiwitt/wittgroup.hpp"

namespace equiwitt {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

/// {"rows", "cols", "entries": [[int]]}, little-endian scalar bit patterns.
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, Field f);

/// {"degree": int, "gens": [[int]]}, 0-based images.
Json group_to_json(const PermGroup& g);
std::shared_ptr<const PermGroup> group_from_json(const Json& j);

/// {"field", "dim", "upper": [[int]]}.
Json quadform_to_json(const QuadForm& q);
QuadForm quadform_from_json(const Json& j);

/// {"group", "field", "rep_mats", "upper"} plus an optional "label".
Json equivform_to_json(const EquivForm& x, const std::string& label = "");
/// Parses, validates the representation and the form, and computes the
/// catalog of the group algebra.
EquivForm equivform_from_json(const Json& j, const MeataxeOptions& opts = {});

Json catalog_to_json(const Catalog& cat);
Json coords_to_json(const WittCoords& c);
Json transcript_to_json(const std::vector<ReductionStep>& steps);
/// {s, t, rank, generators: [labels], checks: [{name, pass, ms}]}.
Json report_to_json(const TheoremReport& r, const GroupWittDescription& desc);

}  // namespace equiwitt
