#pragma once

#include <json.hpp>
#include <vector>

#include "eigenfence/bounds.hpp"
#include "eigenfence/matrix.hpp"
#include "eigenfence/region.hpp"

// JSON schemas shared by the CLI and its tests.
//
// region:  {"kind": "disc_union", "discs": [{"center": c, "radius": r}, ...]}
//          {"kind": "pairwise_intersection_union", "pairs": [[disc, disc], ...]}
//          {"kind": "cassini_union", "ovals": [{"c1": a, "c2": b, "bound": p}, ...]}
//          {"kind": "intersection", "parts": [region, ...]}
// bound:   {"name": s, "value": x, "source": s, "k": int or absent}
namespace eigenfence {

nlohmann::json to_json(const RealMatrix& m);
nlohmann::json to_json(const Disc& d);
nlohmann::json to_json(const Region& r);
nlohmann::json to_json(const BoundReport& b);
nlohmann::json to_json(const std::vector<BoundReport>& bounds);

/// Inverses of the above; throw ParseError on schema violations.
RealMatrix matrix_from_json(const nlohmann::json& j);
Region region_from_json(const nlohmann::json& j);
std::vector<BoundReport> bounds_from_json(const nlohmann::json& j);

}  // namespace eigenfence
