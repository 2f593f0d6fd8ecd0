#pragma once

// Output formatting for the CLI: JSON, TSV, human-readable text, and SVG
// wall diagrams. Exact values serialize as integers and "num/den" strings;
// decimal approximations are display-only, derived at a fixed precision.

#include "abelwalls/ampleness.hpp"
#include "abelwalls/lattice.hpp"
#include "abelwalls/stability.hpp"
#include "abelwalls/walls.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace abelwalls {

enum class Format { json, tsv, svg, human };

Format parse_format(const std::string& name);

// "r,c,chi" with optional spaces, e.g. "1,4,11".
Character parse_character(const std::string& text);

nlohmann::json int_json(const Int& x);
nlohmann::json character_json(const Character& u);
nlohmann::json surface_json(const Surface& S);
nlohmann::json stability_point_json(const StabilityPoint& p);
nlohmann::json wall_json(const Wall& w, int precision);
nlohmann::json wall_list_json(const Surface& S, const Character& target,
                              const std::vector<Wall>& walls, int precision);
nlohmann::json phi_report_json(const PhiReport& rep, int precision);
nlohmann::json bounds_json(const Surface& S, const Int& n, const BoundsRecord& b);

std::string wall_list_tsv(const Surface& S, const Character& target,
                          const std::vector<Wall>& walls, int precision);
std::string wall_list_human(const Surface& S, const Character& target,
                            const std::vector<Wall>& walls, int precision);
std::string phi_report_human(const PhiReport& rep, int precision);
std::string bounds_human(const Surface& S, const Int& n, const BoundsRecord& b);

// Wall diagram in the (s, t) upper half-plane: every wall's circle locus as
// one path element, the s = 0 axis marked. Window: s in [-c_v, c_v],
// t up to 1.2 * (largest wall t).
std::string wall_diagram_svg(const Surface& S, const Character& target,
                             const std::vector<Wall>& walls, int precision);

}  // namespace abelwalls
