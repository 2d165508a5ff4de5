#pragma once

#include <string>
#include <vector>

#include "surfdyn/da_sim.hpp"

namespace surfdyn {

struct PhasePortrait {
    std::vector<TorusPoint> cloud;
    std::vector<FixedPointRecord> fixed_points;
    std::vector<std::vector<TorusPoint>> segments;
};

// Standalone SVG 1.1 document: the unit square as the fundamental domain,
// cloud points as dots, manifold polylines stroked (split at torus wraps),
// one glyph per fixed point (class "fp fp-<kind>"). Byte-deterministic for
// identical inputs.
std::string render_phase_portrait(const PhasePortrait& portrait);

// Throws IoError when the path cannot be written.
void write_text_file(const std::string& path, const std::string& content);

} // namespace surfdyn
