#pragma once

#include <string>
#include <vector>

#include "surfdyn/spec_model.hpp"

namespace surfdyn {

struct PrecEdge {
    std::string from;
    std::string to;

    bool operator==(const PrecEdge&) const = default;
};

// Directed graph of the "comes before" relation between basic sets: an edge
// a -> b means the stable manifold of a meets the unstable manifold of b.
// For specs in this class every edge runs from an attractor to a repeller.
struct PrecGraph {
    std::vector<std::string> vertices;
    std::vector<PrecEdge> edges;

    bool operator==(const PrecGraph&) const = default;
};

std::string to_dot(const PrecGraph& g);

struct StabilityVerdict {
    bool omega_stable = false;
    bool structurally_stable = false;
    bool has_cycles = false;
    std::string reason;

    std::string to_json() const;
};

// One vertex per basic set; one edge attractor -> repeller per complement
// component, deduplicated per ordered pair.
PrecGraph build_prec_graph(const DiffeoSpec& spec);

// True iff the digraph contains a directed cycle; self-loops count. Works on
// arbitrary edge sets, not only graphs built from specs.
bool detect_cycles(const PrecGraph& g);

StabilityVerdict stability_verdict(const DiffeoSpec& spec);

} // namespace surfdyn
