#pragma once

#include <string>
#include <vector>

#include "surfdyn/rational.hpp"
#include "surfdyn/spec_model.hpp"

namespace surfdyn {

// Genus/boundary profile of the trapping sub-surface around one basic set.
struct SubsurfaceProfile {
    long long genus = 0;
    long long boundary_count = 0;

    bool operator==(const SubsurfaceProfile&) const = default;
};

struct PairingVertex {
    std::string id;
    BasicSetKind kind = BasicSetKind::Attractor;
    long long genus = 0;

    bool operator==(const PairingVertex&) const = default;
};

struct PairingEdge {
    std::string component_id;
    std::string attractor_id; // basic set owning the attractor bunch
    std::string repeller_id;

    bool operator==(const PairingEdge&) const = default;
};

// Multigraph with basic sets as vertices and complement components as edges.
// Bipartite across kinds; connected for valid specs.
struct PairingGraph {
    std::vector<PairingVertex> vertices;
    std::vector<PairingEdge> edges;

    bool operator==(const PairingGraph&) const = default;
};

std::string to_dot(const PairingGraph& g);

// Cutting a component either disconnects the surface (Split, bridge edge) or
// peels off a torus handle (TorusSummand, edge on a cycle).
enum class SurgeryClass { Split, TorusSummand };

const char* to_string(SurgeryClass c);

struct SurgeryStep {
    std::string component_id;
    SurgeryClass classification = SurgeryClass::Split;

    bool operator==(const SurgeryStep&) const = default;
};

struct Summand {
    std::string basic_set_id;
    long long genus = 0;

    bool operator==(const Summand&) const = default;
};

// Connected-sum decomposition of the ambient surface: one closed summand per
// basic set plus torus_count extra tori.
struct Decomposition {
    std::vector<Summand> summands;
    long long torus_count = 0;
    long long total_genus = 0;
    std::vector<SurgeryStep> trace;

    std::string to_json(bool with_trace) const;

    bool operator==(const Decomposition&) const = default;
};

// Index of a saddle singularity with the given number of separatrices:
// 1 - count/2, exact. Throws std::domain_error for count < 1.
Rational saddle_index(long long separatrix_count);

// Euler characteristic m - h/2 of the closed surface obtained by capping the
// trapping neighborhood of a basic set with m bunches of total degree h.
// Requires h - 2m = 0 (mod 4); otherwise throws std::domain_error carrying
// the non-integer genus value.
long long euler_char_closed_from_bunches(long long m, long long h);

// Euler characteristic of a compact surface with boundary: that of the capped
// closed surface minus the number of boundary curves.
long long euler_char_with_boundary(long long chi_closed, long long boundary_curves);

// Genus 1 + h/4 - m/2 and boundary count m of the trapping sub-surface of a
// basic set. Cross-checked against the saddle-index route chi = 2 - 2g.
// Throws std::domain_error (with the exact rational) when the genus is not a
// non-negative integer.
SubsurfaceProfile basic_set_genus(const BasicSet& bs);

PairingGraph build_pairing_graph(const DiffeoSpec& spec);

// E - V + 1 of a connected multigraph. Throws std::invalid_argument when the
// graph is disconnected.
long long cycle_rank(const PairingGraph& g);

// Classifies each component cut in the given order: TorusSummand when the
// edge lies on a cycle of the not-yet-cut subgraph, Split when it is a
// bridge. Every order yields exactly k-1 Split and l TorusSummand steps.
std::vector<SurgeryStep> surgery_trace(const DiffeoSpec& spec);
std::vector<SurgeryStep> surgery_trace(const DiffeoSpec& spec,
                                       const std::vector<std::string>& order);

Decomposition decompose(const DiffeoSpec& spec);

// Genus of the ambient surface, 1 + h/4; equals the sum of the decomposition
// genera plus the torus count.
long long total_genus(const DiffeoSpec& spec);

} // namespace surfdyn
