#pragma once

#include <cstdint>

#include "surfdyn/spec_model.hpp"

namespace surfdyn {

struct GeneratorConfig {
    std::uint64_t seed = 0;
    int max_basic_sets = 6;
    int max_bunches_per_set = 4;
    int max_degree = 6;
};

// Two attractors with one degree-2 bunch each and a repeller with two
// degree-2 bunches; decomposes into three tori.
DiffeoSpec example_f1();

// One attractor and one repeller with two degree-2 bunches each; two
// parallel complement components, so one extra torus summand.
DiffeoSpec example_f2();

// One attractor and one repeller with a single degree-2 bunch each; the
// ambient surface has genus 2.
DiffeoSpec example_pretzel();

// Alternating attractor/repeller path of `genus` basic sets, each a torus
// summand: end sets carry one degree-2 bunch, interior sets two. Total genus
// equals the argument; no extra tori. Throws std::invalid_argument for
// genus < 2 (the sphere and the torus admit no such diffeomorphism).
DiffeoSpec generate_for_genus(long long genus);

// Random spec that always passes validate_spec; deterministic in cfg.seed.
// Builds a random connected bipartite multigraph within the configured
// bounds, then samples bunch degrees and repairs them until every basic set
// has an integer non-negative genus. Throws std::invalid_argument when the
// bounds cannot be satisfied.
DiffeoSpec random_valid_spec(const GeneratorConfig& cfg);

} // namespace surfdyn
