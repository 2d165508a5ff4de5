#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "surfdyn/examples_gen.hpp"
#include "surfdyn/stability.hpp"

using namespace surfdyn;

namespace {

// Every digraph on n vertices, adjacency encoded in the bits of `mask`.
PrecGraph graph_from_mask(int n, std::uint64_t mask) {
    PrecGraph g;
    for (int v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (mask & (1ull << (i * n + j))) g.edges.push_back({g.vertices[i], g.vertices[j]});
    return g;
}

std::vector<std::vector<bool>> adjacency_from_mask(int n, std::uint64_t mask) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adj[i][j] = (mask & (1ull << (i * n + j))) != 0;
    return adj;
}

} // namespace

TEST_CASE("build_prec_graph on the named examples") {
    const auto f1 = build_prec_graph(example_f1());
    CHECK(f1.vertices == std::vector<std::string>{"A1", "A2", "R1"});
    CHECK(f1.edges == std::vector<PrecEdge>{{"A1", "R1"}, {"A2", "R1"}});

    // f2's two parallel components collapse into one prec edge.
    const auto f2 = build_prec_graph(example_f2());
    CHECK(f2.edges == std::vector<PrecEdge>{{"A1", "R1"}});

    const auto pretzel = build_prec_graph(example_pretzel());
    CHECK(pretzel.edges == std::vector<PrecEdge>{{"A1", "R1"}});
}

TEST_CASE("detect_cycles basics") {
    CHECK_FALSE(detect_cycles(build_prec_graph(example_f2())));

    PrecGraph two_cycle;
    two_cycle.vertices = {"A", "R"};
    two_cycle.edges = {{"A", "R"}, {"R", "A"}};
    CHECK(detect_cycles(two_cycle));

    PrecGraph empty;
    empty.vertices = {"A", "R"};
    CHECK_FALSE(detect_cycles(empty));

    PrecGraph self_loop;
    self_loop.vertices = {"A"};
    self_loop.edges = {{"A", "A"}};
    CHECK(detect_cycles(self_loop));
}

TEST_CASE("detect_cycles matches exhaustive path enumeration on small digraphs") {
    // All digraphs on up to 3 vertices, including self-loops.
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t total = 1ull << (n * n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const bool expected = oracles::cycle_by_path_enumeration(
                n, adjacency_from_mask(n, mask));
            CHECK(detect_cycles(graph_from_mask(n, mask)) == expected);
        }
    }
}

TEST_CASE("stability_verdict on the named examples") {
    for (const DiffeoSpec& spec : {example_f1(), example_f2(), example_pretzel()}) {
        const auto verdict = stability_verdict(spec);
        CHECK(verdict.omega_stable);
        CHECK_FALSE(verdict.structurally_stable);
        CHECK_FALSE(verdict.has_cycles);
        CHECK_FALSE(verdict.reason.empty());
    }
}

TEST_CASE("stability_verdict is invariant under id relabeling") {
    DiffeoSpec spec = example_f1();
    const auto before = stability_verdict(spec);
    for (auto& bs : spec.basic_sets) {
        bs.id = "node-" + bs.id;
        for (auto& b : bs.bunches) b.id = "node-" + b.id;
    }
    for (auto& c : spec.complement_components) {
        c.id = "region-" + c.id;
        c.attractor_bunch = "node-" + c.attractor_bunch;
        c.repeller_bunch = "node-" + c.repeller_bunch;
    }
    const auto after = stability_verdict(spec);
    CHECK(before.omega_stable == after.omega_stable);
    CHECK(before.structurally_stable == after.structurally_stable);
    CHECK(before.has_cycles == after.has_cycles);
}

TEST_CASE("random valid specs never produce cycles") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        const DiffeoSpec spec = random_valid_spec(cfg);
        const auto g = build_prec_graph(spec);
        // All edges attractor -> repeller: bipartite, so acyclic.
        std::set<std::string> attractors;
        for (const auto& bs : spec.basic_sets)
            if (bs.kind == BasicSetKind::Attractor) attractors.insert(bs.id);
        for (const auto& e : g.edges) {
            CHECK(attractors.count(e.from) == 1);
            CHECK(attractors.count(e.to) == 0);
        }
        CHECK_FALSE(detect_cycles(g));
        const auto verdict = stability_verdict(spec);
        CHECK(verdict.omega_stable);
        CHECK_FALSE(verdict.structurally_stable);
    }
}

TEST_CASE("verdict JSON and prec DOT") {
    const std::string json = stability_verdict(example_pretzel()).to_json();
    CHECK(json.find("\"omega_stable\": true") != std::string::npos);
    CHECK(json.find("\"structurally_stable\": false") != std::string::npos);
    CHECK(json.find("\"has_cycles\": false") != std::string::npos);
    CHECK(json.find("\"reason\": ") != std::string::npos);

    const std::string dot = to_dot(build_prec_graph(example_f1()));
    CHECK(dot.find("digraph prec {") == 0);
    CHECK(dot.find("\"A1\" -> \"R1\";") != std::string::npos);
    CHECK(dot.find("\"A2\" -> \"R1\";") != std::string::npos);
}
