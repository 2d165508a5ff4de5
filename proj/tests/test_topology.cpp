#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "surfdyn/examples_gen.hpp"
#include "surfdyn/topology.hpp"

using namespace surfdyn;

TEST_CASE("saddle_index") {
    CHECK(saddle_index(4) == Rational(-1));
    CHECK(saddle_index(2) == Rational(0)); // the artificially split line case
    CHECK(saddle_index(1) == Rational(1, 2));
    CHECK(saddle_index(3) == Rational(-1, 2));
    CHECK_THROWS_AS(saddle_index(0), std::domain_error);
    CHECK_THROWS_AS(saddle_index(-2), std::domain_error);
}

TEST_CASE("euler_char_closed_from_bunches") {
    CHECK(euler_char_closed_from_bunches(1, 2) == 0);
    CHECK(euler_char_closed_from_bunches(2, 4) == 0);
    // One bunch of degree 6: the index route gives 1 - 6/2 = -2.
    CHECK(euler_char_closed_from_bunches(1, 6) == -2);
    CHECK(Rational(euler_char_closed_from_bunches(1, 6)) == saddle_index(6));
    CHECK_THROWS_AS(euler_char_closed_from_bunches(1, 1), std::domain_error);
    CHECK_THROWS_AS(euler_char_closed_from_bunches(1, 4), std::domain_error);
    CHECK_THROWS_AS(euler_char_closed_from_bunches(0, 4), std::domain_error);
}

TEST_CASE("euler_char_with_boundary") {
    CHECK(euler_char_with_boundary(0, 1) == -1); // torus minus one disk
    CHECK(euler_char_with_boundary(2, 0) == 2);  // closed sphere unchanged
    CHECK(euler_char_with_boundary(0, 2) == -2); // f2's attractor neighborhood
}

TEST_CASE("basic_set_genus") {
    const BasicSet one_deg2{"A", BasicSetKind::Attractor, {{"A.b1", 2}}};
    CHECK(basic_set_genus(one_deg2) == SubsurfaceProfile{1, 1});

    const BasicSet two_deg2{"R", BasicSetKind::Repeller, {{"R.b1", 2}, {"R.b2", 2}}};
    CHECK(basic_set_genus(two_deg2) == SubsurfaceProfile{1, 2});

    // chi = -2, so g = (2 - chi)/2 = 2.
    const BasicSet one_deg6{"A", BasicSetKind::Attractor, {{"A.b1", 6}}};
    CHECK(basic_set_genus(one_deg6) == SubsurfaceProfile{2, 1});

    const BasicSet bad{"A", BasicSetKind::Attractor, {{"A.b1", 1}}};
    try {
        basic_set_genus(bad);
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("3/4") != std::string::npos);
    }
}

TEST_CASE("build_pairing_graph shapes of the named examples") {
    const auto f1 = build_pairing_graph(example_f1());
    CHECK(f1.vertices.size() == 3);
    CHECK(f1.edges.size() == 2);

    const auto f2 = build_pairing_graph(example_f2());
    CHECK(f2.vertices.size() == 2);
    CHECK(f2.edges.size() == 2);
    CHECK(f2.edges[0].attractor_id == f2.edges[1].attractor_id); // parallel pair
    CHECK(f2.edges[0].repeller_id == f2.edges[1].repeller_id);

    const auto pretzel = build_pairing_graph(example_pretzel());
    CHECK(pretzel.vertices.size() == 2);
    CHECK(pretzel.edges.size() == 1);
}

TEST_CASE("cycle_rank") {
    CHECK(cycle_rank(build_pairing_graph(example_f1())) == 0);
    CHECK(cycle_rank(build_pairing_graph(example_f2())) == 1);
    CHECK(cycle_rank(build_pairing_graph(example_pretzel())) == 0); // single edge K2

    PairingGraph disconnected;
    disconnected.vertices = {{"A", BasicSetKind::Attractor, 1},
                             {"R", BasicSetKind::Repeller, 1}};
    CHECK_THROWS_AS(cycle_rank(disconnected), std::invalid_argument);
}

TEST_CASE("surgery_trace on the named examples") {
    const auto f2_steps = surgery_trace(example_f2(), {"V1", "V2"});
    REQUIRE(f2_steps.size() == 2);
    CHECK(f2_steps[0] == SurgeryStep{"V1", SurgeryClass::TorusSummand});
    CHECK(f2_steps[1] == SurgeryStep{"V2", SurgeryClass::Split});

    for (const auto& order :
         {std::vector<std::string>{"V1", "V2"}, std::vector<std::string>{"V2", "V1"}}) {
        const auto f1_steps = surgery_trace(example_f1(), order);
        for (const auto& step : f1_steps) CHECK(step.classification == SurgeryClass::Split);
    }

    const auto pretzel_steps = surgery_trace(example_pretzel(), {"V1"});
    REQUIRE(pretzel_steps.size() == 1);
    CHECK(pretzel_steps[0].classification == SurgeryClass::Split);

    CHECK_THROWS_AS(surgery_trace(example_f2(), {"V1"}), std::invalid_argument);
    CHECK_THROWS_AS(surgery_trace(example_f2(), {"V1", "V1"}), std::invalid_argument);
    CHECK_THROWS_AS(surgery_trace(example_f2(), {"V1", "V3"}), std::invalid_argument);
}

TEST_CASE("surgery_trace agrees with the brute-force bridge oracle") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        const DiffeoSpec spec = random_valid_spec(cfg);
        const PairingGraph graph = build_pairing_graph(spec);
        const auto mg = oracles::to_multigraph(graph);

        std::vector<std::string> order;
        std::vector<std::size_t> order_index;
        for (std::size_t i = 0; i < graph.edges.size(); ++i) order_index.push_back(i);
        std::shuffle(order_index.begin(), order_index.end(), rng);
        for (std::size_t i : order_index) order.push_back(graph.edges[i].component_id);

        const auto steps = surgery_trace(spec, order);
        std::set<std::size_t> cut;
        for (std::size_t s = 0; s < steps.size(); ++s) {
            const bool bridge = oracles::is_bridge_now(mg, order_index[s], cut);
            CHECK(steps[s].classification ==
                  (bridge ? SurgeryClass::Split : SurgeryClass::TorusSummand));
            cut.insert(order_index[s]);
        }
    }
}

TEST_CASE("decompose matches the genera of the named examples") {
    const auto f1 = decompose(example_f1());
    REQUIRE(f1.summands.size() == 3);
    for (const auto& s : f1.summands) CHECK(s.genus == 1);
    CHECK(f1.torus_count == 0);
    CHECK(f1.total_genus == 3);

    const auto f2 = decompose(example_f2());
    REQUIRE(f2.summands.size() == 2);
    for (const auto& s : f2.summands) CHECK(s.genus == 1);
    CHECK(f2.torus_count == 1);
    CHECK(f2.total_genus == 3);

    const auto pretzel = decompose(example_pretzel());
    REQUIRE(pretzel.summands.size() == 2);
    for (const auto& s : pretzel.summands) CHECK(s.genus == 1);
    CHECK(pretzel.torus_count == 0);
    CHECK(pretzel.total_genus == 2);
}

TEST_CASE("total_genus equals decomposition totals on the examples") {
    CHECK(total_genus(example_f1()) == 3);      // h = 8
    CHECK(total_genus(example_f2()) == 3);      // h = 8
    CHECK(total_genus(example_pretzel()) == 2); // h = 4
    for (const DiffeoSpec& spec : {example_f1(), example_f2(), example_pretzel()}) {
        const auto d = decompose(spec);
        long long sum = d.torus_count;
        for (const auto& s : d.summands) sum += s.genus;
        CHECK(sum == total_genus(spec));
    }
}

TEST_CASE("operations reject invalid specs") {
    DiffeoSpec spec = example_pretzel();
    spec.basic_sets[0].bunches[0].degree = 1;
    CHECK_THROWS_AS(decompose(spec), InvalidSpecError);
    CHECK_THROWS_AS(total_genus(spec), InvalidSpecError);
    CHECK_THROWS_AS(build_pairing_graph(spec), InvalidSpecError);
    CHECK_THROWS_AS(surgery_trace(spec), InvalidSpecError);
}

TEST_CASE("corollary identity and cycle-rank oracles over random specs") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        const DiffeoSpec spec = random_valid_spec(cfg);
        const auto d = decompose(spec);

        long long genus_sum = 0;
        for (const auto& s : d.summands) genus_sum += s.genus;
        CHECK(genus_sum + d.torus_count == total_genus(spec));

        // The algebraic identity behind the corollary, symbolically:
        // sum(1 + h_i/4 - m_i/2) + m/2 - k + 1 = 1 + h/4.
        Rational lhs(0);
        for (const auto& bs : spec.basic_sets)
            lhs += Rational(1) + Rational(bs.degree_sum(), 4) -
                   Rational(bs.bunch_count(), 2);
        lhs += Rational(spec.total_bunch_count(), 2) - Rational(spec.basic_set_count()) + 1;
        CHECK(lhs == Rational(1) + Rational(spec.total_degree_sum(), 4));

        // Cycle rank against two independent oracles.
        const auto graph = build_pairing_graph(spec);
        const auto mg = oracles::to_multigraph(graph);
        CHECK(cycle_rank(graph) == oracles::spanning_tree_extra_edges(mg));
        CHECK(cycle_rank(graph) == oracles::sequential_non_bridge_count(mg));

        // Sphere and torus never occur.
        CHECK(total_genus(spec) >= 2);
    }
}

TEST_CASE("surgery step counts are order-invariant") {
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        const DiffeoSpec spec = random_valid_spec(cfg);
        const long long k = spec.basic_set_count();
        const long long l = cycle_rank(build_pairing_graph(spec));
        std::vector<std::string> order;
        for (const auto& c : spec.complement_components) order.push_back(c.id);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            const auto steps = surgery_trace(spec, order);
            long long splits = 0, tori = 0;
            for (const auto& s : steps)
                (s.classification == SurgeryClass::Split ? splits : tori)++;
            CHECK(splits == k - 1);
            CHECK(tori == l);
        }
    }
}

TEST_CASE("Poincare-Hopf closure per basic set") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        const DiffeoSpec spec = random_valid_spec(cfg);
        for (const auto& bs : spec.basic_sets) {
            const auto profile = basic_set_genus(bs);
            Rational index_sum(0);
            for (const auto& b : bs.bunches)
                index_sum += Rational(1) - Rational(b.degree, 2);
            CHECK(Rational(2) - 2 * profile.genus == index_sum);
        }
    }
}

TEST_CASE("decomposition JSON and DOT exports") {
    const auto d = decompose(example_f2());
    const std::string with_trace = d.to_json(true);
    CHECK(with_trace.find("\"torus_count\": 1") != std::string::npos);
    CHECK(with_trace.find("\"total_genus\": 3") != std::string::npos);
    CHECK(with_trace.find("torus_summand") != std::string::npos);
    const std::string without = d.to_json(false);
    CHECK(without.find("trace") == std::string::npos);

    const std::string dot = to_dot(build_pairing_graph(example_f1()));
    CHECK(dot.find("graph pairing {") == 0);
    CHECK(dot.find("\"A1\" [label=\"A1:attractor:1\"]") != std::string::npos);
    CHECK(dot.find("\"R1\" [label=\"R1:repeller:1\"]") != std::string::npos);
    CHECK(dot.find("\"A1\" -- \"R1\" [label=\"V1\"]") != std::string::npos);
}
