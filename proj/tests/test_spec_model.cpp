#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "surfdyn/examples_gen.hpp"
#include "surfdyn/spec_model.hpp"

using namespace surfdyn;

namespace {

std::set<std::string> rule_codes(const ValidationReport& report) {
    std::set<std::string> rules;
    for (const auto& v : report.violations) rules.insert(v.rule_code);
    return rules;
}

// f1 in canonical serialized form, laid out by the documented rules: top-level
// keys basic_sets then complement_components, object keys in schema order,
// arrays sorted by id, two-space indent, LF endings, trailing newline.
const char* kF1Canonical = R"({
  "basic_sets": [
    {
      "id": "A1",
      "kind": "attractor",
      "bunches": [
        {
          "id": "A1.b1",
          "degree": 2
        }
      ]
    },
    {
      "id": "A2",
      "kind": "attractor",
      "bunches": [
        {
          "id": "A2.b1",
          "degree": 2
        }
      ]
    },
    {
      "id": "R1",
      "kind": "repeller",
      "bunches": [
        {
          "id": "R1.b1",
          "degree": 2
        },
        {
          "id": "R1.b2",
          "degree": 2
        }
      ]
    }
  ],
  "complement_components": [
    {
      "id": "V1",
      "attractor_bunch": "A1.b1",
      "repeller_bunch": "R1.b1"
    },
    {
      "id": "V2",
      "attractor_bunch": "A2.b1",
      "repeller_bunch": "R1.b2"
    }
  ]
}
)";

} // namespace

TEST_CASE("validate_spec accepts the named examples") {
    CHECK(validate_spec(example_f1()).valid);
    CHECK(validate_spec(example_f2()).valid);
    CHECK(validate_spec(example_pretzel()).valid);
}

TEST_CASE("validate_spec: V1 requires both kinds") {
    DiffeoSpec spec;
    spec.basic_sets = {BasicSet{"A1", BasicSetKind::Attractor, {{"A1.b1", 2}}},
                       BasicSet{"A2", BasicSetKind::Attractor, {{"A2.b1", 2}}}};
    spec.complement_components = {{"V1", "A1.b1", "A2.b1"}};
    const auto report = validate_spec(spec);
    CHECK_FALSE(report.valid);
    CHECK(rule_codes(report).count("V1") == 1);
}

TEST_CASE("validate_spec: V5 flags the 3/4 genus pair") {
    DiffeoSpec spec;
    spec.basic_sets = {BasicSet{"A1", BasicSetKind::Attractor, {{"A1.b1", 1}}},
                       BasicSet{"R1", BasicSetKind::Repeller, {{"R1.b1", 1}}}};
    spec.complement_components = {{"V1", "A1.b1", "R1.b1"}};
    const auto report = validate_spec(spec);
    CHECK_FALSE(report.valid);
    CHECK(rule_codes(report) == std::set<std::string>{"V5"});
    // The offending value 1 + 1/4 - 1/2 = 3/4 is carried in the message.
    bool carries_value = false;
    for (const auto& v : report.violations)
        if (v.message.find("3/4") != std::string::npos) carries_value = true;
    CHECK(carries_value);
}

TEST_CASE("validate_spec: integer negative genus is V6 alone") {
    // Ten bunches of degrees {1 x 8, 2 x 2}: h = 12, h - 2m = -8 = 0 (mod 4),
    // genus = 1 + 3 - 5 = -1.
    BasicSet attractor{"A1", BasicSetKind::Attractor, {}};
    for (int i = 0; i < 10; ++i)
        attractor.bunches.push_back({"A1.b" + std::to_string(i + 1), i < 8 ? 1 : 2});
    REQUIRE(attractor.degree_sum() == 12);
    DiffeoSpec spec;
    spec.basic_sets = {attractor,
                       BasicSet{"R1", BasicSetKind::Repeller, {{"R1.b1", 2}}}};
    spec.complement_components = {{"V1", "A1.b1", "R1.b1"}};
    const auto report = validate_spec(spec);
    CHECK_FALSE(report.valid);
    const auto rules = rule_codes(report);
    CHECK(rules.count("V6") == 1);
    CHECK(rules.count("V5") == 0);
}

TEST_CASE("validate_spec: pairing rules V2/V3 survive malformed references") {
    DiffeoSpec spec = example_pretzel();
    spec.complement_components[0].repeller_bunch = "nowhere";
    auto report = validate_spec(spec);
    CHECK_FALSE(report.valid);
    CHECK(rule_codes(report).count("V2") == 1);

    // Same-kind pairing: V3 (plus V2, the attractor bunch is hit twice).
    spec = example_pretzel();
    spec.complement_components[0].repeller_bunch = "A1.b1";
    report = validate_spec(spec);
    CHECK_FALSE(report.valid);
    CHECK(rule_codes(report).count("V3") == 1);
    CHECK(rule_codes(report).count("V2") == 1);
}

TEST_CASE("validate_spec: disconnected pairing graph is V4") {
    // Two pretzel-shaped islands with no component between them.
    DiffeoSpec spec;
    spec.basic_sets = {BasicSet{"A1", BasicSetKind::Attractor, {{"A1.b1", 2}}},
                       BasicSet{"R1", BasicSetKind::Repeller, {{"R1.b1", 2}}},
                       BasicSet{"A2", BasicSetKind::Attractor, {{"A2.b1", 2}}},
                       BasicSet{"R2", BasicSetKind::Repeller, {{"R2.b1", 2}}}};
    spec.complement_components = {{"V1", "A1.b1", "R1.b1"}, {"V2", "A2.b1", "R2.b1"}};
    const auto report = validate_spec(spec);
    CHECK_FALSE(report.valid);
    CHECK(rule_codes(report) == std::set<std::string>{"V4"});
}

TEST_CASE("validate_spec: V7 and V8") {
    DiffeoSpec spec = example_pretzel();
    spec.basic_sets[0].bunches[0].degree = 0;
    CHECK(rule_codes(validate_spec(spec)).count("V7") == 1);

    spec = example_f2();
    spec.basic_sets[1].bunches[1].id = "R1.b1"; // duplicate bunch id
    CHECK(rule_codes(validate_spec(spec)).count("V8") == 1);
}

TEST_CASE("validation is order-independent and deterministic") {
    DiffeoSpec spec = example_f1();
    spec.basic_sets[0].bunches[0].degree = 1;                 // break V5 on A1
    spec.complement_components[1].attractor_bunch = "ghost";  // break V2
    const auto baseline = validate_spec(spec).violations;
    REQUIRE_FALSE(baseline.empty());

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        DiffeoSpec shuffled = spec;
        std::shuffle(shuffled.basic_sets.begin(), shuffled.basic_sets.end(), rng);
        std::shuffle(shuffled.complement_components.begin(),
                     shuffled.complement_components.end(), rng);
        CHECK(validate_spec(shuffled).violations == baseline);
    }
}

TEST_CASE("parse_spec reads f2 and exposes the expected counts") {
    const auto spec = parse_spec(serialize_spec(example_f2()));
    CHECK(spec.basic_set_count() == 2);
    CHECK(spec.total_bunch_count() == 4);
    CHECK(spec.total_degree_sum() == 8);
}

TEST_CASE("serialize(parse(f1)) is byte-identical canonical text") {
    const std::string once = serialize_spec(example_f1());
    CHECK(once == kF1Canonical);
    CHECK(serialize_spec(parse_spec(once)) == once);
}

TEST_CASE("parse_spec rejects bad documents with line positions") {
    SUBCASE("syntax error") {
        try {
            parse_spec("{\n  \"basic_sets\": [\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line >= 2);
        }
    }
    SUBCASE("empty basic_sets") {
        CHECK_THROWS_AS(parse_spec(R"({"basic_sets":[],"complement_components":[]})"),
                        ParseError);
    }
    SUBCASE("unknown top-level key") {
        const char* text = "{\n  \"basic_sets\": [],\n  \"extra\": 1\n}";
        try {
            parse_spec(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("extra") != std::string::npos);
            CHECK(e.line == 3);
        }
    }
    SUBCASE("unknown nested key") {
        std::string text = serialize_spec(example_pretzel());
        text.replace(text.find("\"degree\""), 8, "\"weight\"");
        CHECK_THROWS_AS(parse_spec(text), ParseError);
    }
    SUBCASE("duplicate id") {
        std::string text = serialize_spec(example_f2());
        // Rename R1.b2 to R1.b1 in both its definition and its reference.
        std::size_t pos;
        while ((pos = text.find("R1.b2")) != std::string::npos)
            text.replace(pos, 5, "R1.b1");
        try {
            parse_spec(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
            CHECK(e.line > 1);
        }
    }
    SUBCASE("non-integer degree") {
        std::string text = serialize_spec(example_pretzel());
        text.replace(text.find("\"degree\": 2"), 11, "\"degree\": 2.5");
        CHECK_THROWS_AS(parse_spec(text), ParseError);
    }
    SUBCASE("bad kind") {
        std::string text = serialize_spec(example_pretzel());
        text.replace(text.find("attractor"), 9, "expander");
        CHECK_THROWS_AS(parse_spec(text), ParseError);
    }
}

TEST_CASE("round trip is the identity on generator output") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        const DiffeoSpec spec = random_valid_spec(cfg);
        CHECK(parse_spec(serialize_spec(spec)) == spec);
    }
}

TEST_CASE("valid specs have even m with m/2 components and enough edges") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        const DiffeoSpec spec = random_valid_spec(cfg);
        const long long m = spec.total_bunch_count();
        CHECK(m % 2 == 0);
        CHECK(m / 2 == static_cast<long long>(spec.complement_components.size()));
        CHECK(m / 2 >= spec.basic_set_count() - 1);
    }
}

TEST_CASE("require_valid throws with rule codes attached") {
    DiffeoSpec spec;
    spec.basic_sets = {BasicSet{"A1", BasicSetKind::Attractor, {{"A1.b1", 2}}}};
    spec.complement_components = {{"V1", "A1.b1", "A1.b1"}};
    CHECK_THROWS_AS(require_valid(spec), InvalidSpecError);
    try {
        require_valid(spec);
    } catch (const InvalidSpecError& e) {
        CHECK_FALSE(e.rule_codes.empty());
    }
}
