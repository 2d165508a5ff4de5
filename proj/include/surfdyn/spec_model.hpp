#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "surfdyn/errors.hpp"

namespace surfdyn {

enum class BasicSetKind { Attractor, Repeller };

const char* to_string(BasicSetKind kind);

// One bunch of a one-dimensional basic set. The degree is the number of
// boundary periodic points whose invariant manifolds form the bunch.
struct Bunch {
    std::string id;
    long long degree = 0;

    bool operator==(const Bunch&) const = default;
};

// A connected periodic component of a one-dimensional basic set, together
// with its bunches.
struct BasicSet {
    std::string id;
    BasicSetKind kind = BasicSetKind::Attractor;
    std::vector<Bunch> bunches;

    // m: number of bunches.
    long long bunch_count() const { return static_cast<long long>(bunches.size()); }
    // h: sum of bunch degrees.
    long long degree_sum() const;

    bool operator==(const BasicSet&) const = default;
};

// A connected component of the complement of all basic sets, recorded by the
// two bunches accessible from inside it: one attractor bunch and one
// repeller bunch. Several components may join the same pair of basic sets.
struct ComplementComponent {
    std::string id;
    std::string attractor_bunch;
    std::string repeller_bunch;

    bool operator==(const ComplementComponent&) const = default;
};

// Combinatorial model of a surface A-diffeomorphism whose non-wandering set
// consists of one-dimensional attractors and repellers.
struct DiffeoSpec {
    std::vector<BasicSet> basic_sets;
    std::vector<ComplementComponent> complement_components;

    // k: number of basic sets.
    long long basic_set_count() const { return static_cast<long long>(basic_sets.size()); }
    // m: bunches over all basic sets.
    long long total_bunch_count() const;
    // h: bunch degrees over all basic sets.
    long long total_degree_sum() const;

    const BasicSet* find_basic_set(std::string_view id) const;

    bool operator==(const DiffeoSpec&) const = default;
};

struct Violation {
    std::string rule_code; // "V1".."V8"
    std::string message;
    std::vector<std::string> ids;

    bool operator==(const Violation&) const = default;
    auto operator<=>(const Violation&) const = default;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;

    std::string to_json() const;
};

// Validation rules:
//   V1 at least one attractor and at least one repeller
//   V2 every bunch is referenced by exactly one complement component
//   V3 component references cross kinds (attractor slot -> attractor bunch,
//      repeller slot -> repeller bunch)
//   V4 the pairing graph is connected
//   V5 h - 2m = 0 (mod 4) for every basic set (integer genus)
//   V6 1 + h/4 - m/2 >= 0 for every basic set
//   V7 every bunch degree >= 1
//   V8 ids unique (basic sets, bunches across the spec, components)
//
// Violations are reported sorted by (rule_code, ids); the set of violations
// does not depend on the order of basic sets or components.
ValidationReport validate_spec(const DiffeoSpec& spec);

// Throws InvalidSpecError when validate_spec reports violations.
void require_valid(const DiffeoSpec& spec);

// Spec file format (JSON, UTF-8):
//   {"basic_sets":[{"id":"A1","kind":"attractor",
//                   "bunches":[{"id":"A1.b1","degree":2}]},...],
//    "complement_components":[{"id":"V1","attractor_bunch":"A1.b1",
//                              "repeller_bunch":"R1.b1"},...]}
// Unknown keys, empty arrays, bad types and duplicate ids are parse errors.
DiffeoSpec parse_spec(std::string_view text);

// Canonical serialization: keys in the order shown above, every array sorted
// by id, two-space indent, LF line endings, trailing newline.
std::string serialize_spec(const DiffeoSpec& spec);

// Copy of the spec with basic sets, bunches and components sorted by id.
DiffeoSpec canonicalized(DiffeoSpec spec);

} // namespace surfdyn
