#include "surfdyn/spec_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "surfdyn/rational.hpp"

namespace surfdyn {

const char* to_string(BasicSetKind kind) {
    return kind == BasicSetKind::Attractor ? "attractor" : "repeller";
}

long long BasicSet::degree_sum() const {
    long long h = 0;
    for (const auto& b : bunches) h += b.degree;
    return h;
}

long long DiffeoSpec::total_bunch_count() const {
    long long m = 0;
    for (const auto& bs : basic_sets) m += bs.bunch_count();
    return m;
}

long long DiffeoSpec::total_degree_sum() const {
    long long h = 0;
    for (const auto& bs : basic_sets) h += bs.degree_sum();
    return h;
}

const BasicSet* DiffeoSpec::find_basic_set(std::string_view id) const {
    for (const auto& bs : basic_sets)
        if (bs.id == id) return &bs;
    return nullptr;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void add(std::vector<Violation>& out, std::string rule, std::string message,
         std::vector<std::string> ids) {
    out.push_back({std::move(rule), std::move(message), std::move(ids)});
}

} // namespace

ValidationReport validate_spec(const DiffeoSpec& spec) {
    std::vector<Violation> v;

    // V8: id uniqueness (basic sets; bunches across the whole spec so that
    // component references are unambiguous; components).
    std::set<std::string> set_ids, bunch_ids, comp_ids, flagged;
    auto check_unique = [&](std::set<std::string>& seen, const std::string& id,
                            const char* what) {
        if (!seen.insert(id).second && flagged.insert(id).second)
            add(v, "V8", std::string("duplicate ") + what + " id \"" + id + "\"", {id});
    };
    for (const auto& bs : spec.basic_sets) {
        check_unique(set_ids, bs.id, "basic set");
        for (const auto& b : bs.bunches) check_unique(bunch_ids, b.id, "bunch");
    }
    for (const auto& c : spec.complement_components)
        check_unique(comp_ids, c.id, "component");

    // V7: positive degrees.
    for (const auto& bs : spec.basic_sets)
        for (const auto& b : bs.bunches)
            if (b.degree < 1)
                add(v, "V7",
                    "bunch \"" + b.id + "\" has degree " + std::to_string(b.degree) +
                        " (must be >= 1)",
                    {b.id});

    // V1: both kinds present.
    bool has_attractor = false, has_repeller = false;
    for (const auto& bs : spec.basic_sets) {
        (bs.kind == BasicSetKind::Attractor ? has_attractor : has_repeller) = true;
    }
    if (!has_attractor || !has_repeller)
        add(v, "V1", "spec must contain at least one attractor and at least one repeller",
            {});

    // V5/V6: integer, non-negative genus per basic set.
    for (const auto& bs : spec.basic_sets) {
        const long long m = bs.bunch_count();
        const long long h = bs.degree_sum();
        if (m == 0) continue; // unreachable through parse; nothing to report
        const Rational genus = Rational(1) + Rational(h, 4) - Rational(m, 2);
        if (((h - 2 * m) % 4 + 4) % 4 != 0)
            add(v, "V5",
                "basic set \"" + bs.id + "\": m=" + std::to_string(m) +
                    ", h=" + std::to_string(h) + " gives non-integer genus " +
                    to_string(genus),
                {bs.id});
        if (genus < 0)
            add(v, "V6",
                "basic set \"" + bs.id + "\": genus " + to_string(genus) + " is negative",
                {bs.id});
    }

    // V2/V3: bunch pairing. References that do not resolve are V2; resolved
    // references into the wrong kind are V3.
    std::map<std::string, const BasicSet*> owner;
    for (const auto& bs : spec.basic_sets)
        for (const auto& b : bs.bunches) {
            if (!owner.emplace(b.id, &bs).second) owner[b.id] = nullptr; // ambiguous (V8)
        }
    std::map<std::string, long long> reference_count;
    auto check_reference = [&](const ComplementComponent& c, const std::string& ref,
                               BasicSetKind expected) {
        auto it = owner.find(ref);
        if (it == owner.end()) {
            add(v, "V2",
                "component \"" + c.id + "\" references unknown bunch \"" + ref + "\"",
                {c.id, ref});
            return;
        }
        ++reference_count[ref];
        if (it->second != nullptr && it->second->kind != expected)
            add(v, "V3",
                "component \"" + c.id + "\": bunch \"" + ref + "\" belongs to " +
                    (expected == BasicSetKind::Attractor ? "a repeller"
                                                         : "an attractor") +
                    " but fills the " + to_string(expected) + " slot",
                {c.id, ref});
    };
    for (const auto& c : spec.complement_components) {
        check_reference(c, c.attractor_bunch, BasicSetKind::Attractor);
        check_reference(c, c.repeller_bunch, BasicSetKind::Repeller);
    }
    for (const auto& bs : spec.basic_sets)
        for (const auto& b : bs.bunches) {
            const long long n = reference_count[b.id];
            if (n != 1)
                add(v, "V2",
                    "bunch \"" + b.id + "\" is referenced by " + std::to_string(n) +
                        " components (expected exactly 1)",
                    {b.id});
        }

    // V4: pairing graph connected. Only components with both references
    // resolved contribute edges.
    if (spec.basic_sets.size() > 1) {
        std::map<std::string, int> index;
        for (const auto& bs : spec.basic_sets)
            index.emplace(bs.id, static_cast<int>(index.size()));
        UnionFind uf(static_cast<int>(index.size()));
        for (const auto& c : spec.complement_components) {
            auto a = owner.find(c.attractor_bunch);
            auto r = owner.find(c.repeller_bunch);
            if (a == owner.end() || r == owner.end()) continue;
            if (a->second == nullptr || r->second == nullptr) continue;
            uf.unite(index[a->second->id], index[r->second->id]);
        }
        std::string root_id = spec.basic_sets.front().id;
        for (const auto& bs : spec.basic_sets)
            root_id = std::min(root_id, bs.id);
        const int root = uf.find(index[root_id]);
        std::vector<std::string> unreachable;
        for (const auto& [id, i] : index)
            if (uf.find(i) != root) unreachable.push_back(id);
        if (!unreachable.empty()) {
            std::sort(unreachable.begin(), unreachable.end());
            std::string msg = "pairing graph is disconnected; not reachable from \"" +
                              root_id + "\":";
            for (const auto& id : unreachable) msg += " \"" + id + "\"";
            add(v, "V4", msg, unreachable);
        }
    }

    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return ValidationReport{v.empty(), std::move(v)};
}

void require_valid(const DiffeoSpec& spec) {
    ValidationReport report = validate_spec(spec);
    if (report.valid) return;
    std::set<std::string> rules;
    for (const auto& violation : report.violations) rules.insert(violation.rule_code);
    std::ostringstream msg;
    msg << "spec fails validation (";
    bool first = true;
    for (const auto& rule : rules) {
        if (!first) msg << ", ";
        msg << rule;
        first = false;
    }
    msg << "): " << report.violations.front().message;
    if (report.violations.size() > 1)
        msg << " (+" << report.violations.size() - 1 << " more)";
    throw InvalidSpecError(msg.str(), {rules.begin(), rules.end()});
}

DiffeoSpec canonicalized(DiffeoSpec spec) {
    auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
    for (auto& bs : spec.basic_sets) std::sort(bs.bunches.begin(), bs.bunches.end(), by_id);
    std::sort(spec.basic_sets.begin(), spec.basic_sets.end(), by_id);
    std::sort(spec.complement_components.begin(), spec.complement_components.end(), by_id);
    return spec;
}

} // namespace surfdyn
