#include "surfdyn/examples_gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "portable_rng.hpp"

namespace surfdyn {

namespace {

BasicSet make_set(std::string id, BasicSetKind kind, const std::vector<long long>& degrees) {
    BasicSet bs;
    bs.id = id;
    bs.kind = kind;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        bs.bunches.push_back({id + ".b" + std::to_string(i + 1), degrees[i]});
    return bs;
}

} // namespace

DiffeoSpec example_f1() {
    DiffeoSpec spec;
    spec.basic_sets.push_back(make_set("A1", BasicSetKind::Attractor, {2}));
    spec.basic_sets.push_back(make_set("A2", BasicSetKind::Attractor, {2}));
    spec.basic_sets.push_back(make_set("R1", BasicSetKind::Repeller, {2, 2}));
    spec.complement_components.push_back({"V1", "A1.b1", "R1.b1"});
    spec.complement_components.push_back({"V2", "A2.b1", "R1.b2"});
    return spec;
}

DiffeoSpec example_f2() {
    DiffeoSpec spec;
    spec.basic_sets.push_back(make_set("A1", BasicSetKind::Attractor, {2, 2}));
    spec.basic_sets.push_back(make_set("R1", BasicSetKind::Repeller, {2, 2}));
    spec.complement_components.push_back({"V1", "A1.b1", "R1.b1"});
    spec.complement_components.push_back({"V2", "A1.b2", "R1.b2"});
    return spec;
}

DiffeoSpec example_pretzel() {
    DiffeoSpec spec;
    spec.basic_sets.push_back(make_set("A1", BasicSetKind::Attractor, {2}));
    spec.basic_sets.push_back(make_set("R1", BasicSetKind::Repeller, {2}));
    spec.complement_components.push_back({"V1", "A1.b1", "R1.b1"});
    return spec;
}

namespace {

std::string padded(const char* prefix, long long n, int width) {
    std::string digits = std::to_string(n);
    if (static_cast<int>(digits.size()) < width)
        digits.insert(0, width - digits.size(), '0');
    return prefix + digits;
}

} // namespace

DiffeoSpec generate_for_genus(long long genus) {
    if (genus < 2)
        throw std::invalid_argument(
            "genus must be >= 2: the sphere and the torus do not admit diffeomorphisms of "
            "this class");

    const int width = static_cast<int>(std::to_string(genus).size());
    DiffeoSpec spec;
    long long attractors = 0, repellers = 0;
    std::vector<std::string> path_ids;
    for (long long pos = 1; pos <= genus; ++pos) {
        const bool is_attractor = pos % 2 == 1;
        const std::string id = is_attractor ? padded("A", ++attractors, width)
                                            : padded("R", ++repellers, width);
        const bool interior = pos != 1 && pos != genus;
        spec.basic_sets.push_back(make_set(
            id, is_attractor ? BasicSetKind::Attractor : BasicSetKind::Repeller,
            interior ? std::vector<long long>{2, 2} : std::vector<long long>{2}));
        path_ids.push_back(id);
    }
    // Component i joins path position i and i+1; interior sets spend bunch b1
    // on the previous component and b2 on the next one.
    for (long long i = 0; i + 1 < genus; ++i) {
        const std::string& left = path_ids[i];
        const std::string& right = path_ids[i + 1];
        const std::string left_bunch = left + (i == 0 ? ".b1" : ".b2");
        const std::string right_bunch = right + ".b1";
        const bool left_is_attractor = i % 2 == 0;
        spec.complement_components.push_back(
            {padded("V", i + 1, width),
             left_is_attractor ? left_bunch : right_bunch,
             left_is_attractor ? right_bunch : left_bunch});
    }
    return canonicalized(std::move(spec));
}

namespace {

struct MultigraphEdge {
    int attractor = 0; // index into attractor vertex list
    int repeller = 0;
};

// Random connected bipartite multigraph with parts of size a and r and
// maximum vertex degree cap. Returns false when the attach order dead-ends.
bool try_build_multigraph(detail::PortableRng& rng, int a, int r, int cap,
                          std::vector<MultigraphEdge>& edges) {
    edges.clear();
    std::vector<int> deg_a(a, 0), deg_r(r, 0);
    std::vector<int> attached_a, attached_r, loose_a, loose_r;
    for (int i = 1; i < a; ++i) loose_a.push_back(i);
    for (int i = 1; i < r; ++i) loose_r.push_back(i);
    attached_a.push_back(0);
    attached_r.push_back(0);
    edges.push_back({0, 0});
    deg_a[0] = deg_r[0] = 1;

    auto capacity_targets = [&](const std::vector<int>& attached, const std::vector<int>& deg) {
        std::vector<int> ok;
        for (int v : attached)
            if (deg[v] < cap) ok.push_back(v);
        return ok;
    };

    while (!loose_a.empty() || !loose_r.empty()) {
        const std::vector<int> targets_for_a = capacity_targets(attached_r, deg_r);
        const std::vector<int> targets_for_r = capacity_targets(attached_a, deg_a);
        const bool can_a = !loose_a.empty() && !targets_for_a.empty();
        const bool can_r = !loose_r.empty() && !targets_for_r.empty();
        if (!can_a && !can_r) return false;

        bool attach_attractor;
        if (can_a && can_r)
            attach_attractor =
                rng.below(loose_a.size() + loose_r.size()) < loose_a.size();
        else
            attach_attractor = can_a;

        auto& loose = attach_attractor ? loose_a : loose_r;
        const auto& targets = attach_attractor ? targets_for_a : targets_for_r;
        const std::size_t pick = rng.below(loose.size());
        const int v = loose[pick];
        loose.erase(loose.begin() + static_cast<std::ptrdiff_t>(pick));
        const int w = targets[rng.below(targets.size())];
        if (attach_attractor) {
            edges.push_back({v, w});
            attached_a.push_back(v);
            ++deg_a[v];
            ++deg_r[w];
        } else {
            edges.push_back({w, v});
            attached_r.push_back(v);
            ++deg_a[w];
            ++deg_r[v];
        }
    }

    // Extra edges beyond the spanning tree turn into torus summands. One
    // coin flip per basic set keeps a healthy fraction of cyclic graphs.
    for (int i = 0; i < a + r; ++i) {
        if (rng.below(2) != 0) continue;
        std::vector<int> from, to;
        for (int x = 0; x < a; ++x)
            if (deg_a[x] < cap) from.push_back(x);
        for (int x = 0; x < r; ++x)
            if (deg_r[x] < cap) to.push_back(x);
        if (from.empty() || to.empty()) break;
        const int x = from[rng.below(from.size())];
        const int y = to[rng.below(to.size())];
        edges.push_back({x, y});
        ++deg_a[x];
        ++deg_r[y];
    }
    return true;
}

} // namespace

DiffeoSpec random_valid_spec(const GeneratorConfig& cfg) {
    if (cfg.max_basic_sets < 1 || cfg.max_bunches_per_set < 1 || cfg.max_degree < 2)
        throw std::invalid_argument(
            "generator bounds must satisfy max_basic_sets >= 1, max_bunches_per_set >= 1, "
            "max_degree >= 2");
    if (cfg.max_basic_sets < 2)
        throw std::invalid_argument(
            "max_basic_sets is too small: a valid spec needs an attractor and a repeller");

    detail::PortableRng rng(cfg.seed);
    const int cap = cfg.max_bunches_per_set;

    // Feasible (k, attractor-count) splits: a bipartite tree with parts a, r
    // and degree cap exists iff each part can absorb the other.
    std::vector<std::pair<int, int>> splits;
    for (int k = 2; k <= cfg.max_basic_sets; ++k)
        for (int a = 1; a < k; ++a) {
            const int r = k - a;
            if (r <= a * (cap - 1) + 1 && a <= r * (cap - 1) + 1) splits.emplace_back(k, a);
        }
    if (splits.empty())
        throw std::invalid_argument("generator bounds admit no connected pairing graph");
    const auto [k, a] = splits[rng.below(splits.size())];
    const int r = k - a;

    std::vector<MultigraphEdge> edges;
    bool built = false;
    for (int attempt = 0; attempt < 64 && !built; ++attempt)
        built = try_build_multigraph(rng, a, r, cap, edges);
    if (!built)
        throw std::invalid_argument("generator bounds admit no connected pairing graph");

    // Bunch counts are the multigraph degrees; bunch degrees are sampled in
    // [1, max_degree] and then repaired so every basic set has an integer
    // non-negative genus. A +1 fixes parity once; +2 steps preserve it.
    // Repair prefers bunches with room below max_degree but may exceed the
    // bound when none is left.
    const int width = 2;
    DiffeoSpec spec;
    std::vector<std::vector<std::string>> bunch_names_a(a), bunch_names_r(r);
    auto build_sets = [&](int count, BasicSetKind kind, const char* prefix,
                          std::vector<std::vector<std::string>>& names) {
        for (int i = 0; i < count; ++i) {
            long long m = 0;
            for (const auto& e : edges)
                if ((kind == BasicSetKind::Attractor ? e.attractor : e.repeller) == i) ++m;
            std::vector<long long> degrees;
            long long h = 0;
            for (long long j = 0; j < m; ++j) {
                degrees.push_back(rng.range(1, cfg.max_degree));
                h += degrees.back();
            }
            while (true) {
                const long long d = h - 2 * m;
                if (d % 2 == 0 && ((d % 4) + 4) % 4 == 0 && d >= -4) break;
                const long long inc = (d % 2 != 0) ? 1 : 2;
                std::vector<std::size_t> roomy;
                for (std::size_t j = 0; j < degrees.size(); ++j)
                    if (degrees[j] + inc <= cfg.max_degree) roomy.push_back(j);
                const std::size_t target = roomy.empty()
                                               ? rng.below(degrees.size())
                                               : roomy[rng.below(roomy.size())];
                degrees[target] += inc;
                h += inc;
            }
            BasicSet bs = make_set(padded(prefix, i + 1, width), kind, degrees);
            for (const auto& b : bs.bunches) names[i].push_back(b.id);
            spec.basic_sets.push_back(std::move(bs));
        }
    };
    build_sets(a, BasicSetKind::Attractor, "A", bunch_names_a);
    build_sets(r, BasicSetKind::Repeller, "R", bunch_names_r);

    std::vector<std::size_t> next_a(a, 0), next_r(r, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        spec.complement_components.push_back(
            {padded("V", static_cast<long long>(i) + 1, width),
             bunch_names_a[e.attractor][next_a[e.attractor]++],
             bunch_names_r[e.repeller][next_r[e.repeller]++]});
    }

    return canonicalized(std::move(spec));
}

} // namespace surfdyn
