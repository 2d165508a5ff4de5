#include "surfdyn/stability.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace surfdyn {

PrecGraph build_prec_graph(const DiffeoSpec& spec) {
    require_valid(spec);
    const DiffeoSpec canon = canonicalized(spec);

    std::map<std::string, std::string> owner;
    PrecGraph g;
    for (const auto& bs : canon.basic_sets) {
        g.vertices.push_back(bs.id);
        for (const auto& b : bs.bunches) owner.emplace(b.id, bs.id);
    }
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& c : canon.complement_components)
        pairs.emplace(owner.at(c.attractor_bunch), owner.at(c.repeller_bunch));
    for (const auto& [from, to] : pairs) g.edges.push_back({from, to});
    return g;
}

bool detect_cycles(const PrecGraph& g) {
    std::map<std::string, int> index;
    for (const auto& v : g.vertices) index.emplace(v, static_cast<int>(index.size()));
    // Edges may name vertices missing from the list; give them slots too.
    for (const auto& e : g.edges) {
        index.emplace(e.from, static_cast<int>(index.size()));
        index.emplace(e.to, static_cast<int>(index.size()));
    }
    const int n = static_cast<int>(index.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) {
        if (e.from == e.to) return true; // self-loop
        adj[index.at(e.from)].push_back(index.at(e.to));
    }

    // Iterative three-color DFS; a back edge to an in-progress vertex closes
    // a directed cycle.
    enum : char { White, Gray, Black };
    std::vector<char> color(n, White);
    std::vector<std::pair<int, std::size_t>> stack;
    for (int start = 0; start < n; ++start) {
        if (color[start] != White) continue;
        color[start] = Gray;
        stack.push_back({start, 0});
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj[v].size()) {
                const int w = adj[v][next++];
                if (color[w] == Gray) return true;
                if (color[w] == White) {
                    color[w] = Gray;
                    stack.push_back({w, 0});
                }
            } else {
                color[v] = Black;
                stack.pop_back();
            }
        }
    }
    return false;
}

StabilityVerdict stability_verdict(const DiffeoSpec& spec) {
    const PrecGraph g = build_prec_graph(spec);
    StabilityVerdict verdict;
    verdict.has_cycles = detect_cycles(g);
    verdict.omega_stable = !verdict.has_cycles;
    // The non-wandering set consists of one-dimensional attractors and
    // repellers, so it contains no periodic sink or source; a structurally
    // stable surface diffeomorphism with a one-dimensional attractor or
    // repeller must have one.
    verdict.structurally_stable = false;
    if (verdict.omega_stable)
        verdict.reason =
            "the prec relation between basic sets has no cycles, so the diffeomorphism is "
            "Omega-stable; it is not structurally stable because the non-wandering set "
            "consists of one-dimensional attractors and repellers and contains no periodic "
            "sink or source point";
    else
        verdict.reason = "the prec relation between basic sets contains a cycle";
    return verdict;
}

std::string StabilityVerdict::to_json() const {
    nlohmann::ordered_json root;
    root["omega_stable"] = omega_stable;
    root["structurally_stable"] = structurally_stable;
    root["has_cycles"] = has_cycles;
    root["reason"] = reason;
    return root.dump(2) + "\n";
}

std::string to_dot(const PrecGraph& g) {
    std::ostringstream out;
    out << "digraph prec {\n";
    for (const auto& v : g.vertices) out << "  \"" << v << "\";\n";
    for (const auto& e : g.edges)
        out << "  \"" << e.from << "\" -> \"" << e.to << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace surfdyn
