#include "surfdyn/topology.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace surfdyn {

const char* to_string(SurgeryClass c) {
    return c == SurgeryClass::Split ? "split" : "torus_summand";
}

Rational saddle_index(long long separatrix_count) {
    if (separatrix_count < 1)
        throw std::domain_error("separatrix count must be >= 1, got " +
                                std::to_string(separatrix_count));
    return Rational(1) - Rational(separatrix_count, 2);
}

namespace {

Rational genus_rational(long long m, long long h) {
    return Rational(1) + Rational(h, 4) - Rational(m, 2);
}

[[noreturn]] void genus_fail(const std::string& who, long long m, long long h) {
    const Rational g = genus_rational(m, h);
    throw std::domain_error(who + ": m=" + std::to_string(m) + ", h=" + std::to_string(h) +
                            " gives genus " + to_string(g) +
                            ", not a non-negative integer");
}

} // namespace

long long euler_char_closed_from_bunches(long long m, long long h) {
    if (m < 1 || h < 1)
        throw std::domain_error("bunch count and degree sum must be >= 1");
    if (((h - 2 * m) % 4 + 4) % 4 != 0) genus_fail("euler_char_closed_from_bunches", m, h);
    return m - h / 2;
}

long long euler_char_with_boundary(long long chi_closed, long long boundary_curves) {
    return chi_closed - boundary_curves;
}

SubsurfaceProfile basic_set_genus(const BasicSet& bs) {
    const long long m = bs.bunch_count();
    const long long h = bs.degree_sum();
    if (m < 1) throw std::domain_error("basic set \"" + bs.id + "\" has no bunches");
    for (const auto& b : bs.bunches)
        if (b.degree < 1)
            throw std::domain_error("bunch \"" + b.id + "\" has degree " +
                                    std::to_string(b.degree));

    const Rational genus = genus_rational(m, h);
    if (genus.denominator() != 1 || genus < 0) genus_fail("basic set \"" + bs.id + "\"", m, h);

    // Two independent routes to the Euler characteristic of the capped
    // surface: the closed formula m - h/2 and the saddle-index sum.
    const long long chi = euler_char_closed_from_bunches(m, h);
    Rational chi_by_indices(0);
    for (const auto& b : bs.bunches) chi_by_indices += saddle_index(b.degree);
    if (chi_by_indices != Rational(chi) || Rational(chi) != Rational(2) - 2 * genus)
        throw std::logic_error("Euler characteristic routes disagree for basic set \"" +
                               bs.id + "\"");

    return SubsurfaceProfile{genus.numerator(), m};
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

std::map<std::string, int> vertex_index(const PairingGraph& g) {
    std::map<std::string, int> index;
    for (const auto& v : g.vertices) index.emplace(v.id, static_cast<int>(index.size()));
    return index;
}

bool is_connected(const PairingGraph& g) {
    if (g.vertices.size() <= 1) return true;
    auto index = vertex_index(g);
    UnionFind uf(static_cast<int>(g.vertices.size()));
    for (const auto& e : g.edges) uf.unite(index.at(e.attractor_id), index.at(e.repeller_id));
    const int root = uf.find(0);
    for (int i = 1; i < static_cast<int>(g.vertices.size()); ++i)
        if (uf.find(i) != root) return false;
    return true;
}

} // namespace

PairingGraph build_pairing_graph(const DiffeoSpec& spec) {
    require_valid(spec);
    const DiffeoSpec canon = canonicalized(spec);

    std::map<std::string, std::string> owner; // bunch id -> basic set id
    PairingGraph g;
    for (const auto& bs : canon.basic_sets) {
        g.vertices.push_back({bs.id, bs.kind, basic_set_genus(bs).genus});
        for (const auto& b : bs.bunches) owner.emplace(b.id, bs.id);
    }
    for (const auto& c : canon.complement_components)
        g.edges.push_back({c.id, owner.at(c.attractor_bunch), owner.at(c.repeller_bunch)});
    return g;
}

long long cycle_rank(const PairingGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("pairing graph is disconnected");
    return static_cast<long long>(g.edges.size()) -
           static_cast<long long>(g.vertices.size()) + 1;
}

namespace {

std::vector<SurgeryStep> trace_for_graph(const PairingGraph& g,
                                         const std::vector<std::string>& order) {
    std::map<std::string, const PairingEdge*> edges_by_id;
    for (const auto& e : g.edges) edges_by_id.emplace(e.component_id, &e);
    if (order.size() != g.edges.size())
        throw std::invalid_argument("surgery order must list every component exactly once");
    std::set<std::string> seen;
    for (const auto& id : order) {
        if (!edges_by_id.count(id))
            throw std::invalid_argument("surgery order names unknown component \"" + id +
                                        "\"");
        if (!seen.insert(id).second)
            throw std::invalid_argument("surgery order repeats component \"" + id + "\"");
    }

    const auto index = vertex_index(g);
    std::set<std::string> cut;
    std::vector<SurgeryStep> steps;
    steps.reserve(order.size());
    for (const auto& id : order) {
        const PairingEdge& e = *edges_by_id.at(id);
        // Bridge test on the not-yet-cut subgraph: connect everything except
        // this edge and ask whether its endpoints still meet.
        UnionFind uf(static_cast<int>(g.vertices.size()));
        for (const auto& other : g.edges) {
            if (cut.count(other.component_id) || other.component_id == id) continue;
            uf.unite(index.at(other.attractor_id), index.at(other.repeller_id));
        }
        const bool bridge =
            uf.find(index.at(e.attractor_id)) != uf.find(index.at(e.repeller_id));
        steps.push_back({id, bridge ? SurgeryClass::Split : SurgeryClass::TorusSummand});
        cut.insert(id);
    }
    return steps;
}

} // namespace

std::vector<SurgeryStep> surgery_trace(const DiffeoSpec& spec,
                                       const std::vector<std::string>& order) {
    return trace_for_graph(build_pairing_graph(spec), order);
}

std::vector<SurgeryStep> surgery_trace(const DiffeoSpec& spec) {
    const PairingGraph g = build_pairing_graph(spec);
    std::vector<std::string> order;
    order.reserve(g.edges.size());
    for (const auto& e : g.edges) order.push_back(e.component_id);
    std::sort(order.begin(), order.end());
    return trace_for_graph(g, order);
}

Decomposition decompose(const DiffeoSpec& spec) {
    const PairingGraph g = build_pairing_graph(spec);

    Decomposition d;
    Rational genus_sum(0);
    for (const auto& v : g.vertices) {
        d.summands.push_back({v.id, v.genus});
        genus_sum += v.genus;
    }
    d.torus_count = cycle_rank(g);
    std::vector<std::string> order;
    for (const auto& e : g.edges) order.push_back(e.component_id);
    std::sort(order.begin(), order.end());
    d.trace = trace_for_graph(g, order);

    // Theorem-level consistency: l = m/2 - k + 1 and sum(g_i) + l = 1 + h/4.
    const Rational expected_tori = Rational(spec.total_bunch_count(), 2) -
                                   Rational(spec.basic_set_count()) + Rational(1);
    const Rational expected_total = Rational(1) + Rational(spec.total_degree_sum(), 4);
    if (Rational(d.torus_count) != expected_tori ||
        genus_sum + d.torus_count != expected_total)
        throw std::logic_error("decomposition does not satisfy the genus identities");
    d.total_genus = (genus_sum + d.torus_count).numerator();
    return d;
}

long long total_genus(const DiffeoSpec& spec) {
    require_valid(spec);
    const Rational g = Rational(1) + Rational(spec.total_degree_sum(), 4);
    if (g.denominator() != 1)
        throw std::logic_error("total degree sum of a valid spec must be divisible by 4");
    return g.numerator();
}

std::string Decomposition::to_json(bool with_trace) const {
    nlohmann::ordered_json root;
    root["summands"] = nlohmann::ordered_json::array();
    for (const auto& s : summands) {
        nlohmann::ordered_json js;
        js["basic_set"] = s.basic_set_id;
        js["genus"] = s.genus;
        root["summands"].push_back(std::move(js));
    }
    root["torus_count"] = torus_count;
    root["total_genus"] = total_genus;
    if (with_trace) {
        root["trace"] = nlohmann::ordered_json::array();
        for (const auto& step : trace) {
            nlohmann::ordered_json jt;
            jt["component"] = step.component_id;
            jt["step"] = to_string(step.classification);
            root["trace"].push_back(std::move(jt));
        }
    }
    return root.dump(2) + "\n";
}

std::string to_dot(const PairingGraph& g) {
    std::ostringstream out;
    out << "graph pairing {\n";
    for (const auto& v : g.vertices)
        out << "  \"" << v.id << "\" [label=\"" << v.id << ":" << to_string(v.kind) << ":"
            << v.genus << "\"];\n";
    for (const auto& e : g.edges)
        out << "  \"" << e.attractor_id << "\" -- \"" << e.repeller_id << "\" [label=\""
            << e.component_id << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace surfdyn
