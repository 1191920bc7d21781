#include "qhx/blowup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qhx/functors.hpp"
#include "qhx/multipath.hpp"
#include "qhx/predicates.hpp"
#include "qhx/simplicial.hpp"

namespace qhx {

namespace {

BlowupResult unchanged(const Quiver& g) {
    BlowupResult out{g, {}, {}};
    for (const Edge& e : g.edges()) out.edge_bijection[e.id] = e.id;
    return out;
}

}  // namespace

BlowupResult blow_up_at(const Quiver& g, const std::string& v) {
    if (g.kind() == QuiverKind::undirected)
        throw KindViolation("blow-up expects a directed kind");
    g.vertex_index(v);  // throws UnknownVertex

    if (g.in_degree(v) == 0 || g.out_degree(v) == 0) return unchanged(g);

    const std::string vin = v + ".in", vout = v + ".out";
    std::vector<std::string> vertices;
    for (const auto& u : g.vertex_ids()) {
        if (u == v) {
            vertices.push_back(vin);
            vertices.push_back(vout);
        } else {
            vertices.push_back(u);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e.src == v && e.dst == v)
            edges.push_back({e.id, vout, vin});
        else if (e.dst == v)
            edges.push_back({e.id, e.src, vin});
        else if (e.src == v)
            edges.push_back({e.id, vout, e.dst});
        else
            edges.push_back(e);
    }

    BlowupResult out{Quiver(g.kind(), g.name(), std::move(vertices), std::move(edges)), {}, {}};
    for (const Edge& e : g.edges()) out.edge_bijection[e.id] = e.id;
    out.split_vertices[v] = {vin, vout};
    return out;
}

BlowupResult blow_up(const Quiver& g) {
    BlowupResult acc = unchanged(g);
    // Splitting v never changes the degrees of other vertices, so one pass
    // over the original vertex set reaches the fixed point.
    for (const auto& v : g.vertex_ids()) {
        BlowupResult step = blow_up_at(acc.result, v);
        acc.result = step.result;
        for (const auto& [w, pair] : step.split_vertices) acc.split_vertices[w] = pair;
    }
    return acc;
}

bool verify_blowup_theorem(const Quiver& g) {
    if (g.kind() == QuiverKind::undirected)
        throw KindViolation("blow-up theorem applies to directed kinds");
    if (has_oriented_cycle(g))
        throw HasOrientedCycle("blow-up theorem needs an input without oriented cycles");

    SimplicialComplex x = multipath_complex(g);
    BlowupResult b = blow_up(g);
    Quiver iota = underlying_graph(b.result);
    SimplicialComplex m = matching_complex(iota);

    std::map<std::string, std::string> bijection;
    for (const auto& l : x.labels()) bijection[l] = iota.orbit_rep(b.edge_bijection.at(l));
    return canonical_iso_check(x, m, bijection);
}

DynamicalDecomposition dynamical_modules(const Quiver& g) {
    if (g.kind() == QuiverKind::undirected)
        throw KindViolation("dynamical decomposition applies to directed kinds");
    if (!g.is_connected()) throw Disconnected("dynamical decomposition needs a connected input");
    if (has_oriented_cycle(g))
        throw HasOrientedCycle("dynamical decomposition needs an input without oriented cycles");

    BlowupResult b = blow_up(g);
    const Quiver& bg = b.result;

    std::vector<std::size_t> parent(bg.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : bg.edges())
        parent[find(bg.vertex_index(e.src))] = find(bg.vertex_index(e.dst));

    // Edge groups per blow-up component, ordered by smallest member edge id.
    std::map<std::size_t, std::set<std::string>> groups;
    for (const Edge& e : bg.edges()) groups[find(bg.vertex_index(e.src))].insert(e.id);
    std::vector<std::set<std::string>> ordered;
    for (auto& [root, ids] : groups) ordered.push_back(std::move(ids));
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });

    DynamicalDecomposition out;
    for (std::size_t mi = 0; mi < ordered.size(); ++mi) {
        const std::set<std::string>& ids = ordered[mi];
        std::set<std::string> module_vertices;
        std::vector<Edge> module_edges;
        for (const Edge& e : g.edges())
            if (ids.count(e.id)) {
                module_edges.push_back(e);
                module_vertices.insert(e.src);
                module_vertices.insert(e.dst);
            }
        std::vector<std::string> vertex_list;
        for (const auto& u : g.vertex_ids())
            if (module_vertices.count(u)) vertex_list.push_back(u);
        out.modules.emplace_back(g.kind(), g.name() + ".M" + std::to_string(mi),
                                 std::move(vertex_list), std::move(module_edges));

        std::set<std::string> complement_vertices;
        for (const Edge& e : g.edges())
            if (!ids.count(e.id)) {
                complement_vertices.insert(e.src);
                complement_vertices.insert(e.dst);
            }
        std::vector<std::string> boundary;
        for (const auto& u : module_vertices)
            if (complement_vertices.count(u)) boundary.push_back(u);
        out.boundaries.push_back(std::move(boundary));
    }
    return out;
}

bool verify_module_join(const Quiver& g) {
    DynamicalDecomposition dec = dynamical_modules(g);
    SimplicialComplex joined;  // {∅}, the join identity
    for (const Quiver& module : dec.modules)
        joined = join(joined, multipath_complex(module), /*auto_prefix=*/false);

    SimplicialComplex x = multipath_complex(g);
    std::map<std::string, std::string> identity;
    for (const auto& l : x.labels()) identity[l] = l;
    return canonical_iso_check(x, joined, identity);
}

}  // namespace qhx
