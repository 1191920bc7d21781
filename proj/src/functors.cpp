#include "qhx/functors.hpp"

#include <set>

namespace qhx {

Quiver underlying_graph(const Quiver& g) {
    std::vector<Edge> edges;
    std::map<std::string, std::string> reflection;
    std::set<std::string> used;
    for (const Edge& e : g.edges()) used.insert(e.id);

    for (const Edge& e : g.edges()) {
        edges.push_back(e);
        if (e.is_loop()) {
            reflection[e.id] = e.id;
            continue;
        }
        std::string partner = e.id + "~";
        while (used.count(partner)) partner += "~";
        used.insert(partner);
        edges.push_back({partner, e.dst, e.src});
        reflection[e.id] = partner;
        reflection[partner] = e.id;
    }
    return Quiver(QuiverKind::undirected, g.name(), g.vertex_ids(), std::move(edges),
                  std::move(reflection));
}

Quiver doubled_quiver(const Quiver& g) {
    if (g.kind() != QuiverKind::undirected)
        throw NotUndirected("doubled_quiver expects an undirected graph");
    return Quiver(QuiverKind::quiver, g.name(), g.vertex_ids(), g.edges());
}

Quiver cone(const ConeSpec& spec) {
    const Quiver base =
        spec.base.kind() == QuiverKind::undirected ? doubled_quiver(spec.base) : spec.base;
    if (base.has_vertex(spec.apex))
        throw ApexCollision("apex '" + spec.apex + "' is already a base vertex");

    std::vector<std::string> vertices = base.vertex_ids();
    vertices.push_back(spec.apex);
    std::vector<Edge> edges = base.edges();
    for (const auto& v : base.vertex_ids()) {
        auto it = spec.orientation.find(v);
        if (it == spec.orientation.end())
            throw BadParams("cone orientation missing for vertex '" + v + "'");
        std::string id = spec.apex + ":" + v;
        if (it->second == ConeDirection::toward_apex)
            edges.push_back({std::move(id), v, spec.apex});
        else
            edges.push_back({std::move(id), spec.apex, v});
    }

    QuiverKind kind = base.kind() == QuiverKind::digraph ? QuiverKind::digraph : QuiverKind::quiver;
    return Quiver(kind, "cone(" + base.name() + ")", std::move(vertices), std::move(edges));
}

}  // namespace qhx
