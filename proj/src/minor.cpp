#include "qhx/minor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qhx {

MinorMorphism identity_morphism(const Quiver& g) {
    MinorMorphism m{g, g, {}, {}};
    for (const auto& v : g.vertex_ids()) m.vertex_map[v] = v;
    for (const Edge& e : g.edges()) m.edge_map[e.id] = MinorImage::to_edge(e.id);
    return m;
}

std::pair<Quiver, MinorMorphism> contract_edge(const Quiver& g, const std::string& edge_id) {
    const Edge& e = g.edge(edge_id);
    if (e.is_loop())
        throw SelfLoopContraction("cannot contract self-loop '" + edge_id + "'");

    const std::string winner = std::min(e.src, e.dst);
    const std::string loser = std::max(e.src, e.dst);
    std::set<std::string> removed = {edge_id};
    if (g.kind() == QuiverKind::undirected) removed.insert(g.reflected(edge_id));

    std::vector<std::string> vertices;
    for (const auto& v : g.vertex_ids())
        if (v != loser) vertices.push_back(v);

    auto remap = [&](const std::string& v) { return v == loser ? winner : v; };

    std::vector<Edge> edges;
    std::map<std::string, std::string> reflection;
    std::set<std::pair<std::string, std::string>> pairs;
    bool parallel = false;
    for (const Edge& f : g.edges()) {
        if (removed.count(f.id)) continue;
        Edge nf{f.id, remap(f.src), remap(f.dst)};
        if (!pairs.emplace(nf.src, nf.dst).second) parallel = true;
        edges.push_back(std::move(nf));
    }
    if (g.kind() == QuiverKind::undirected)
        for (const Edge& f : g.edges())
            if (!removed.count(f.id)) reflection[f.id] = g.reflected(f.id);

    QuiverKind kind = g.kind();
    if (kind == QuiverKind::digraph && parallel) kind = QuiverKind::quiver;

    Quiver contracted(kind, g.name() + "/" + edge_id, std::move(vertices), std::move(edges),
                      std::move(reflection));

    MinorMorphism m{g, contracted, {}, {}};
    for (const auto& v : g.vertex_ids()) m.vertex_map[v] = remap(v);
    for (const Edge& f : g.edges())
        m.edge_map[f.id] =
            removed.count(f.id) ? MinorImage::to_vertex(winner) : MinorImage::to_edge(f.id);
    return {std::move(contracted), std::move(m)};
}

std::pair<Quiver, MinorMorphism> delete_edge(const Quiver& g, const std::string& edge_id) {
    g.edge(edge_id);  // throws UnknownEdge
    std::set<std::string> removed = {edge_id};
    if (g.kind() == QuiverKind::undirected) removed.insert(g.reflected(edge_id));

    std::vector<Edge> edges;
    std::map<std::string, std::string> reflection;
    for (const Edge& f : g.edges())
        if (!removed.count(f.id)) edges.push_back(f);
    if (g.kind() == QuiverKind::undirected)
        for (const Edge& f : g.edges())
            if (!removed.count(f.id)) reflection[f.id] = g.reflected(f.id);

    Quiver deleted(g.kind(), g.name() + "-" + edge_id, g.vertex_ids(), std::move(edges),
                   std::move(reflection));

    MinorMorphism m{g, deleted, {}, {}};
    for (const auto& v : g.vertex_ids()) m.vertex_map[v] = v;
    for (const Edge& f : g.edges())
        m.edge_map[f.id] = removed.count(f.id) ? MinorImage::star() : MinorImage::to_edge(f.id);
    return {std::move(deleted), std::move(m)};
}

namespace {

// Tree test for a vertex fiber: connected and |edges| = |vertices| − 1, with
// edges counted as reflection orbits when the quiver is undirected.
bool fiber_is_tree(const Quiver& domain, const std::set<std::string>& verts,
                   const std::set<std::string>& edge_ids) {
    if (verts.empty()) return false;
    std::map<std::string, std::size_t> index;
    for (const auto& v : verts) index.emplace(v, index.size());
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::set<std::string> geom;  // orbit representatives within the fiber
    for (const auto& id : edge_ids) {
        const Edge& e = domain.edge(id);
        if (!verts.count(e.src) || !verts.count(e.dst)) return false;
        if (domain.kind() == QuiverKind::undirected) {
            if (!edge_ids.count(domain.reflected(id))) return false;
            geom.insert(domain.orbit_rep(id));
        } else {
            geom.insert(id);
        }
        parent[find(index.at(e.src))] = find(index.at(e.dst));
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < verts.size(); ++i) roots.insert(find(i));
    return roots.size() == 1 && geom.size() == verts.size() - 1;
}

}  // namespace

MinorValidation validate_minor(const MinorMorphism& m, bool strict) {
    const Quiver& dom = m.domain;
    const Quiver& cod = m.codomain;

    bool dom_undir = dom.kind() == QuiverKind::undirected;
    bool cod_undir = cod.kind() == QuiverKind::undirected;
    if (dom_undir != cod_undir) return {false, "kind mismatch between domain and codomain"};

    // Condition 1: φ(V(domain)) = V(codomain).
    if (m.vertex_map.size() != dom.vertex_count() || m.edge_map.size() != dom.edge_count())
        return {false, "vertex condition violated"};
    std::set<std::string> image;
    for (const auto& v : dom.vertex_ids()) {
        auto it = m.vertex_map.find(v);
        if (it == m.vertex_map.end() || !cod.has_vertex(it->second))
            return {false, "vertex condition violated"};
        image.insert(it->second);
    }
    if (image.size() != cod.vertex_count()) return {false, "vertex condition violated"};

    // Condition 2: endpoint compatibility of every edge image.
    for (const Edge& e : dom.edges()) {
        auto it = m.edge_map.find(e.id);
        if (it == m.edge_map.end()) return {false, "edge condition violated"};
        const MinorImage& img = it->second;
        const std::string& pv = m.vertex_map.at(e.src);
        const std::string& pw = m.vertex_map.at(e.dst);
        switch (img.kind) {
            case MinorImage::Kind::star:
                break;
            case MinorImage::Kind::vertex:
                if (!cod.has_vertex(img.id) || pv != img.id || pw != img.id)
                    return {false, "edge condition violated"};
                break;
            case MinorImage::Kind::edge: {
                if (!cod.has_edge(img.id)) return {false, "edge condition violated"};
                const Edge& f = cod.edge(img.id);
                if (f.src != pv || f.dst != pw) return {false, "edge condition violated"};
                break;
            }
        }
        if (dom_undir) {
            auto rit = m.edge_map.find(dom.reflected(e.id));
            if (rit == m.edge_map.end()) return {false, "reflection equivariance violated"};
            MinorImage expected = img;
            if (img.kind == MinorImage::Kind::edge) expected.id = cod.reflected(img.id);
            if (rit->second != expected) return {false, "reflection equivariance violated"};
        }
    }

    // Condition 3: bijection between φ⁻¹(E(codomain)) and E(codomain).
    std::set<std::string> edge_image;
    for (const auto& [id, img] : m.edge_map) {
        (void)id;
        if (img.kind != MinorImage::Kind::edge) continue;
        if (!edge_image.insert(img.id).second)
            return {false, "edge-preimage bijection violated"};
    }
    if (edge_image.size() != cod.edge_count())
        return {false, "edge-preimage bijection violated"};

    // Condition 4: each vertex fiber is a directed tree.
    for (const auto& u : cod.vertex_ids()) {
        std::set<std::string> verts, fiber_edges;
        for (const auto& [v, img] : m.vertex_map)
            if (img == u) verts.insert(v);
        for (const auto& [e, img] : m.edge_map)
            if (img.kind == MinorImage::Kind::vertex && img.id == u) fiber_edges.insert(e);
        if (!fiber_is_tree(dom, verts, fiber_edges))
            return {false, "fiber not a directed tree"};
    }

    if (strict && dom.is_connected() && !cod.is_connected())
        return {false, "deletion disconnects the realization (strict mode)"};

    return {true, ""};
}

MinorMorphism compose_minor(const MinorMorphism& f, const MinorMorphism& g) {
    if (!f.codomain.same_structure(g.domain))
        throw DomainMismatch("codomain of first morphism differs from domain of second");

    MinorMorphism out{f.domain, g.codomain, {}, {}};
    for (const auto& [v, mid] : f.vertex_map) out.vertex_map[v] = g.vertex_map.at(mid);
    for (const auto& [e, img] : f.edge_map) {
        switch (img.kind) {
            case MinorImage::Kind::star:
                out.edge_map[e] = MinorImage::star();
                break;
            case MinorImage::Kind::vertex:
                out.edge_map[e] = MinorImage::to_vertex(g.vertex_map.at(img.id));
                break;
            case MinorImage::Kind::edge:
                out.edge_map[e] = g.edge_map.at(img.id);
                break;
        }
    }
    return out;
}

}  // namespace qhx
