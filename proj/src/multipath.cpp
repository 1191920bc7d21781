#include "qhx/multipath.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qhx {

namespace {

// Union-find with rollback; no path compression so unions can be undone.
struct RollbackDsu {
    std::vector<std::size_t> parent, size;
    std::vector<std::size_t> trail;

    explicit RollbackDsu(std::size_t n) : parent(n), size(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }

    std::size_t find(std::size_t x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        trail.push_back(b);
        return true;
    }

    void rollback() {
        std::size_t b = trail.back();
        trail.pop_back();
        size[parent[b]] -= size[b];
        parent[b] = b;
    }
};

}  // namespace

bool is_multipath(const Quiver& g, const std::vector<std::string>& edge_ids) {
    std::set<std::string> subset(edge_ids.begin(), edge_ids.end());
    std::vector<int> in(g.vertex_count(), 0), out(g.vertex_count(), 0);
    RollbackDsu dsu(g.vertex_count());
    for (const auto& id : subset) {
        const Edge& e = g.edge(id);  // throws UnknownEdge
        std::size_t s = g.vertex_index(e.src), t = g.vertex_index(e.dst);
        if (s == t) return false;
        if (++out[s] > 1 || ++in[t] > 1) return false;
        if (!dsu.unite(s, t)) return false;  // undirected cycle forces an oriented one here
    }
    return true;
}

SimplicialComplex multipath_complex(const Quiver& g) {
    if (g.kind() == QuiverKind::undirected)
        throw KindViolation("multipath complex expects a directed kind; apply the doubling functor first");

    std::vector<std::string> order;
    for (const Edge& e : g.edges())
        if (!e.is_loop()) order.push_back(e.id);
    std::sort(order.begin(), order.end());

    std::vector<std::size_t> src(order.size()), dst(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Edge& e = g.edge(order[i]);
        src[i] = g.vertex_index(e.src);
        dst[i] = g.vertex_index(e.dst);
    }

    std::vector<int> in(g.vertex_count(), 0), out(g.vertex_count(), 0);
    RollbackDsu dsu(g.vertex_count());
    std::vector<std::vector<std::string>> faces;
    std::vector<std::string> current;
    faces.push_back({});  // the empty multipath

    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        for (std::size_t j = from; j < order.size(); ++j) {
            if (out[src[j]] > 0 || in[dst[j]] > 0) continue;
            if (dsu.find(src[j]) == dsu.find(dst[j])) continue;
            out[src[j]]++;
            in[dst[j]]++;
            dsu.unite(src[j], dst[j]);
            current.push_back(order[j]);
            faces.push_back(current);
            extend(j + 1);
            current.pop_back();
            dsu.rollback();
            out[src[j]]--;
            in[dst[j]]--;
        }
    };
    extend(0);
    return SimplicialComplex::from_faces(faces);
}

bool PathPoset::leq(std::size_t a, std::size_t b) const {
    return std::includes(elements[b].begin(), elements[b].end(), elements[a].begin(),
                         elements[a].end());
}

PathPoset path_poset(const Quiver& g) {
    SimplicialComplex x = multipath_complex(g);
    PathPoset poset;
    for (int k = -1; k <= x.dim(); ++k)
        for (const auto& f : x.faces(k)) poset.elements.push_back(x.face_labels(f));
    std::sort(poset.elements.begin(), poset.elements.end());
    return poset;
}

SimplicialComplex matching_complex(const Quiver& g) {
    if (g.kind() != QuiverKind::undirected)
        throw NotUndirected("matching complex expects an undirected graph");

    struct Orbit {
        std::string rep;
        std::size_t u, v;
    };
    std::vector<Orbit> orbits;
    for (const auto& rep : g.orbit_reps()) {
        const Edge& e = g.edge(rep);
        if (e.is_loop()) continue;  // a loop is adjacent to itself, never matchable
        orbits.push_back({rep, g.vertex_index(e.src), g.vertex_index(e.dst)});
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const Orbit& a, const Orbit& b) { return a.rep < b.rep; });

    std::vector<char> used(g.vertex_count(), 0);
    std::vector<std::vector<std::string>> faces;
    std::vector<std::string> current;
    faces.push_back({});

    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        for (std::size_t j = from; j < orbits.size(); ++j) {
            if (used[orbits[j].u] || used[orbits[j].v]) continue;
            used[orbits[j].u] = used[orbits[j].v] = 1;
            current.push_back(orbits[j].rep);
            faces.push_back(current);
            extend(j + 1);
            current.pop_back();
            used[orbits[j].u] = used[orbits[j].v] = 0;
        }
    };
    extend(0);
    return SimplicialComplex::from_faces(faces);
}

SimplicialMap induced_map(const MinorMorphism& m) {
    MinorValidation v = validate_minor(m);
    if (!v) throw InvalidMorphism("not a minor morphism: " + v.diagnostic);

    std::map<std::string, std::string> preimage;
    for (const auto& [e, img] : m.edge_map)
        if (img.kind == MinorImage::Kind::edge) preimage[img.id] = e;

    SimplicialComplex x_dom = multipath_complex(m.domain);
    SimplicialComplex x_cod = multipath_complex(m.codomain);
    std::map<std::string, std::string> vertex_map;
    for (const auto& l : x_cod.labels()) vertex_map[l] = preimage.at(l);
    return make_simplicial_map(std::move(x_cod), std::move(x_dom), std::move(vertex_map));
}

}  // namespace qhx
