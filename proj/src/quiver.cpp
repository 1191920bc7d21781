#include "qhx/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qhx {

std::string to_string(QuiverKind kind) {
    switch (kind) {
        case QuiverKind::quiver: return "quiver";
        case QuiverKind::digraph: return "digraph";
        case QuiverKind::undirected: return "graph";
    }
    return "?";
}

namespace {

// Union-find over vertex indices, used for component counting.
struct Dsu {
    std::vector<std::size_t> parent;

    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Quiver::Quiver(QuiverKind kind, std::string name, std::vector<std::string> vertices,
               std::vector<Edge> edges, std::map<std::string, std::string> reflection)
    : kind_(kind),
      name_(std::move(name)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      reflection_(std::move(reflection)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_index_.emplace(vertices_[i], i).second)
            throw KindViolation("duplicate vertex id '" + vertices_[i] + "'");
    }
    in_degree_.assign(vertices_.size(), 0);
    out_degree_.assign(vertices_.size(), 0);

    std::set<std::pair<std::string, std::string>> seen_pairs;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!edge_index_.emplace(e.id, i).second)
            throw KindViolation("duplicate edge id '" + e.id + "'");
        auto s = vertex_index_.find(e.src);
        auto t = vertex_index_.find(e.dst);
        if (s == vertex_index_.end())
            throw UnknownVertex("edge '" + e.id + "' has unknown source '" + e.src + "'");
        if (t == vertex_index_.end())
            throw UnknownVertex("edge '" + e.id + "' has unknown target '" + e.dst + "'");
        out_degree_[s->second]++;
        in_degree_[t->second]++;
        if (kind_ == QuiverKind::digraph && !seen_pairs.emplace(e.src, e.dst).second)
            throw KindViolation("parallel edge (" + e.src + ", " + e.dst + ") under kind digraph");
    }

    if (kind_ == QuiverKind::undirected) {
        if (reflection_.size() != edges_.size())
            throw KindViolation("reflection must be total on the edge set");
        for (const auto& [a, b] : reflection_) {
            auto ia = edge_index_.find(a);
            auto ib = edge_index_.find(b);
            if (ia == edge_index_.end() || ib == edge_index_.end())
                throw KindViolation("reflection mentions unknown edge");
            auto rb = reflection_.find(b);
            if (rb == reflection_.end() || rb->second != a)
                throw KindViolation("reflection is not an involution");
            const Edge& ea = edges_[ia->second];
            const Edge& eb = edges_[ib->second];
            if (ea.src != eb.dst || ea.dst != eb.src)
                throw KindViolation("reflection must swap source and target");
            if (a == b && !ea.is_loop())
                throw KindViolation("reflection fixes the non-loop edge '" + a + "'");
        }
    } else if (!reflection_.empty()) {
        throw KindViolation("reflection given for a directed kind");
    }
}

std::size_t Quiver::geometric_edge_count() const {
    if (kind_ != QuiverKind::undirected) return edges_.size();
    std::size_t orbits = 0;
    for (const auto& [a, b] : reflection_)
        if (a <= b) ++orbits;
    return orbits;
}

bool Quiver::has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }

bool Quiver::has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }

const Edge& Quiver::edge(const std::string& id) const { return edges_[edge_index(id)]; }

std::size_t Quiver::vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw UnknownVertex("unknown vertex '" + id + "'");
    return it->second;
}

std::size_t Quiver::edge_index(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw UnknownEdge("unknown edge '" + id + "'");
    return it->second;
}

const std::string& Quiver::reflected(const std::string& edge_id) const {
    if (kind_ != QuiverKind::undirected)
        throw NotUndirected("reflection queried on a directed quiver");
    edge_index(edge_id);
    return reflection_.at(edge_id);
}

const std::string& Quiver::orbit_rep(const std::string& edge_id) const {
    if (kind_ != QuiverKind::undirected) return edges_[edge_index(edge_id)].id;
    const std::string& partner = reflected(edge_id);
    return partner < edge_id ? partner : edges_[edge_index_.at(edge_id)].id;
}

std::vector<std::string> Quiver::orbit_reps() const {
    std::vector<std::string> reps;
    std::set<std::string> seen;
    for (const Edge& e : edges_) {
        const std::string& rep = orbit_rep(e.id);
        if (seen.insert(rep).second) reps.push_back(rep);
    }
    return reps;
}

int Quiver::in_degree(const std::string& v) const { return in_degree_[vertex_index(v)]; }

int Quiver::out_degree(const std::string& v) const { return out_degree_[vertex_index(v)]; }

std::size_t Quiver::component_count() const {
    Dsu dsu(vertices_.size());
    for (const Edge& e : edges_) dsu.unite(vertex_index_.at(e.src), vertex_index_.at(e.dst));
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < vertices_.size(); ++i) roots.insert(dsu.find(i));
    return roots.size();
}

long Quiver::genus() const {
    return static_cast<long>(geometric_edge_count()) - static_cast<long>(vertices_.size()) +
           static_cast<long>(component_count());
}

bool Quiver::same_structure(const Quiver& other) const {
    if (kind_ != other.kind_) return false;
    std::set<std::string> va(vertices_.begin(), vertices_.end());
    std::set<std::string> vb(other.vertices_.begin(), other.vertices_.end());
    if (va != vb) return false;
    auto key = [](const Edge& e) { return std::tie(e.id, e.src, e.dst); };
    std::set<std::tuple<const std::string&, const std::string&, const std::string&>> ea, eb;
    for (const Edge& e : edges_) ea.insert(key(e));
    for (const Edge& e : other.edges_) eb.insert(key(e));
    if (ea != eb) return false;
    return reflection_ == other.reflection_;
}

Quiver Quiver::renamed(std::string new_name) const {
    return Quiver(kind_, std::move(new_name), vertices_, edges_, reflection_);
}

Quiver disjoint_union(const Quiver& a, const Quiver& b) {
    bool a_undir = a.kind() == QuiverKind::undirected;
    bool b_undir = b.kind() == QuiverKind::undirected;
    if (a_undir != b_undir)
        throw KindViolation("disjoint union of undirected and directed quivers");
    QuiverKind kind;
    if (a_undir)
        kind = QuiverKind::undirected;
    else if (a.kind() == QuiverKind::digraph && b.kind() == QuiverKind::digraph)
        kind = QuiverKind::digraph;
    else
        kind = QuiverKind::quiver;

    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::map<std::string, std::string> reflection;
    auto absorb = [&](const Quiver& g, const std::string& prefix) {
        for (const auto& v : g.vertex_ids()) vertices.push_back(prefix + v);
        for (const Edge& e : g.edges())
            edges.push_back({prefix + e.id, prefix + e.src, prefix + e.dst});
        if (g.kind() == QuiverKind::undirected)
            for (const Edge& e : g.edges())
                reflection[prefix + e.id] = prefix + g.reflected(e.id);
    };
    absorb(a, "0.");
    absorb(b, "1.");
    return Quiver(kind, a.name() + "+" + b.name(), std::move(vertices), std::move(edges),
                  std::move(reflection));
}

}  // namespace qhx
