#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qhx/errors.hpp"

namespace qhx {

/// quiver    — finite directed multigraph, loops and parallel edges allowed
/// digraph   — quiver in which each edge is determined by its (source, target) pair
/// undirected — quiver with a reflection r on edges (s∘r = t); an undirected
///              edge is a reflection orbit
enum class QuiverKind { quiver, digraph, undirected };

std::string to_string(QuiverKind kind);

struct Edge {
    std::string id;
    std::string src;
    std::string dst;

    bool operator==(const Edge&) const = default;
    bool is_loop() const { return src == dst; }
};

/// Immutable graph value. All mutating "operations" (contraction, deletion,
/// blow-up, ...) return new quivers; instances are safe to share across
/// threads.
class Quiver {
public:
    /// Validates the structure and throws on violations:
    ///   UnknownVertex  — an edge endpoint is not a declared vertex
    ///   KindViolation  — duplicate identifiers, a parallel edge under kind
    ///                    digraph, or an ill-formed reflection
    Quiver(QuiverKind kind, std::string name, std::vector<std::string> vertices,
           std::vector<Edge> edges, std::map<std::string, std::string> reflection = {});

    QuiverKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& vertex_ids() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    /// Number of undirected edges (reflection orbits) for kind undirected,
    /// plain edge count otherwise.
    std::size_t geometric_edge_count() const;

    bool has_vertex(const std::string& id) const;
    bool has_edge(const std::string& id) const;
    const Edge& edge(const std::string& id) const;        // throws UnknownEdge
    std::size_t vertex_index(const std::string& id) const;  // throws UnknownVertex
    std::size_t edge_index(const std::string& id) const;    // throws UnknownEdge

    /// Reflection partner of an edge; only valid for kind undirected.
    const std::string& reflected(const std::string& edge_id) const;
    /// Canonical representative of the reflection orbit of `edge_id`
    /// (lexicographically smaller of the pair). Identity for directed kinds.
    const std::string& orbit_rep(const std::string& edge_id) const;
    /// Orbit representatives in first-occurrence edge order.
    std::vector<std::string> orbit_reps() const;

    int in_degree(const std::string& v) const;
    int out_degree(const std::string& v) const;

    /// Connected components of the geometric realization (edge direction and
    /// reflection ignored). Isolated vertices count.
    std::size_t component_count() const;
    bool is_connected() const { return component_count() <= 1; }

    /// First Betti number of the geometric realization:
    /// |E| − |V| + #components, undirected edges counted once per orbit.
    long genus() const;

    /// Structural equality: same kind and the same vertex/edge/reflection
    /// sets, insensitive to declaration order and to the name.
    bool same_structure(const Quiver& other) const;

    Quiver renamed(std::string new_name) const;

private:
    QuiverKind kind_;
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, std::string> reflection_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
    std::vector<int> in_degree_, out_degree_;
};

/// Disjoint union; vertex and edge identifiers are namespaced with "0." and
/// "1." so the label sets of derived complexes are disjoint by construction.
/// Mixing undirected with directed kinds is rejected (KindViolation); the
/// union of two digraphs is a digraph, otherwise the weaker kind wins.
Quiver disjoint_union(const Quiver& a, const Quiver& b);

}  // namespace qhx
