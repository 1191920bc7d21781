#pragma once

#include <map>
#include <string>
#include <utility>

#include "qhx/quiver.hpp"

namespace qhx {

/// Image of a domain edge under a minor morphism: the deleted-edge marker ⋆,
/// a codomain vertex (contracted edge), or a codomain edge.
struct MinorImage {
    enum class Kind { star, vertex, edge };

    Kind kind = Kind::star;
    std::string id;  // empty for star

    static MinorImage star() { return {Kind::star, ""}; }
    static MinorImage to_vertex(std::string v) { return {Kind::vertex, std::move(v)}; }
    static MinorImage to_edge(std::string e) { return {Kind::edge, std::move(e)}; }

    bool operator==(const MinorImage&) const = default;
};

/// Total map V(domain) ⊔ E(domain) ⊔ {⋆} → V(codomain) ⊔ E(codomain) ⊔ {⋆}
/// with ⋆ ↦ ⋆ implicit. Vertices always map to vertices.
struct MinorMorphism {
    Quiver domain;
    Quiver codomain;
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, MinorImage> edge_map;
};

struct MinorValidation {
    bool ok = false;
    std::string diagnostic;  // names the first violated condition

    explicit operator bool() const { return ok; }
};

MinorMorphism identity_morphism(const Quiver& g);

/// Contraction G/e with its witness morphism G → G/e. The merged vertex keeps
/// the lexicographically smaller endpoint identifier. For undirected graphs
/// both e and r(e) are contracted. A digraph is demoted to kind quiver when
/// the contraction creates parallel edges.
/// Throws UnknownEdge, SelfLoopContraction.
std::pair<Quiver, MinorMorphism> contract_edge(const Quiver& g, const std::string& edge_id);

/// Deletion G∖e with its witness morphism (e ↦ ⋆). Disconnecting deletions
/// are permitted; see validate_minor's strict mode for the stricter rule.
/// Throws UnknownEdge.
std::pair<Quiver, MinorMorphism> delete_edge(const Quiver& g, const std::string& edge_id);

/// Checks the four minor-morphism conditions in order and reports the first
/// violation:
///   1. vertex condition (vertices map onto the codomain vertex set)
///   2. edge condition (endpoint compatibility of every edge image)
///   3. edge-preimage bijection
///   4. every vertex fiber is a directed tree
/// For undirected quivers, reflection equivariance is checked alongside the
/// edge condition and fibers are measured in undirected edges.
/// With strict = true, a connected domain must map to a connected codomain
/// (the restriction on deletions used for genus-bounded chains).
MinorValidation validate_minor(const MinorMorphism& m, bool strict = false);

/// Set composition; requires codomain(f) and domain(g) structurally equal.
/// Throws DomainMismatch.
MinorMorphism compose_minor(const MinorMorphism& f, const MinorMorphism& g);

}  // namespace qhx
