#pragma once

#include <string>
#include <vector>

#include "qhx/minor.hpp"
#include "qhx/quiver.hpp"
#include "qhx/simplicial.hpp"

namespace qhx {

/// True iff the spanning subquiver on the given edges has in- and out-degree
/// at most 1 everywhere and no oriented cycle — equivalently, each of its
/// components is a single vertex or a simple path. A subset containing a
/// self-loop is never a multipath. Throws UnknownEdge.
bool is_multipath(const Quiver& g, const std::vector<std::string>& edge_ids);

/// The multipath complex X(G): labels are the edges of G (self-loops, which
/// are never multipaths, are excluded), faces are the multipath edge sets.
/// Expects a directed kind; apply ρ to undirected graphs first.
SimplicialComplex multipath_complex(const Quiver& g);

/// Multipath edge sets ordered by inclusion — the face poset of X(G)
/// augmented with the empty multipath.
struct PathPoset {
    std::vector<std::vector<std::string>> elements;  // sorted sets, listed in lex order

    bool leq(std::size_t a, std::size_t b) const;  // subset relation
};

PathPoset path_poset(const Quiver& g);

/// The matching complex M(G) of an undirected graph: labels are the
/// reflection orbits (loop orbits excluded), faces are the matchings.
/// Throws NotUndirected.
SimplicialComplex matching_complex(const Quiver& g);

/// The simplicial map X(codomain) → X(domain) induced by a minor morphism,
/// sending each codomain edge to its unique preimage edge (X is
/// contravariant). Throws InvalidMorphism if the morphism fails validation.
SimplicialMap induced_map(const MinorMorphism& m);

}  // namespace qhx
