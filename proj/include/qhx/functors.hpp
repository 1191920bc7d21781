#pragma once

#include <map>
#include <string>

#include "qhx/quiver.hpp"

namespace qhx {

/// The functor ι: replaces each edge by an undirected edge. A non-loop edge e
/// becomes the reflection pair {e, e~}; a self-loop becomes a single
/// reflection-fixed loop, so its realization stays one 1-cell.
Quiver underlying_graph(const Quiver& g);

/// The functor ρ: forgets the reflection, making each undirected edge
/// bidirectional. Throws NotUndirected on directed input.
Quiver doubled_quiver(const Quiver& g);

enum class ConeDirection { toward_apex, from_apex };

/// Cone over a base quiver: one new spoke edge per base vertex, with the
/// direction chosen per vertex. Spoke edge ids are "<apex>:<vertex>".
/// An undirected base is doubled (ρ) first, since the spokes are directed.
struct ConeSpec {
    Quiver base;
    std::string apex;
    std::map<std::string, ConeDirection> orientation;  // total on V(base)
};

/// Throws ApexCollision if the apex id is already a base vertex and BadParams
/// if the orientation is not total.
Quiver cone(const ConeSpec& spec);

}  // namespace qhx
