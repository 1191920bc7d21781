#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhx/quiver.hpp"

namespace qhx {

struct BlowupResult {
    Quiver result;
    /// Input edge id → output edge id. Blow-ups rewire endpoints but keep
    /// edge identifiers, so this is the identity map materialized.
    std::map<std::string, std::string> edge_bijection;
    /// Vertices that were split, v → (v.in, v.out); kept vertices absent.
    std::map<std::string, std::pair<std::string, std::string>> split_vertices;
};

/// Blow-up at one vertex. When v has zero in- or out-degree the input is
/// returned unchanged; otherwise v splits into v.in (receiving the incoming
/// edges) and v.out (emitting the outgoing ones). A self-loop at v becomes
/// the edge (v.out, v.in), keeping the edge bijection total.
/// Throws UnknownVertex; undirected input is rejected with KindViolation.
BlowupResult blow_up_at(const Quiver& g, const std::string& v);

/// Fixed point of blow_up_at over all vertices; the result is alternating
/// and independent of the blow-up order.
BlowupResult blow_up(const Quiver& g);

/// Checks Theorem multi=match on one input: X(G) against the matching
/// complex of ι(B(G)) under the blow-up edge bijection.
/// Throws HasOrientedCycle when the hypothesis fails.
bool verify_blowup_theorem(const Quiver& g);

struct DynamicalDecomposition {
    std::vector<Quiver> modules;                       // edge-disjoint subquivers
    std::vector<std::vector<std::string>> boundaries;  // per module, sorted vertex ids
};

/// Decomposition into dynamical modules of a connected digraph without
/// oriented cycles, computed as the preimages of the connected components of
/// the blow-up. Throws Disconnected / HasOrientedCycle.
DynamicalDecomposition dynamical_modules(const Quiver& g);

/// Checks X(G) ≅ X(M_1) ∗ ... ∗ X(M_k) under the identity edge labelling.
bool verify_module_join(const Quiver& g);

}  // namespace qhx
