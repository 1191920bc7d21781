#pragma once

#include <string>
#include <vector>

#include "qhx/quiver.hpp"

namespace qhx {

/// Coherently oriented linear quiver: v0 → v1 → ... → vn (n edges).
Quiver family_I(int n);

/// Coherently oriented polygon on n edges (I_n with v0 and vn identified).
Quiver family_P(int n);

/// Alternating linear quiver on n+1 vertices: v0 → v1 ← v2 → v3 ← ...
Quiver family_A(int n);

/// Dandelion: n edges (w_i, v0) and m edges (v0, x_j).
Quiver family_D(int n, int m);

/// Transitive tournament on n+1 vertices v0..vn, edges (v_i, v_j) for i < j.
Quiver family_T(int n);

/// Half-graph (ladder): undirected on p1..pn, q1..qn with edges {p_i, q_j}
/// for i ≤ j.
Quiver family_B(int n);

/// Complete bipartite digraph with the alternating orientation: edges
/// (p_i, q_j) for all i, j.
Quiver family_K(int n, int m);

/// Dispatcher for the CLI: name ∈ {I, P, A, D, T, B, K} with the expected
/// parameter counts. Throws BadParams.
Quiver family(const std::string& name, const std::vector<int>& params);

}  // namespace qhx
