#pragma once

// Seeded random graph generators shared by the unit and acceptance suites.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qhx/functors.hpp"
#include "qhx/minor.hpp"
#include "qhx/quiver.hpp"

namespace qhx::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<std::string> numbered(const std::string& prefix, int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

/// Loop-free digraph: distinct ordered pairs.
inline Quiver random_digraph(Rng& rng, int max_v, int max_e, bool allow_loops = false) {
    int nv = uniform(rng, 1, max_v);
    std::vector<std::string> vs = numbered("v", nv);
    std::set<std::pair<int, int>> pairs;
    int ne = uniform(rng, 0, max_e);
    for (int tries = 0; tries < 4 * ne && static_cast<int>(pairs.size()) < ne; ++tries) {
        int a = uniform(rng, 0, nv - 1), b = uniform(rng, 0, nv - 1);
        if (a == b && !allow_loops) continue;
        pairs.emplace(a, b);
    }
    std::vector<Edge> es;
    int k = 0;
    for (const auto& [a, b] : pairs) es.push_back({"e" + std::to_string(k++), vs[a], vs[b]});
    return Quiver(QuiverKind::digraph, "rnd", std::move(vs), std::move(es));
}

/// Quiver with multi-edges and loops permitted.
inline Quiver random_quiver(Rng& rng, int max_v, int max_e) {
    int nv = uniform(rng, 1, max_v);
    std::vector<std::string> vs = numbered("v", nv);
    std::vector<Edge> es;
    int ne = uniform(rng, 0, max_e);
    for (int k = 0; k < ne; ++k) {
        int a = uniform(rng, 0, nv - 1), b = uniform(rng, 0, nv - 1);
        es.push_back({"e" + std::to_string(k), vs[a], vs[b]});
    }
    return Quiver(QuiverKind::quiver, "rnd", std::move(vs), std::move(es));
}

/// DAG: edges respect a random topological order.
inline Quiver random_dag(Rng& rng, int max_v, int max_e) {
    int nv = uniform(rng, 1, max_v);
    std::vector<std::string> vs = numbered("v", nv);
    std::vector<int> order(nv);
    for (int i = 0; i < nv; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::set<std::pair<int, int>> pairs;
    int ne = uniform(rng, 0, max_e);
    for (int tries = 0; tries < 4 * ne && static_cast<int>(pairs.size()) < ne; ++tries) {
        int a = uniform(rng, 0, nv - 1), b = uniform(rng, 0, nv - 1);
        if (a == b) continue;
        if (order[a] > order[b]) std::swap(a, b);
        pairs.emplace(a, b);
    }
    std::vector<Edge> es;
    int k = 0;
    for (const auto& [a, b] : pairs) es.push_back({"e" + std::to_string(k++), vs[a], vs[b]});
    return Quiver(QuiverKind::digraph, "dag", std::move(vs), std::move(es));
}

/// Connected directed tree with `edges` edges (random attachment, random
/// orientation per edge).
inline Quiver random_directed_tree(Rng& rng, int edges) {
    int nv = edges + 1;
    std::vector<std::string> vs = numbered("v", nv);
    std::vector<Edge> es;
    for (int i = 1; i < nv; ++i) {
        int j = uniform(rng, 0, i - 1);
        if (uniform(rng, 0, 1))
            es.push_back({"e" + std::to_string(i - 1), vs[j], vs[i]});
        else
            es.push_back({"e" + std::to_string(i - 1), vs[i], vs[j]});
    }
    return Quiver(QuiverKind::digraph, "tree", std::move(vs), std::move(es));
}

/// Directed forest: every component a directed tree.
inline Quiver random_directed_forest(Rng& rng, int max_edges) {
    int nv = uniform(rng, 1, max_edges + 1);
    std::vector<std::string> vs = numbered("v", nv);
    std::vector<Edge> es;
    int k = 0;
    for (int i = 1; i < nv; ++i) {
        if (uniform(rng, 0, 3) == 0) continue;  // start a fresh component
        int j = uniform(rng, 0, i - 1);
        if (uniform(rng, 0, 1))
            es.push_back({"e" + std::to_string(k++), vs[j], vs[i]});
        else
            es.push_back({"e" + std::to_string(k++), vs[i], vs[j]});
    }
    return Quiver(QuiverKind::digraph, "forest", std::move(vs), std::move(es));
}

/// Undirected graph built through the underlying-graph functor.
inline Quiver random_undirected(Rng& rng, int max_v, int max_e) {
    return underlying_graph(random_digraph(rng, max_v, max_e));
}

/// Composite of up to `max_steps` random edge contractions, as one morphism.
inline MinorMorphism random_contraction(Rng& rng, const Quiver& g, int max_steps) {
    MinorMorphism acc = identity_morphism(g);
    int steps = uniform(rng, 0, max_steps);
    for (int s = 0; s < steps; ++s) {
        const Quiver& current = acc.codomain;
        std::vector<std::string> candidates;
        for (const Edge& e : current.edges())
            if (!e.is_loop()) candidates.push_back(e.id);
        if (candidates.empty()) break;
        auto [next, witness] = contract_edge(
            current, candidates[uniform(rng, 0, static_cast<int>(candidates.size()) - 1)]);
        acc = compose_minor(acc, witness);
    }
    return acc;
}

}  // namespace qhx::testing
