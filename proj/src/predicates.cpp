#include "qhx/predicates.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qhx {

namespace {

struct Cell {
    std::size_t u, v;  // endpoints of the 1-cell (realization)
    std::size_t src, dst;  // orientation of the directed representative
};

// One 1-cell per edge (directed kinds) or per reflection orbit (undirected).
std::vector<Cell> realization_cells(const Quiver& g) {
    std::vector<Cell> cells;
    std::set<std::string> seen;
    for (const Edge& e : g.edges()) {
        const std::string& rep = g.orbit_rep(e.id);
        if (!seen.insert(rep).second) continue;
        const Edge& r = g.edge(rep);
        std::size_t s = g.vertex_index(r.src), t = g.vertex_index(r.dst);
        cells.push_back({std::min(s, t), std::max(s, t), s, t});
    }
    return cells;
}

}  // namespace

bool has_oriented_cycle(const Quiver& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const Edge& e : g.edges())
        adj[g.vertex_index(e.src)].push_back(g.vertex_index(e.dst));

    enum { white, gray, black };
    std::vector<int> color(n, white);
    // Iterative DFS; a gray target is a back edge.
    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != white) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        color[root] = gray;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj[v].size()) {
                std::size_t w = adj[v][next++];
                if (color[w] == gray) return true;
                if (color[w] == white) {
                    color[w] = gray;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = black;
                stack.pop_back();
            }
        }
    }
    return false;
}

StructuralPredicates structural_predicates(const Quiver& g, std::size_t cycle_cap) {
    StructuralPredicates out;

    std::set<std::string> sources, targets;
    for (const Edge& e : g.edges()) {
        sources.insert(e.src);
        targets.insert(e.dst);
    }
    out.is_alternating = true;
    for (const auto& s : sources)
        if (targets.count(s)) {
            out.is_alternating = false;
            break;
        }
    for (const auto& v : g.vertex_ids()) {
        if (sources.count(v) && targets.count(v))
            out.unstable_vertices.push_back(v);
        else
            out.stable_vertices.push_back(v);
    }
    std::sort(out.stable_vertices.begin(), out.stable_vertices.end());
    std::sort(out.unstable_vertices.begin(), out.unstable_vertices.end());

    out.has_oriented_cycle = has_oriented_cycle(g);

    // Alternating-cycle search over embedded cycles of the realization. A
    // cycle alternates when every cycle vertex is a pure source or a pure
    // target of the two incident directed representatives.
    const std::size_t n = g.vertex_count();
    std::vector<Cell> cells = realization_cells(g);
    std::vector<std::vector<std::size_t>> incident(n);
    std::size_t examined = 0;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (cells[ci].u == cells[ci].v) {
            ++examined;  // a loop is an embedded cycle, never alternating
            continue;
        }
        incident[cells[ci].u].push_back(ci);
        incident[cells[ci].v].push_back(ci);
    }

    std::vector<char> on_path(n, 0), used(cells.size(), 0);
    std::vector<std::size_t> path_cells;
    std::vector<std::size_t> path_verts;

    auto alternates = [&](const std::vector<std::size_t>& cyc_cells,
                          const std::vector<std::size_t>& cyc_verts) {
        const std::size_t k = cyc_cells.size();
        for (std::size_t i = 0; i < k; ++i) {
            const Cell& a = cells[cyc_cells[i]];
            const Cell& b = cells[cyc_cells[(i + 1) % k]];
            std::size_t x = cyc_verts[(i + 1) % k];
            bool both_src = a.src == x && b.src == x;
            bool both_dst = a.dst == x && b.dst == x;
            if (!both_src && !both_dst) return false;
        }
        return true;
    };

    std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t base,
                                                            std::size_t v) -> bool {
        for (std::size_t ci : incident[v]) {
            if (used[ci]) continue;
            const Cell& c = cells[ci];
            std::size_t w = c.u == v ? c.v : c.u;
            if (w == base) {
                if (path_cells.size() >= 1 && path_cells.front() < ci) {
                    if (++examined > cycle_cap)
                        throw CycleLimitExceeded("embedded cycle cap exceeded");
                    std::vector<std::size_t> cyc_cells = path_cells;
                    cyc_cells.push_back(ci);
                    if (alternates(cyc_cells, path_verts)) return true;
                }
                continue;
            }
            if (w < base || on_path[w]) continue;
            used[ci] = 1;
            on_path[w] = 1;
            path_cells.push_back(ci);
            path_verts.push_back(w);
            if (dfs(base, w)) return true;
            path_verts.pop_back();
            path_cells.pop_back();
            on_path[w] = 0;
            used[ci] = 0;
        }
        return false;
    };

    out.has_alternating_cycle = false;
    for (std::size_t base = 0; base < n && !out.has_alternating_cycle; ++base) {
        path_cells.clear();
        path_verts.assign(1, base);
        on_path[base] = 1;
        if (dfs(base, base)) out.has_alternating_cycle = true;
        on_path[base] = 0;
    }

    return out;
}

}  // namespace qhx
