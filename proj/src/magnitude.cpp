#include "qhx/magnitude.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "qhx/homology.hpp"
#include "qhx/parallel.hpp"

namespace qhx {

DistanceMatrix path_metric(const Quiver& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const Edge& e : g.edges()) {
        std::size_t s = g.vertex_index(e.src), t = g.vertex_index(e.dst);
        if (s != t) adj[s].push_back(t);
    }
    DistanceMatrix d(n);
    for (std::size_t start = 0; start < n; ++start) {
        d.set(start, start, 0);
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : adj[v])
                if (!d.reachable(start, w)) {
                    d.set(start, w, d(start, v) + 1);
                    queue.push_back(w);
                }
        }
    }
    return d;
}

namespace {

// All (k+1)-tuples with consecutive entries distinct, reachable, and total
// length exactly l, in lexicographic order of vertex indices.
std::vector<std::vector<int>> enumerate_tuples(const DistanceMatrix& d, int k, int l,
                                               std::size_t cap) {
    std::vector<std::vector<int>> out;
    if (k < 0 || l < 0) return out;
    const int n = static_cast<int>(d.size());
    std::vector<int> tuple;

    std::function<void(int)> extend = [&](int remaining) {
        const int placed = static_cast<int>(tuple.size());
        if (placed == k + 1) {
            if (remaining == 0) {
                if (out.size() >= cap)
                    throw BoundsTooLarge("magnitude basis exceeds the tuple cap");
                out.push_back(tuple);
            }
            return;
        }
        // Each edge still to be walked costs at least 1; the first vertex is
        // free.
        const int edges_left = placed == 0 ? k : k - placed + 1;
        if (remaining < edges_left) return;
        if (placed == 0) {
            for (int v = 0; v < n; ++v) {
                tuple.push_back(v);
                extend(remaining);
                tuple.pop_back();
            }
            return;
        }
        const int last = tuple.back();
        for (int v = 0; v < n; ++v) {
            if (v == last || !d.reachable(last, v)) continue;
            const int step = d(last, v);
            if (step > remaining - (edges_left - 1)) continue;
            tuple.push_back(v);
            extend(remaining - step);
            tuple.pop_back();
        }
    };
    extend(l);
    return out;
}

SparseIntMat boundary_matrix(const DistanceMatrix& d,
                             const std::vector<std::vector<int>>& lower,
                             const std::vector<std::vector<int>>& upper) {
    SparseIntMat m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    const int k = upper.empty() ? 0 : static_cast<int>(upper[0].size()) - 1;
    for (std::size_t col = 0; col < upper.size(); ++col) {
        const std::vector<int>& t = upper[col];
        for (int i = 1; i <= k - 1; ++i) {
            const int a = t[i - 1], b = t[i], c = t[i + 1];
            if (a == c) continue;  // the face lies in the I-submodule
            if (d(a, b) + d(b, c) != d(a, c)) continue;  // length drops below l
            std::vector<int> face;
            face.reserve(t.size() - 1);
            for (int j = 0; j <= k; ++j)
                if (j != i) face.push_back(t[j]);
            auto it = std::lower_bound(lower.begin(), lower.end(), face);
            m.add(static_cast<int>(it - lower.begin()), static_cast<int>(col),
                  i % 2 == 0 ? 1 : -1);
        }
    }
    return m;
}

}  // namespace

MagnitudeBasis magnitude_basis(const Quiver& g, int k, int l, std::size_t tuple_cap) {
    if (k < 0 || l < 0) throw BadParams("magnitude bidegree must be non-negative");
    DistanceMatrix d = path_metric(g);
    MagnitudeBasis b;
    b.k = k;
    b.l = l;
    b.tuples = enumerate_tuples(d, k, l, tuple_cap);
    std::vector<std::vector<int>> lower =
        k > 0 ? enumerate_tuples(d, k - 1, l, tuple_cap) : std::vector<std::vector<int>>{};
    b.boundary = boundary_matrix(d, lower, b.tuples);
    return b;
}

const SparseIntMat& magnitude_differential(const MagnitudeBasis& b) { return b.boundary; }

const MagnitudeRow* MagnitudeTable::at(int k, int l) const {
    for (const auto& r : rows)
        if (r.k == k && r.l == l) return &r;
    return nullptr;
}

namespace {

MagnitudeTable magnitude_table(const Quiver& g, int max_l, std::size_t tuple_cap,
                               bool cohomology) {
    if (max_l < 0) throw BadParams("max_l must be non-negative");
    DistanceMatrix d = path_metric(g);

    // One independent chain complex per length slice.
    std::vector<std::vector<MagnitudeRow>> slices(max_l + 1);
    parallel_for(static_cast<std::size_t>(max_l) + 1, [&](std::size_t li) {
        const int l = static_cast<int>(li);
        std::vector<std::vector<std::vector<int>>> tuples(l + 2);
        for (int k = 0; k <= l; ++k) tuples[k] = enumerate_tuples(d, k, l, tuple_cap);
        tuples[l + 1] = {};  // MC_{k,l} = 0 for k > l

        std::vector<SparseIntMat> del(l + 2);  // del[k] : MC_{k,l} → MC_{k−1,l}
        for (int k = 1; k <= l + 1; ++k) del[k] = boundary_matrix(d, tuples[k - 1], tuples[k]);

        std::vector<SmithResult> smith(l + 3);
        for (int k = 1; k <= l + 1; ++k) {
            if (!cohomology)
                smith[k] = smith_normal_form(del[k]);
            else
                smith[k] = smith_normal_form(del[k].transposed());
        }

        for (int k = 0; k <= l; ++k) {
            const std::size_t nk = tuples[k].size();
            if (nk == 0) continue;
            MagnitudeRow row;
            row.k = k;
            row.l = l;
            // Transposition preserves ranks, so the Betti numbers agree; the
            // torsion of H^k comes from δ^{k−1} = (∂_k)ᵀ.
            row.betti = static_cast<long>(nk) - smith[k].rank - smith[k + 1].rank;
            row.torsion = cohomology ? smith[k].torsion() : smith[k + 1].torsion();
            slices[li].push_back(std::move(row));
        }
    });

    MagnitudeTable out;
    for (auto& slice : slices)
        for (auto& row : slice) out.rows.push_back(std::move(row));
    return out;
}

}  // namespace

MagnitudeTable magnitude_homology(const Quiver& g, int max_l, std::size_t tuple_cap) {
    return magnitude_table(g, max_l, tuple_cap, /*cohomology=*/false);
}

MagnitudeTable magnitude_cohomology(const Quiver& g, int max_l, std::size_t tuple_cap) {
    return magnitude_table(g, max_l, tuple_cap, /*cohomology=*/true);
}

SparseIntMat contraction_chain_map(const MinorMorphism& m, int k, int l,
                                   std::size_t tuple_cap) {
    MinorValidation v = validate_minor(m);
    if (!v) throw InvalidMorphism("not a minor morphism: " + v.diagnostic);
    for (const auto& [e, img] : m.edge_map) {
        (void)e;
        if (img.kind == MinorImage::Kind::star)
            throw NotAContraction("morphism deletes an edge");
    }

    DistanceMatrix dd = path_metric(m.domain);
    DistanceMatrix dc = path_metric(m.codomain);
    std::vector<std::vector<int>> dom = enumerate_tuples(dd, k, l, tuple_cap);
    std::vector<std::vector<int>> cod = enumerate_tuples(dc, k, l, tuple_cap);

    // Vertex translation domain index → codomain index.
    std::vector<int> image(m.domain.vertex_count());
    for (const auto& [vtx, img] : m.vertex_map)
        image[m.domain.vertex_index(vtx)] = static_cast<int>(m.codomain.vertex_index(img));

    SparseIntMat out(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (std::size_t col = 0; col < dom.size(); ++col) {
        std::vector<int> t;
        t.reserve(dom[col].size());
        for (int vi : dom[col]) t.push_back(image[vi]);
        bool ok = true;
        int length = 0;
        for (std::size_t i = 0; ok && i + 1 < t.size(); ++i) {
            if (t[i] == t[i + 1]) {
                ok = false;  // degenerate image lies in the I-submodule
                break;
            }
            length += dc(t[i], t[i + 1]);
        }
        if (!ok || length != l) continue;
        auto it = std::lower_bound(cod.begin(), cod.end(), t);
        if (it == cod.end() || *it != t) continue;  // unreachable: images stay admissible
        out.set(static_cast<int>(it - cod.begin()), static_cast<int>(col), 1);
    }
    return out;
}

}  // namespace qhx
