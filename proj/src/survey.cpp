#include "qhx/survey.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "qhx/homology.hpp"
#include "qhx/multipath.hpp"
#include "qhx/parallel.hpp"

namespace qhx {

namespace {

using PairList = std::vector<std::pair<int, int>>;

bool weakly_connected(int nv, const PairList& edges) {
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : edges) parent[find(a)] = find(b);
    std::set<int> roots;
    for (int i = 0; i < nv; ++i) roots.insert(find(i));
    return roots.size() <= 1;
}

PairList canonical_form(int nv, const PairList& edges) {
    std::vector<int> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    PairList best;
    bool first = true;
    do {
        PairList mapped;
        mapped.reserve(edges.size());
        for (const auto& [a, b] : edges) mapped.emplace_back(perm[a], perm[b]);
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) {
            best = std::move(mapped);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Quiver to_quiver(int nv, const PairList& edges) {
    std::vector<std::string> vertices;
    for (int i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));
    std::vector<Edge> es;
    for (std::size_t k = 0; k < edges.size(); ++k)
        es.push_back({"e" + std::to_string(k), vertices[edges[k].first], vertices[edges[k].second]});
    return Quiver(QuiverKind::digraph, "survey", std::move(vertices), std::move(es));
}

}  // namespace

std::vector<SurveyRow> torsion_survey(int max_vertices, int max_edges, int max_genus,
                                      const std::function<void(const SurveyRow&)>& on_row) {
    if (max_vertices < 1 || max_edges < 0 || max_genus < 0)
        throw BadParams("survey bounds must be non-negative with max_vertices >= 1");
    if (max_vertices > 5)
        throw BoundsTooLarge("survey is exhaustive; max_vertices is limited to 5");

    // Connected classes per vertex count, keyed by canonical edge list.
    std::vector<std::pair<int, PairList>> classes;
    for (int nv = 1; nv <= max_vertices; ++nv) {
        PairList slots;
        for (int a = 0; a < nv; ++a)
            for (int b = 0; b < nv; ++b)
                if (a != b) slots.emplace_back(a, b);
        const int cap = std::min<int>(max_edges, nv - 1 + max_genus);
        if (nv > 1 && cap < nv - 1) continue;

        std::set<PairList> seen;
        PairList chosen;
        std::function<void(std::size_t)> pick = [&](std::size_t from) {
            if (static_cast<int>(chosen.size()) >= (nv == 1 ? 0 : nv - 1) &&
                weakly_connected(nv, chosen)) {
                PairList canon = canonical_form(nv, chosen);
                if (seen.insert(canon).second) classes.emplace_back(nv, canon);
            }
            if (static_cast<int>(chosen.size()) == cap) return;
            for (std::size_t j = from; j < slots.size(); ++j) {
                chosen.push_back(slots[j]);
                pick(j + 1);
                chosen.pop_back();
            }
        };
        pick(0);
    }

    std::vector<BigInt> exponents(classes.size());
    parallel_for(classes.size(), [&](std::size_t i) {
        Quiver g = to_quiver(classes[i].first, classes[i].second);
        exponents[i] = torsion_exponent(homology(multipath_complex(g), /*reduced=*/true));
    });

    std::vector<SurveyRow> rows(max_genus + 1);
    for (int gI = 0; gI <= max_genus; ++gI) rows[gI].genus = gI;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        int nv = classes[i].first;
        int genus = static_cast<int>(classes[i].second.size()) - nv + 1;
        rows[genus].classes++;
        rows[genus].max_exponent = std::max(rows[genus].max_exponent, exponents[i]);
    }
    for (const auto& row : rows)
        if (on_row) on_row(row);
    return rows;
}

}  // namespace qhx
