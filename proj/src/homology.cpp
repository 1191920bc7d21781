#include "qhx/homology.hpp"

#include <boost/multiprecision/integer.hpp>

#include "qhx/parallel.hpp"

namespace qhx {

long HomologyProfile::betti_at(int degree) const {
    for (const auto& r : rows)
        if (r.degree == degree) return r.betti;
    return 0;
}

std::vector<BigInt> HomologyProfile::torsion_at(int degree) const {
    for (const auto& r : rows)
        if (r.degree == degree) return r.torsion;
    return {};
}

bool HomologyProfile::torsion_free() const {
    for (const auto& r : rows)
        if (!r.torsion.empty()) return false;
    return true;
}

HomologyProfile homology(const ChainComplexZ& cc) {
    const int lo = cc.lowest_degree(), hi = cc.highest_degree();
    if (hi < lo) return {};

    // One Smith normal form per boundary matrix; independent, so parallel.
    std::vector<SmithResult> smith(hi - lo + 2);
    parallel_for(smith.size(), [&](std::size_t i) {
        const SparseIntMat* d = cc.boundary(lo + static_cast<int>(i));
        if (d) smith[i] = smith_normal_form(*d);
    });
    auto smith_at = [&](int degree) -> const SmithResult& {
        static const SmithResult zero;
        int i = degree - lo;
        if (i < 0 || i >= static_cast<int>(smith.size())) return zero;
        return smith[i];
    };

    HomologyProfile out;
    for (int k = lo; k <= hi; ++k) {
        DegreeHomology row;
        row.degree = k;
        row.betti = cc.rank(k) - smith_at(k).rank - smith_at(k + 1).rank;
        row.torsion = smith_at(k + 1).torsion();
        out.rows.push_back(std::move(row));
    }
    return out;
}

HomologyProfile homology(const SimplicialComplex& c, bool reduced) {
    HomologyProfile full = homology(chain_complex(c, reduced));
    if (!reduced || c.dim() == -1) return full;
    HomologyProfile out;
    for (auto& r : full.rows)
        if (r.degree >= 0) out.rows.push_back(std::move(r));
    return out;
}

BigInt torsion_exponent(const HomologyProfile& p) {
    BigInt exponent = 1;
    for (const auto& r : p.rows)
        for (const auto& t : r.torsion) exponent = lcm(exponent, t);
    return exponent;
}

bool euler_characteristic_matches(const ChainComplexZ& cc, const HomologyProfile& p) {
    long chi_ranks = 0;
    for (int k = cc.lowest_degree(); k <= cc.highest_degree(); ++k)
        chi_ranks += (k % 2 == 0 ? 1 : -1) * cc.rank(k);
    long chi_betti = 0;
    for (const auto& r : p.rows) chi_betti += (r.degree % 2 == 0 ? 1 : -1) * r.betti;
    return chi_ranks == chi_betti;
}

}  // namespace qhx
