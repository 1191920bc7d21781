#pragma once

#include <vector>

#include "qhx/chain.hpp"

namespace qhx {

struct DegreeHomology {
    int degree = 0;
    long betti = 0;
    std::vector<BigInt> torsion;  // divisor chain, each > 1
};

struct HomologyProfile {
    std::vector<DegreeHomology> rows;  // ascending degree

    long betti_at(int degree) const;
    std::vector<BigInt> torsion_at(int degree) const;
    bool torsion_free() const;
};

HomologyProfile homology(const ChainComplexZ& cc);

/// Integral simplicial homology. Reduced profiles report degrees ≥ 0, plus
/// degree −1 exactly when the complex is {∅}.
HomologyProfile homology(const SimplicialComplex& c, bool reduced);

/// Least common multiple of all torsion coefficients; 1 when torsion-free.
BigInt torsion_exponent(const HomologyProfile& p);

/// Σ(−1)^k rank C_k = Σ(−1)^k betti_k; diagnostic identity used in tests.
bool euler_characteristic_matches(const ChainComplexZ& cc, const HomologyProfile& p);

}  // namespace qhx
