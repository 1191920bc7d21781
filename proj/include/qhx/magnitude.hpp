#pragma once

#include <vector>

#include "qhx/minor.hpp"
#include "qhx/quiver.hpp"
#include "qhx/snf.hpp"

namespace qhx {

/// Directed shortest-path distances over vertex indices; unreachable pairs
/// are infinite and never enter arithmetic.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, -1) {}

    std::size_t size() const { return n_; }
    bool reachable(std::size_t u, std::size_t v) const { return d_[u * n_ + v] >= 0; }
    int operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
    void set(std::size_t u, std::size_t v, int dist) { d_[u * n_ + v] = dist; }

private:
    std::size_t n_;
    std::vector<int> d_;  // -1 encodes ∞
};

/// Unit-weight directed BFS from every vertex; multi-edges and self-loops do
/// not alter distances.
DistanceMatrix path_metric(const Quiver& g);

/// Basis of MC_{k,l}: the (k+1)-tuples of vertices with consecutive entries
/// distinct and reachable and total path length l, together with the
/// boundary matrix into bidegree (k−1, l).
struct MagnitudeBasis {
    int k = 0;
    int l = 0;
    std::vector<std::vector<int>> tuples;  // vertex indices, lexicographic
    SparseIntMat boundary;                 // |basis(k−1,l)| × |tuples|
};

/// Throws BadParams for negative bidegrees and BoundsTooLarge past the tuple
/// cap (default 10^6).
MagnitudeBasis magnitude_basis(const Quiver& g, int k, int l, std::size_t tuple_cap = 1000000);

/// The boundary of the basis (column per tuple, sign (−1)^i on faces that
/// keep the total length; faces with a repeated vertex vanish).
const SparseIntMat& magnitude_differential(const MagnitudeBasis& b);

struct MagnitudeRow {
    int k = 0;
    int l = 0;
    long betti = 0;
    std::vector<BigInt> torsion;
};

struct MagnitudeTable {
    std::vector<MagnitudeRow> rows;  // l ascending, then k ascending

    const MagnitudeRow* at(int k, int l) const;
};

/// Magnitude homology MH_{k,l} for all l ≤ max_l. Rows are emitted for the
/// bidegrees with a nonzero chain group.
MagnitudeTable magnitude_homology(const Quiver& g, int max_l, std::size_t tuple_cap = 1000000);

/// Magnitude cohomology: homology of the transposed differentials.
MagnitudeTable magnitude_cohomology(const Quiver& g, int max_l, std::size_t tuple_cap = 1000000);

/// The chain map φ_# of a pure contraction at bidegree (k, l): a tuple maps
/// to its image tuple when that preserves the length, to 0 otherwise.
/// Throws NotAContraction when an edge is deleted, InvalidMorphism when the
/// morphism fails validation.
SparseIntMat contraction_chain_map(const MinorMorphism& m, int k, int l,
                                   std::size_t tuple_cap = 1000000);

}  // namespace qhx
