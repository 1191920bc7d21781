#pragma once

#include <vector>

#include "qhx/simplicial.hpp"
#include "qhx/snf.hpp"

namespace qhx {

/// Chain complex of free Z-modules: per-degree ranks and boundary matrices
/// ∂_k : C_k → C_{k−1}.
class ChainComplexZ {
public:
    /// boundaries[i] maps degree lowest+i to lowest+i−1; boundaries[0] must
    /// have zero rows. Dimension mismatches throw BadParams.
    ChainComplexZ(int lowest_degree, std::vector<int> ranks, std::vector<SparseIntMat> boundaries);

    int lowest_degree() const { return lowest_; }
    int highest_degree() const { return lowest_ + static_cast<int>(ranks_.size()) - 1; }

    int rank(int degree) const;
    /// Boundary ∂_degree, or nullptr for degrees outside the stored range
    /// (a zero map).
    const SparseIntMat* boundary(int degree) const;

    /// ∂_{k} ∘ ∂_{k+1} = 0 for all k.
    bool boundary_condition_holds() const;

private:
    int lowest_;
    std::vector<int> ranks_;
    std::vector<SparseIntMat> boundaries_;
};

/// Simplicial chain complex. Bases are the faces of each dimension in
/// canonical (lexicographic) order; boundary signs come from the position
/// parity of the omitted vertex under the global label order. With
/// reduced = true the empty face generates degree −1 and ∂_0 is the
/// augmentation.
ChainComplexZ chain_complex(const SimplicialComplex& c, bool reduced);

}  // namespace qhx
