#include "qhx/chain.hpp"

#include <algorithm>

namespace qhx {

ChainComplexZ::ChainComplexZ(int lowest_degree, std::vector<int> ranks,
                             std::vector<SparseIntMat> boundaries)
    : lowest_(lowest_degree), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (boundaries_.size() != ranks_.size())
        throw BadParams("chain complex needs one boundary per degree");
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        int expected_rows = i == 0 ? 0 : ranks_[i - 1];
        if (boundaries_[i].rows() != expected_rows || boundaries_[i].cols() != ranks_[i])
            throw BadParams("boundary matrix dimensions do not match adjacent ranks");
    }
}

int ChainComplexZ::rank(int degree) const {
    int i = degree - lowest_;
    if (i < 0 || i >= static_cast<int>(ranks_.size())) return 0;
    return ranks_[i];
}

const SparseIntMat* ChainComplexZ::boundary(int degree) const {
    int i = degree - lowest_;
    if (i <= 0 || i >= static_cast<int>(boundaries_.size())) return nullptr;
    return &boundaries_[i];
}

bool ChainComplexZ::boundary_condition_holds() const {
    for (int k = lowest_ + 2; k <= highest_degree(); ++k) {
        const SparseIntMat* a = boundary(k - 1);
        const SparseIntMat* b = boundary(k);
        if (a && b && !multiply(*a, *b).is_zero()) return false;
    }
    return true;
}

ChainComplexZ chain_complex(const SimplicialComplex& c, bool reduced) {
    const int lowest = reduced ? -1 : 0;
    const int top = c.dim();

    std::vector<int> ranks;
    std::vector<SparseIntMat> boundaries;
    for (int k = lowest; k <= top; ++k) ranks.push_back(static_cast<int>(c.faces(k).size()));
    if (ranks.empty()) return ChainComplexZ(0, {}, {});

    for (int k = lowest; k <= top; ++k) {
        const int i = k - lowest;
        const int rows = i == 0 ? 0 : ranks[i - 1];
        SparseIntMat d(rows, ranks[i]);
        if (i > 0) {
            const auto& below = c.faces(k - 1);
            const auto& here = c.faces(k);
            for (std::size_t col = 0; col < here.size(); ++col) {
                const auto& f = here[col];
                for (std::size_t drop = 0; drop < f.size(); ++drop) {
                    SimplicialComplex::Face sub;
                    sub.reserve(f.size() - 1);
                    for (std::size_t j = 0; j < f.size(); ++j)
                        if (j != drop) sub.push_back(f[j]);
                    auto it = std::lower_bound(below.begin(), below.end(), sub);
                    d.add(static_cast<int>(it - below.begin()), static_cast<int>(col),
                          drop % 2 == 0 ? 1 : -1);
                }
            }
        }
        boundaries.push_back(std::move(d));
    }
    return ChainComplexZ(lowest, std::move(ranks), std::move(boundaries));
}

}  // namespace qhx
