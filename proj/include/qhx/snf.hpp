#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace qhx {

using BigInt = boost::multiprecision::cpp_int;

/// Row-major sparse integer matrix (per-row ordered maps).
class SparseIntMat {
public:
    SparseIntMat() : rows_count_(0), cols_count_(0) {}
    SparseIntMat(int rows, int cols) : rows_count_(rows), cols_count_(cols), rows_(rows) {}

    int rows() const { return rows_count_; }
    int cols() const { return cols_count_; }

    BigInt get(int r, int c) const {
        auto it = rows_[r].find(c);
        return it == rows_[r].end() ? BigInt(0) : it->second;
    }

    void set(int r, int c, BigInt v) {
        if (v == 0)
            rows_[r].erase(c);
        else
            rows_[r][c] = std::move(v);
    }

    void add(int r, int c, const BigInt& v) {
        auto it = rows_[r].find(c);
        if (it == rows_[r].end()) {
            if (v != 0) rows_[r][c] = v;
        } else {
            it->second += v;
            if (it->second == 0) rows_[r].erase(it);
        }
    }

    const std::map<int, BigInt>& row(int r) const { return rows_[r]; }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }

    SparseIntMat transposed() const;

    bool is_zero() const { return nonzeros() == 0; }

private:
    int rows_count_, cols_count_;
    std::vector<std::map<int, BigInt>> rows_;
};

SparseIntMat multiply(const SparseIntMat& a, const SparseIntMat& b);

struct SmithResult {
    /// Positive invariant factors with d_i | d_{i+1}; size equals the rank.
    std::vector<BigInt> invariant_factors;
    int rank = 0;

    /// Factors exceeding 1 — the torsion coefficients contributed by this
    /// boundary matrix.
    std::vector<BigInt> torsion() const {
        std::vector<BigInt> t;
        for (const auto& d : invariant_factors)
            if (d > 1) t.push_back(d);
        return t;
    }
};

/// Invariant factors by fraction-free elimination with minimal-absolute-value
/// pivoting (ties: smallest row, then column index). Transforms are not
/// retained. Falls back to a dense routine when fill-in exceeds 30% of the
/// active submatrix.
SmithResult smith_normal_form(SparseIntMat m);

}  // namespace qhx
