#include "qhx/snf.hpp"

#include <algorithm>
#include <set>

namespace qhx {

SparseIntMat SparseIntMat::transposed() const {
    SparseIntMat t(cols_count_, rows_count_);
    for (int r = 0; r < rows_count_; ++r)
        for (const auto& [c, v] : rows_[r]) t.set(c, r, v);
    return t;
}

SparseIntMat multiply(const SparseIntMat& a, const SparseIntMat& b) {
    SparseIntMat out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (const auto& [k, av] : a.row(r))
            for (const auto& [c, bv] : b.row(k)) out.add(r, c, av * bv);
    return out;
}

namespace {

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Quotient q minimizing |a − q·b| (balanced division), deterministic on ties.
BigInt balanced_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt best_q = q, best_rem = abs_val(a - q * b);
    for (int delta : {-1, 1}) {
        BigInt cand = q + delta;
        BigInt rem = abs_val(a - cand * b);
        if (rem < best_rem || (rem == best_rem && abs_val(cand) < abs_val(best_q))) {
            best_q = cand;
            best_rem = rem;
        }
    }
    return best_q;
}

void chain_normalize(std::vector<BigInt>& d) {
    std::sort(d.begin(), d.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0) continue;
                BigInt g = gcd(d[i], d[j]);
                BigInt l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
                changed = true;
            }
        if (changed) std::sort(d.begin(), d.end());
    }
}

// Dense mirror of the sparse routine, used once fill-in makes maps wasteful.
std::vector<BigInt> snf_dense(std::vector<std::vector<BigInt>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<char> row_done(rows, 0), col_done(cols, 0);
    std::vector<BigInt> factors;

    while (true) {
        int pr = -1, pc = -1;
        BigInt pv;
        for (int r = 0; r < rows; ++r) {
            if (row_done[r]) continue;
            for (int c = 0; c < cols; ++c) {
                if (col_done[c] || m[r][c] == 0) continue;
                BigInt a = abs_val(m[r][c]);
                if (pr < 0 || a < pv) {
                    pr = r;
                    pc = c;
                    pv = a;
                }
            }
        }
        if (pr < 0) break;

        while (true) {
            // Column Euclid: leave a single nonzero in column pc.
            while (true) {
                int best = -1;
                BigInt bestv;
                int live = 0;
                for (int r = 0; r < rows; ++r) {
                    if (row_done[r] || m[r][pc] == 0) continue;
                    ++live;
                    BigInt a = abs_val(m[r][pc]);
                    if (best < 0 || a < bestv) {
                        best = r;
                        bestv = a;
                    }
                }
                pr = best;
                if (live <= 1) break;
                const BigInt p = m[pr][pc];
                for (int r = 0; r < rows; ++r) {
                    if (row_done[r] || r == pr || m[r][pc] == 0) continue;
                    BigInt q = balanced_div(m[r][pc], p);
                    if (q == 0) continue;
                    for (int c = 0; c < cols; ++c)
                        if (!col_done[c] && m[pr][c] != 0) m[r][c] -= q * m[pr][c];
                }
            }
            // Row phase: column pc is clean, so column operations touch only
            // row pr. A nonzero remainder moves the pivot.
            bool moved = false;
            for (int c = 0; c < cols && !moved; ++c) {
                if (col_done[c] || c == pc || m[pr][c] == 0) continue;
                BigInt q = balanced_div(m[pr][c], m[pr][pc]);
                m[pr][c] -= q * m[pr][pc];
                if (m[pr][c] != 0) {
                    pc = c;
                    moved = true;
                }
            }
            if (moved) continue;

            const BigInt p = abs_val(m[pr][pc]);
            bool fixed = false;
            for (int r = 0; r < rows && !fixed; ++r) {
                if (row_done[r] || r == pr) continue;
                for (int c = 0; c < cols; ++c) {
                    if (col_done[c] || m[r][c] % p == 0) continue;
                    for (int cc = 0; cc < cols; ++cc)
                        if (!col_done[cc]) m[pr][cc] += m[r][cc];
                    fixed = true;
                    break;
                }
            }
            if (!fixed) break;
        }

        factors.push_back(abs_val(m[pr][pc]));
        row_done[pr] = 1;
        col_done[pc] = 1;
    }
    return factors;
}

}  // namespace

SmithResult smith_normal_form(SparseIntMat m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::map<int, BigInt>> row(rows);
    for (int r = 0; r < rows; ++r) row[r] = m.row(r);
    std::vector<std::set<int>> col_rows(cols);
    std::size_t nnz = 0;
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : row[r]) {
            (void)v;
            col_rows[c].insert(r);
            ++nnz;
        }

    auto put = [&](int r, int c, BigInt v) {
        auto it = row[r].find(c);
        if (v == 0) {
            if (it != row[r].end()) {
                row[r].erase(it);
                col_rows[c].erase(r);
                --nnz;
            }
        } else if (it == row[r].end()) {
            row[r].emplace(c, std::move(v));
            col_rows[c].insert(r);
            ++nnz;
        } else {
            it->second = std::move(v);
        }
    };

    // row[dst] -= q * row[src]
    auto row_axpy = [&](int dst, int src, const BigInt& q) {
        std::vector<std::pair<int, BigInt>> src_entries(row[src].begin(), row[src].end());
        for (const auto& [c, v] : src_entries) {
            auto it = row[dst].find(c);
            BigInt nv = (it == row[dst].end() ? BigInt(0) : it->second) - q * v;
            put(dst, c, std::move(nv));
        }
    };

    std::vector<BigInt> factors;

    while (true) {
        // Densification fallback: past 30% fill, maps cost more than arrays.
        std::set<int> live_rows, live_cols;
        for (int r = 0; r < rows; ++r)
            if (!row[r].empty()) live_rows.insert(r);
        for (int c = 0; c < cols; ++c)
            if (!col_rows[c].empty()) live_cols.insert(c);
        if (live_rows.empty()) break;
        if (nnz > 2048 &&
            nnz * 10 > 3 * live_rows.size() * live_cols.size()) {
            std::vector<std::vector<BigInt>> dense(live_rows.size(),
                                                   std::vector<BigInt>(live_cols.size(), 0));
            std::map<int, int> cindex;
            for (int c : live_cols) cindex.emplace(c, static_cast<int>(cindex.size()));
            int ri = 0;
            for (int r : live_rows) {
                for (const auto& [c, v] : row[r]) dense[ri][cindex.at(c)] = v;
                ++ri;
            }
            for (BigInt& d : snf_dense(std::move(dense))) factors.push_back(std::move(d));
            break;
        }

        // Pivot: minimal |value|, ties by smallest row then column.
        int pr = -1, pc = -1;
        BigInt pv;
        for (int r : live_rows)
            for (const auto& [c, v] : row[r]) {
                BigInt a = abs_val(v);
                if (pr < 0 || a < pv) {
                    pr = r;
                    pc = c;
                    pv = a;
                }
            }
        if (pr < 0) break;

        while (true) {
            // Column Euclid: leave a single nonzero in column pc.
            while (col_rows[pc].size() > 1) {
                int best = -1;
                BigInt bestv;
                for (int r : col_rows[pc]) {
                    BigInt a = abs_val(row[r].at(pc));
                    if (best < 0 || a < bestv || (a == bestv && r < best)) {
                        best = r;
                        bestv = a;
                    }
                }
                pr = best;
                const BigInt p = row[pr].at(pc);
                std::vector<int> others(col_rows[pc].begin(), col_rows[pc].end());
                for (int r : others) {
                    if (r == pr) continue;
                    BigInt q = balanced_div(row[r].at(pc), p);
                    if (q != 0) row_axpy(r, pr, q);
                }
            }
            pr = *col_rows[pc].begin();

            // Row phase: column pc is clean, so subtracting multiples of
            // column pc only changes row pr.
            bool moved = false;
            std::vector<int> rcols;
            for (const auto& [c, v] : row[pr]) {
                (void)v;
                if (c != pc) rcols.push_back(c);
            }
            for (int c : rcols) {
                BigInt q = balanced_div(row[pr].at(c), row[pr].at(pc));
                BigInt rem = row[pr].at(c) - q * row[pr].at(pc);
                put(pr, c, rem);
                if (rem != 0) {
                    pc = c;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;

            const BigInt p = abs_val(row[pr].at(pc));
            bool fixed = false;
            for (int r : live_rows) {
                if (r == pr || row[r].empty()) continue;
                for (const auto& [c, v] : row[r])
                    if (v % p != 0) {
                        row_axpy(pr, r, BigInt(-1));  // row pr += row r
                        fixed = true;
                        break;
                    }
                if (fixed) break;
            }
            if (!fixed) break;
        }

        factors.push_back(abs_val(row[pr].at(pc)));
        std::vector<int> rcols;
        for (const auto& [c, v] : row[pr]) {
            (void)v;
            rcols.push_back(c);
        }
        for (int c : rcols) put(pr, c, BigInt(0));
    }

    chain_normalize(factors);
    SmithResult out;
    out.rank = static_cast<int>(factors.size());
    out.invariant_factors = std::move(factors);
    return out;
}

}  // namespace qhx
