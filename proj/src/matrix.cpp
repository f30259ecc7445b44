#include "galmod/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace galmod {

namespace {

// rows[a] += q * rows[b]
void row_addmul(IntMat& m, int a, int b, Int q) {
    if (q == 0) return;
    for (size_t j = 0; j < m[a].size(); ++j) m[a][j] += q * m[b][j];
}

void row_neg(IntMat& m, int a) {
    for (auto& x : m[a]) x = -x;
}

}  // namespace

HnfResult hnf(const IntMat& rows, int ncols) {
    int n = static_cast<int>(rows.size());
    IntMat a = rows;
    for (auto& r : a)
        if (static_cast<int>(r.size()) != ncols)
            throw std::invalid_argument("hnf: ragged matrix");
    IntMat u(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;

    int row = 0;
    for (int col = 0; col < ncols && row < n; ++col) {
        // Euclidean elimination of column `col` below `row`.
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        std::swap(u[row], u[piv]);
        for (int i = row + 1; i < n; ++i) {
            while (a[i][col] != 0) {
                Int q = a[row][col] / a[i][col];
                row_addmul(a, row, i, -q);
                row_addmul(u, row, i, -q);
                std::swap(a[row], a[i]);
                std::swap(u[row], u[i]);
            }
        }
        if (a[row][col] < 0) { row_neg(a, row); row_neg(u, row); }
        // Reduce entries above the pivot into [0, pivot).
        for (int i = 0; i < row; ++i) {
            Int q = a[i][col] / a[row][col];
            if (a[i][col] - q * a[row][col] < 0) --q;
            row_addmul(a, i, row, -q);
            row_addmul(u, i, row, -q);
        }
        ++row;
    }

    HnfResult res;
    res.rank = row;
    res.h.assign(a.begin(), a.begin() + row);
    res.u = std::move(u);
    return res;
}

IntMat left_kernel(const IntMat& m, int ncols) {
    HnfResult r = hnf(m, ncols);
    IntMat ker(r.u.begin() + r.rank, r.u.end());
    return ker;
}

std::vector<Int> snf_diagonal(IntMat m) {
    int nr = static_cast<int>(m.size());
    int nc = nr ? static_cast<int>(m[0].size()) : 0;
    int dim = std::min(nr, nc);
    std::vector<Int> diag;

    auto col_addmul = [&](int a, int b, Int q) {
        if (q == 0) return;
        for (int i = 0; i < nr; ++i) m[i][a] += q * m[i][b];
    };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < nr; ++i) std::swap(m[i][a], m[i][b]);
    };

    int t = 0;
    while (t < dim) {
        // Smallest nonzero entry of the block becomes the pivot, so every
        // nonzero division remainder below is strictly smaller than it.
        int pi = -1, pj = -1;
        for (int i = t; i < nr; ++i)
            for (int j = t; j < nc; ++j)
                if (m[i][j] != 0 &&
                    (pi < 0 || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[t], m[pi]);
        col_swap(t, pj);

        bool dirty = false;
        for (int i = t + 1; i < nr; ++i) {
            if (m[i][t] == 0) continue;
            row_addmul(m, i, t, -(m[i][t] / m[t][t]));
            if (m[i][t] != 0) dirty = true;
        }
        if (dirty) continue;
        // Column t is clear below the pivot, so clearing the row only
        // touches row t and cannot reintroduce column entries.
        for (int j = t + 1; j < nc; ++j) {
            if (m[t][j] == 0) continue;
            col_addmul(j, t, -(m[t][j] / m[t][t]));
            if (m[t][j] != 0) dirty = true;
        }
        if (dirty) continue;
        ++t;
    }

    for (int i = 0; i < dim; ++i) diag.push_back(i < t ? std::llabs(m[i][i]) : 0);

    // Enforce the divisibility chain d_i | d_{i+1} by gcd/lcm swaps.
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            if (diag[j] == 0) continue;
            if (diag[i] == 0) { std::swap(diag[i], diag[j]); continue; }
            Int g = gcd_int(diag[i], diag[j]);
            Int l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

IntMat howell_mod(const IntMat& rows, int ncols, Int modulus) {
    if (modulus <= 0) throw std::invalid_argument("howell_mod: modulus must be positive");
    IntMat work;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != ncols)
            throw std::invalid_argument("howell_mod: ragged matrix");
        std::vector<Int> v(ncols);
        bool nz = false;
        for (int j = 0; j < ncols; ++j) {
            v[j] = mod_reduce(r[j], modulus);
            nz = nz || v[j] != 0;
        }
        if (nz) work.push_back(std::move(v));
    }

    auto combine = [&](std::vector<Int>& dst, Int x, const std::vector<Int>& a, Int y,
                       const std::vector<Int>& b) {
        for (int j = 0; j < ncols; ++j) {
            Int t = (mul_mod(mod_reduce(x, modulus), a[j], modulus) +
                     mul_mod(mod_reduce(y, modulus), b[j], modulus)) %
                    modulus;
            dst[j] = t;
        }
    };

    IntMat result;
    std::vector<Int> pivot_cols;
    for (int col = 0; col < ncols; ++col) {
        // Fold every row with a nonzero entry in this column into one.
        int lead = -1;
        for (size_t i = 0; i < work.size(); ++i) {
            if (work[i][col] == 0) continue;
            if (lead < 0) {
                lead = static_cast<int>(i);
                continue;
            }
            Int x, y;
            Int g = ext_gcd(work[lead][col], work[i][col], x, y);
            Int a = work[lead][col] / g;
            Int b = work[i][col] / g;
            std::vector<Int> merged(ncols);
            combine(merged, x, work[lead], y, work[i]);
            std::vector<Int> rest(ncols);
            combine(rest, a, work[i], -b, work[lead]);
            work[lead] = std::move(merged);
            work[i] = std::move(rest);
        }
        if (lead < 0) continue;
        Int g = work[lead][col];
        Int pivot = gcd_int(g, modulus);
        // Unit u mod modulus with u*g = pivot; exists because g/pivot is a
        // unit mod modulus/pivot.
        Int mp = modulus / pivot;
        Int u = mp == 1 ? 1 : inv_mod(mod_reduce(g / pivot, mp), mp);
        bool found = false;
        for (Int t = 0; t < modulus / mp && !found; ++t) {
            Int cand = u + t * mp;
            if (gcd_int(mod_reduce(cand, modulus) == 0 ? modulus : mod_reduce(cand, modulus),
                        modulus) == 1) {
                u = mod_reduce(cand, modulus);
                found = true;
            }
        }
        if (!found) throw std::logic_error("howell_mod: no unit multiplier found");
        std::vector<Int> prow(ncols);
        for (int j = 0; j < ncols; ++j) prow[j] = mul_mod(u, work[lead][j], modulus);
        if (prow[col] != pivot) throw std::logic_error("howell_mod: pivot normalization failed");
        // The annihilator of the pivot stays available for later columns.
        if (pivot > 1) {
            std::vector<Int> ann(ncols);
            for (int j = 0; j < ncols; ++j) ann[j] = mul_mod(modulus / pivot, prow[j], modulus);
            work[lead] = std::move(ann);
        } else {
            work[lead].assign(static_cast<size_t>(ncols), 0);
        }
        result.push_back(std::move(prow));
        pivot_cols.push_back(col);
    }

    // Reduce entries above each pivot into [0, pivot).
    for (size_t i = 0; i < result.size(); ++i)
        for (size_t j = i + 1; j < result.size(); ++j) {
            Int c = pivot_cols[j];
            Int p = result[j][static_cast<size_t>(c)];
            Int q = result[i][static_cast<size_t>(c)] / p;
            if (q == 0) continue;
            for (int t = 0; t < ncols; ++t)
                result[i][static_cast<size_t>(t)] = mod_reduce(
                    result[i][static_cast<size_t>(t)] -
                        mul_mod(q, result[j][static_cast<size_t>(t)], modulus),
                    modulus);
        }
    return result;
}

Int abs_det(IntMat m) {
    if (m.empty()) return 1;
    int n = static_cast<int>(m.size());
    if (static_cast<int>(m[0].size()) != n)
        throw std::invalid_argument("abs_det: matrix not square");
    HnfResult r = hnf(m, n);
    if (r.rank < n) return 0;
    Int det = 1;
    for (int i = 0; i < n; ++i) det *= r.h[i][i];
    return det < 0 ? -det : det;
}

}  // namespace galmod
