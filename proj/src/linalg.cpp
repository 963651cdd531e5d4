// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "decmin/linalg.hpp"

namespace decmin::linalg {

namespace {

// Reduce m to row echelon form in place; returns the pivot column of each
// pivot row.
std::vector<int> echelon(Matrix& m, int cols) {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int r = row; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        const Rat lead = m[row][col];
        for (int c = col; c < static_cast<int>(m[row].size()); ++c) m[row][c] /= lead;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat factor = m[r][col];
            for (int c = col; c < static_cast<int>(m[r].size()); ++c)
                m[r][c] -= factor * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

int rank(Matrix m) {
    if (m.empty()) return 0;
    return static_cast<int>(echelon(m, static_cast<int>(m[0].size())).size());
}

std::optional<RatVec> solve_square(Matrix a, RatVec b) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = echelon(a, n);
    if (static_cast<int>(pivots.size()) < n) return std::nullopt;
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
    return x;
}

std::vector<RatVec> nullspace(Matrix m, int cols) {
    std::vector<int> pivots = echelon(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(cols, Rat(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (r < m.size()) v[pivots[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVec primitive(const RatVec& v) {
    Int lcm = 1;
    for (const Rat& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    Int gcd = 0;
    IntVec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = v[i].get_num() * (lcm / v[i].get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled[i].get_mpz_t());
    }
    RatVec out(v.size(), Rat(0));
    if (gcd == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(scaled[i] / gcd);
    return out;
}

}  // namespace decmin::linalg
