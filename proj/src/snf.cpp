// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fcspec {

namespace {

using Mat = std::vector<std::vector<long long>>;

long long checked_mul(long long a, long long b) {
    const __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX / 2 || p < INT64_MIN / 2)
        throw std::overflow_error("integer overflow in lattice reduction");
    return static_cast<long long>(p);
}

void sub_scaled_column(Mat& m, std::size_t dst, std::size_t src, long long q) {
    for (auto& row : m) row[dst] -= checked_mul(q, row[src]);
}

void swap_columns(Mat& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

// Basis of the integer kernel of B (as columns of the returned matrix).
Mat integer_kernel(Mat B, std::size_t cols) {
    const std::size_t rows = B.size();
    Mat V(cols, std::vector<long long>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) V[i][i] = 1;

    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < rows && pivot_col < cols; ++r) {
        // reduce row r over columns >= pivot_col to a single nonzero entry
        while (true) {
            std::size_t best = cols;
            for (std::size_t c = pivot_col; c < cols; ++c)
                if (B[r][c] != 0 && (best == cols || std::llabs(B[r][c]) < std::llabs(B[r][best])))
                    best = c;
            if (best == cols) break;  // row r already zero here
            if (best != pivot_col) {
                swap_columns(B, best, pivot_col);
                swap_columns(V, best, pivot_col);
            }
            bool clean = true;
            for (std::size_t c = pivot_col + 1; c < cols; ++c) {
                if (B[r][c] == 0) continue;
                const long long q = B[r][c] / B[r][pivot_col];
                if (q != 0) {
                    sub_scaled_column(B, c, pivot_col, q);
                    sub_scaled_column(V, c, pivot_col, q);
                }
                if (B[r][c] != 0) clean = false;
            }
            if (clean) {
                ++pivot_col;
                break;
            }
        }
    }
    Mat kernel;
    for (std::size_t c = pivot_col; c < cols; ++c) {
        std::vector<long long> col(cols);
        for (std::size_t i = 0; i < cols; ++i) col[i] = V[i][c];
        kernel.push_back(std::move(col));
    }
    return kernel;
}

}  // namespace

std::vector<std::vector<long long>> congruence_kernel(
    const std::vector<std::vector<long long>>& A, const std::vector<long long>& row_moduli,
    std::size_t n_cols) {
    const std::size_t rows = A.size();
    Mat B(rows, std::vector<long long>(n_cols + rows, 0));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < n_cols; ++c) B[r][c] = A[r][c] % row_moduli[r];
        B[r][n_cols + r] = row_moduli[r];
    }
    Mat kernel = integer_kernel(std::move(B), n_cols + rows);
    std::vector<std::vector<long long>> out;
    for (const auto& col : kernel) {
        std::vector<long long> v(col.begin(), col.begin() + static_cast<long>(n_cols));
        bool nonzero = false;
        for (auto x : v) nonzero |= (x != 0);
        if (nonzero) out.push_back(std::move(v));
    }
    return out;
}

CyclicDecomposition cyclic_decomposition(const std::vector<std::vector<long long>>& gens,
                                         const std::vector<long long>& moduli) {
    CyclicDecomposition out;
    if (gens.empty()) return out;
    const std::size_t g = gens.size();
    const std::size_t coords = moduli.size();

    // kernel of Z^g -> product group, e_t -> gens[t]
    Mat A(coords, std::vector<long long>(g));
    for (std::size_t c = 0; c < coords; ++c)
        for (std::size_t t = 0; t < g; ++t) A[c][t] = gens[t][c] % moduli[c];
    Mat rel = congruence_kernel(A, moduli, g);
    if (rel.empty()) throw std::logic_error("finite subgroup must have a full-rank relation lattice");

    // diagonalize the relation matrix, tracking the inverse row transform
    const std::size_t s = rel.size();
    Mat B(g, std::vector<long long>(s));
    for (std::size_t c = 0; c < s; ++c)
        for (std::size_t i = 0; i < g; ++i) B[i][c] = rel[c][i];
    Mat Uinv(g, std::vector<long long>(g, 0));
    for (std::size_t i = 0; i < g; ++i) Uinv[i][i] = 1;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(B[a], B[b]);
        swap_columns(Uinv, a, b);
    };
    // row_a -= q * row_b  corresponds to  col_b += q * col_a  on Uinv
    auto sub_scaled_row = [&](std::size_t a, std::size_t b, long long q) {
        for (std::size_t c = 0; c < s; ++c) B[a][c] -= checked_mul(q, B[b][c]);
        for (std::size_t i = 0; i < g; ++i) Uinv[i][b] += checked_mul(q, Uinv[i][a]);
    };
    auto negate_row = [&](std::size_t a) {
        for (std::size_t c = 0; c < s; ++c) B[a][c] = -B[a][c];
        for (std::size_t i = 0; i < g; ++i) Uinv[i][a] = -Uinv[i][a];
    };

    std::vector<long long> diag(g, 0);
    for (std::size_t t = 0; t < g; ++t) {
        while (true) {
            std::size_t bi = g, bj = s;
            for (std::size_t i = t; i < g; ++i)
                for (std::size_t j = t; j < s; ++j)
                    if (B[i][j] != 0 && (bi == g || std::llabs(B[i][j]) < std::llabs(B[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == g) throw std::logic_error("relation lattice is not full rank");
            if (bi != t) swap_rows(bi, t);
            if (bj != t) {
                swap_columns(B, bj, t);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < g; ++i) {
                if (B[i][t] == 0) continue;
                const long long q = B[i][t] / B[t][t];
                if (q != 0) sub_scaled_row(i, t, q);
                if (B[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < s; ++j) {
                if (B[t][j] == 0) continue;
                const long long q = B[t][j] / B[t][t];
                if (q != 0) sub_scaled_column(B, j, t, q);
                if (B[t][j] != 0) clean = false;
            }
            if (clean && B[t][t] != 0) break;
        }
        if (B[t][t] < 0) negate_row(t);
        diag[t] = B[t][t];
    }

    for (std::size_t t = 0; t < g; ++t) {
        if (diag[t] <= 1) continue;
        std::vector<long long> combo(g);
        for (std::size_t i = 0; i < g; ++i) combo[i] = Uinv[i][t];
        out.combos.push_back(std::move(combo));
        out.orders.push_back(diag[t]);
    }
    return out;
}

}  // namespace fcspec
