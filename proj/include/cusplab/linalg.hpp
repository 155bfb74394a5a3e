#ifndef CUSPLAB_LINALG_HPP
#define CUSPLAB_LINALG_HPP

// Rank and kernel computations for small matrices with exact entries.
// Polynomial entries are handled division-free (Laplace determinants and
// adjugates); rank is over the fraction field of the coefficient ring.

#include <vector>

#include "cusplab/poly.hpp"

namespace cusplab {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline Polynomial poly_det(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw Error("empty matrix");
    const auto table = m[0][0].table();
    if (n == 1) return m[0][0];
    Polynomial acc = Polynomial::zero(table);
    // Laplace along the first row; matrices here are at most 5x5.
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix sub(n - 1, std::vector<Polynomial>(n - 1, Polynomial::zero(table)));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        Polynomial term = m[0][j] * poly_det(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Largest r such that some r x r minor is nonzero.
inline int poly_rank(const PolyMatrix& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    const auto table = m[0][0].table();

    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    auto subsets = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (cur.size() == k) { out.push_back(cur); return; }
            for (std::size_t i = start; i < n; ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };

    const std::size_t maxr = std::min(rows, cols);
    for (std::size_t r = maxr; r >= 1; --r) {
        for (const auto& rs : subsets(rows, r)) {
            for (const auto& cs : subsets(cols, r)) {
                PolyMatrix sub(r, std::vector<Polynomial>(r, Polynomial::zero(table)));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) sub[i][j] = m[rs[i]][cs[j]];
                if (!poly_det(sub).is_zero()) return static_cast<int>(r);
            }
        }
    }
    return 0;
}

// For a symmetric n x n matrix of rank n-1: a nonzero adjugate column spans
// the kernel.
inline std::vector<Polynomial> poly_kernel_vector(const PolyMatrix& m) {
    const std::size_t n = m.size();
    const auto table = m[0][0].table();
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<Polynomial> v;
        bool nonzero = false;
        for (std::size_t row = 0; row < n; ++row) {
            // adj(m)[row][col] = (-1)^{row+col} * minor(m, col, row)
            PolyMatrix sub(n - 1, std::vector<Polynomial>(n - 1, Polynomial::zero(table)));
            std::size_t ri = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col) continue;
                std::size_t ci = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == row) continue;
                    sub[ri][ci++] = m[i][j];
                }
                ++ri;
            }
            Polynomial cof = poly_det(sub);
            if ((row + col) % 2 == 1) cof = -cof;
            if (!cof.is_zero()) nonzero = true;
            v.push_back(cof);
        }
        if (nonzero) return v;
    }
    throw Error("kernel vector requested for a full-rank matrix");
}

// Rank of a matrix with entries in the field Q(eps), by Gaussian elimination.
inline int cyclo_rank(std::vector<std::vector<Cyclo>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        const Cyclo inv = inverse(m[row][col]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const Cyclo factor = m[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace cusplab

#endif
