#pragma once

#include "nhf/exact_vector.hpp"

#include <vector>

namespace nhf::detail {

// Basis of the row space of vs (exact Gaussian elimination).
inline std::vector<ExactVector> row_space_basis(const std::vector<ExactVector>& vs) {
    std::vector<ExactVector> rows = vs;
    std::vector<ExactVector> basis;
    if (rows.empty()) return basis;
    std::size_t dim = rows[0].dim();
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        QExt inv = rows[r][col].inverse();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            QExt f = rows[i][col] * inv;
            for (std::size_t c = 0; c < dim; ++c) rows[i][c] -= f * rows[r][c];
        }
        basis.push_back(rows[r]);
        ++r;
    }
    return basis;
}

// Basis of { w in span(space) : <w, c> = 0 for all c in constraints }.
inline std::vector<ExactVector> kernel_within(const std::vector<ExactVector>& space,
                                              const std::vector<ExactVector>& constraints) {
    std::size_t k = space.size();
    if (k == 0) return {};
    // coefficient matrix A[j][i] = <space_i, constraints_j>
    std::vector<std::vector<QExt>> A;
    for (const auto& c : constraints) {
        std::vector<QExt> row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = inner(space[i], c);
        A.push_back(std::move(row));
    }
    // kernel of A by Gauss-Jordan
    std::size_t m = A.size();
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < k && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && A[piv][col].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(A[r], A[piv]);
        QExt inv = A[r][col].inverse();
        for (std::size_t c2 = 0; c2 < k; ++c2) A[r][c2] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || A[i][col].is_zero()) continue;
            QExt f = A[i][col];
            for (std::size_t c2 = 0; c2 < k; ++c2) A[i][c2] -= f * A[r][c2];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++r;
    }
    std::vector<char> is_pivot(k, 0);
    for (int pc : pivot_col) is_pivot[static_cast<std::size_t>(pc)] = 1;
    std::vector<ExactVector> out;
    for (std::size_t free_col = 0; free_col < k; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<QExt> x(k);
        x[free_col] = QExt(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            x[static_cast<std::size_t>(pivot_col[i])] = -A[i][free_col];
        ExactVector w(space[0].dim());
        for (std::size_t i = 0; i < k; ++i)
            if (!x[i].is_zero()) w = w + (x[i] * space[i]);
        out.push_back(std::move(w));
    }
    return out;
}

inline bool in_span(const std::vector<ExactVector>& basis, const ExactVector& v) {
    if (v.is_zero()) return true;
    std::vector<ExactVector> with = basis;
    with.push_back(v);
    return row_space_basis(with).size() == row_space_basis(basis).size();
}

} // namespace nhf::detail
