#include "dbx/linalg.hpp"

#include <cstddef>

namespace dbx {

RrefResult rref_in_place(QMatrix& m) {
    RrefResult res;
    if (m.empty())
        return res;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && is_zero(m[pivot][c]))
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c]))
                continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        res.pivot_cols.push_back(static_cast<unsigned>(c));
        ++r;
    }
    res.rank = static_cast<unsigned>(r);
    return res;
}

unsigned rank(QMatrix m) { return rref_in_place(m).rank; }

std::vector<QVector> nullspace(const QMatrix& m) {
    if (m.empty())
        return {};
    const std::size_t cols = m[0].size();
    QMatrix r = m;
    RrefResult rr = rref_in_place(r);
    std::vector<bool> is_pivot(cols, false);
    for (unsigned c : rr.pivot_cols)
        is_pivot[c] = true;
    std::vector<QVector> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c])
            continue;
        QVector v(cols, Rational(0));
        v[free_c] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -r[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    QMatrix aug(rows, QVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    RrefResult rr = rref_in_place(aug);
    // Inconsistent iff some pivot lands in the augmented column.
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == cols)
        return std::nullopt;
    QVector x(cols, Rational(0));
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
        x[rr.pivot_cols[i]] = aug[i][cols];
    return x;
}

std::optional<QVector> solve_min_norm(const QMatrix& a, const QVector& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    QMatrix aug(rows, QVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    RrefResult rr = rref_in_place(aug);
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == cols)
        return std::nullopt;
    // Nonzero RREF rows give an equivalent full-row-rank system a' x = b'.
    QMatrix ap;
    QVector bp;
    for (unsigned i = 0; i < rr.rank; ++i) {
        ap.emplace_back(aug[i].begin(), aug[i].begin() + static_cast<long>(cols));
        bp.push_back(aug[i][cols]);
    }
    if (ap.empty())
        return QVector(cols, Rational(0));
    // Gram system (a' a'^T) z = b'; x = a'^T z is the minimum-norm solution.
    const std::size_t r = ap.size();
    QMatrix gram(r, QVector(r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < cols; ++k)
                gram[i][j] += ap[i][k] * ap[j][k];
    auto z = solve(gram, bp);
    if (!z)
        return std::nullopt; // cannot happen for full-row-rank a'
    QVector x(cols, Rational(0));
    for (std::size_t k = 0; k < cols; ++k)
        for (std::size_t i = 0; i < r; ++i)
            x[k] += ap[i][k] * (*z)[i];
    return x;
}

} // namespace dbx
