#pragma once

#include "dbx/rational.hpp"

#include <optional>
#include <vector>

namespace dbx {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

struct RrefResult {
    unsigned rank = 0;
    std::vector<unsigned> pivot_cols; // one per pivot row, ascending
};

/// Reduced row echelon form, in place. Exact; deterministic pivot choice
/// (first nonzero entry scanning down each column).
RrefResult rref_in_place(QMatrix& m);

unsigned rank(QMatrix m);

/// Basis of the right nullspace {x : m x = 0}, one vector per free column,
/// ordered by free-column index.
std::vector<QVector> nullspace(const QMatrix& m);

/// Particular solution of a x = b with free variables set to zero, or
/// nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

/// Minimum-Euclidean-norm solution of a x = b, or nullopt when inconsistent.
/// Deterministic and independent of row order redundancy.
std::optional<QVector> solve_min_norm(const QMatrix& a, const QVector& b);

} // namespace dbx
