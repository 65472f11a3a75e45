#pragma once

#include "dbx/linalg.hpp"

namespace dbx {

enum class ModularSolveStatus {
    solved,       // exact rational solution found and verified
    inconsistent, // no solution mod several independent primes
    failed        // reconstruction did not converge within the prime budget
};

struct ModularSolveResult {
    ModularSolveStatus status = ModularSolveStatus::failed;
    QVector solution;      // particular solution (free variables zero)
    unsigned primes_used = 0;
};

/// Solves a x = b over Q by multi-prime elimination, CRT and rational
/// reconstruction. Any returned solution has been verified exactly, so
/// `solved` is unconditionally trustworthy; `inconsistent` rests on
/// agreement of several primes.
ModularSolveResult modular_solve(const QMatrix& a, const QVector& b,
                                 unsigned max_primes = 48);

} // namespace dbx
