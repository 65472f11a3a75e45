#include "dbx/modsolve.hpp"

#include <cstdint>
#include <vector>

namespace dbx {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 invmod(u64 a, u64 p) {
    // Extended Euclid; p prime, a != 0 mod p.
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0)
        t += static_cast<long long>(p);
    return static_cast<u64>(t);
}

struct ModRref {
    bool inconsistent = false;
    std::vector<unsigned> pivot_cols;
    std::vector<u64> particular; // free variables zero; pivot values
};

// RREF of [a|b] mod p; a is rows x cols, augmented column last.
ModRref mod_rref(std::vector<std::vector<u64>> m, std::size_t cols, u64 p) {
    ModRref out;
    const std::size_t rows = m.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        u64 inv = invmod(m[r][c], p);
        for (std::size_t j = c; j <= cols; ++j)
            m[r][j] = mulmod(m[r][j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            u64 f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) {
                u64 sub = mulmod(f, m[r][j], p);
                m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + p - sub;
            }
        }
        out.pivot_cols.push_back(static_cast<unsigned>(c));
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0) {
            out.inconsistent = true;
            return out;
        }
    out.particular.assign(cols, 0);
    for (std::size_t i = 0; i < out.pivot_cols.size(); ++i)
        out.particular[out.pivot_cols[i]] = m[i][cols];
    return out;
}

// n/d from a residue mod M with |n|, d <= sqrt(M/2); nullopt on failure.
std::optional<Rational> rational_reconstruct(const Integer& residue, const Integer& M) {
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(M / 2).get_mpz_t());
    Integer r0 = M, r1 = residue;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0)
        return std::nullopt;
    if (sgn(t1) < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (t1 > bound)
        return std::nullopt;
    Rational q(r1, t1);
    q.canonicalize();
    return q;
}

bool lex_less(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    return a < b;
}

} // namespace

ModularSolveResult modular_solve(const QMatrix& a, const QVector& b,
                                 unsigned max_primes) {
    ModularSolveResult result;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    if (rows == 0 || cols == 0) {
        for (const auto& e : b)
            if (!is_zero(e)) {
                result.status = ModularSolveStatus::inconsistent;
                return result;
            }
        result.status = ModularSolveStatus::solved;
        result.solution.assign(cols, Rational(0));
        return result;
    }

    // Integer-cleared copy of [a|b], row by row.
    std::vector<std::vector<Integer>> zi(rows, std::vector<Integer>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer lcm(1);
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a[i][j].get_den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), b[i].get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            Rational scaled = a[i][j] * lcm;
            zi[i][j] = scaled.get_num();
        }
        Rational scaled = b[i] * lcm;
        zi[i][cols] = scaled.get_num();
    }

    Integer prime_seed;
    mpz_ui_pow_ui(prime_seed.get_mpz_t(), 2, 62);

    std::vector<unsigned> structure; // pivot columns of the accepted class
    std::vector<Integer> residues(cols, Integer(0));
    Integer modulus(1);
    unsigned inconsistent_votes = 0, total_primes = 0;
    Integer p_mpz = prime_seed;

    while (total_primes < max_primes) {
        mpz_nextprime(p_mpz.get_mpz_t(), p_mpz.get_mpz_t());
        u64 p = p_mpz.get_ui();
        ++total_primes;

        std::vector<std::vector<u64>> m(rows, std::vector<u64>(cols + 1));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j <= cols; ++j)
                m[i][j] = mpz_fdiv_ui(zi[i][j].get_mpz_t(), p);

        ModRref rr = mod_rref(std::move(m), cols, p);
        if (rr.inconsistent) {
            if (++inconsistent_votes >= 3 && modulus == 1) {
                result.status = ModularSolveStatus::inconsistent;
                result.primes_used = total_primes;
                return result;
            }
            continue;
        }

        // Pivot structures mod bad primes drift lexicographically later than
        // the rational structure; keep the lex-smallest class seen.
        if (structure.empty() || lex_less(rr.pivot_cols, structure)) {
            structure = rr.pivot_cols;
            modulus = 1;
            for (auto& r : residues)
                r = 0;
        } else if (rr.pivot_cols != structure) {
            continue;
        }

        // CRT-combine this prime into the accumulated residues.
        Integer p_big(p_mpz);
        if (modulus == 1) {
            for (std::size_t j = 0; j < cols; ++j)
                residues[j] = Integer(rr.particular[j]);
            modulus = p_big;
        } else {
            Integer m_inv;
            mpz_invert(m_inv.get_mpz_t(), modulus.get_mpz_t(), p_big.get_mpz_t());
            Integer new_modulus = modulus * p_big;
            for (std::size_t j = 0; j < cols; ++j) {
                Integer target(rr.particular[j]);
                Integer diff = (target - residues[j]) % p_big;
                if (sgn(diff) < 0)
                    diff += p_big;
                Integer k = (diff * m_inv) % p_big;
                residues[j] = residues[j] + k * modulus;
            }
            modulus = std::move(new_modulus);
        }

        // Attempt reconstruction and exact verification.
        QVector candidate(cols);
        bool ok = true;
        for (std::size_t j = 0; j < cols && ok; ++j) {
            auto q = rational_reconstruct(residues[j], modulus);
            if (!q)
                ok = false;
            else
                candidate[j] = *q;
        }
        if (!ok)
            continue;
        bool verified = true;
        for (std::size_t i = 0; i < rows && verified; ++i) {
            Rational dot(0);
            for (std::size_t j = 0; j < cols; ++j)
                if (!is_zero(candidate[j]))
                    dot += Rational(zi[i][j]) * candidate[j];
            verified = dot == Rational(zi[i][cols]);
        }
        if (verified) {
            result.status = ModularSolveStatus::solved;
            result.solution = std::move(candidate);
            result.primes_used = total_primes;
            return result;
        }
    }

    result.status = inconsistent_votes >= 3 ? ModularSolveStatus::inconsistent
                                            : ModularSolveStatus::failed;
    result.primes_used = total_primes;
    return result;
}

} // namespace dbx
