#include "dbx/extactic.hpp"

#include <algorithm>

namespace dbx {

std::vector<Monomial> extactic_basis(unsigned n) {
    // Generated directly in graded-lex descending order.
    std::vector<Monomial> basis;
    basis.reserve((n + 1) * (n + 2) / 2);
    for (unsigned deg = n + 1; deg-- > 0;)
        for (unsigned ex = deg + 1; ex-- > 0;)
            basis.push_back({ex, deg - ex});
    return basis;
}

void validate_generator_index(const GeneratorIndex& idx, unsigned n) {
    const std::size_t l = (n + 1) * (n + 2) / 2;
    if (idx.ks.size() != l)
        throw math_error("generator index must have length " + std::to_string(l));
    for (std::size_t i = 1; i < idx.ks.size(); ++i)
        if (idx.ks[i - 1] >= idx.ks[i])
            throw math_error("generator index must be strictly increasing");
}

std::vector<std::vector<Poly>> derivation_rows(const VectorField& X, unsigned n,
                                               unsigned k_max) {
    auto basis = extactic_basis(n);
    std::vector<std::vector<Poly>> rows;
    rows.reserve(k_max + 1);
    std::vector<Poly> row;
    row.reserve(basis.size());
    for (const auto& m : basis)
        row.push_back(Poly::monomial(m));
    rows.push_back(row);
    for (unsigned k = 1; k <= k_max; ++k) {
        for (auto& entry : row)
            entry = derive(X, entry);
        rows.push_back(row);
    }
    return rows;
}

namespace {

Poly laplace_determinant(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    Poly det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero())
            continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * laplace_determinant(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

} // namespace

Poly poly_determinant(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0)
        return Poly(Rational(1));
    for (const auto& row : m)
        if (row.size() != n)
            throw math_error("determinant of a non-square matrix");

    // Factor rational content out of each row; Bareiss then runs on
    // integer-cleared entries.
    Rational scale(1);
    for (auto& row : m) {
        Integer num_gcd(0), den_lcm(1);
        for (const auto& p : row)
            for (const auto& [mon, c] : p.terms()) {
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                        c.get_num().get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                        c.get_den().get_mpz_t());
            }
        if (num_gcd == 0)
            return Poly(); // a zero row
        Rational u(num_gcd, den_lcm);
        u.canonicalize();
        scale *= u;
        Rational inv = Rational(1) / u;
        for (auto& p : row)
            p = p * inv;
    }

    if (n <= 3)
        return laplace_determinant(m) * scale;

    // Bareiss: m[i][j] <- (m[k][k]*m[i][j] - m[i][k]*m[k][j]) / prev_pivot;
    // the division is exact over any integral domain.
    int sign = 1;
    Poly prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero())
            ++pivot;
        if (pivot == n)
            return Poly();
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = t.is_zero() ? Poly() : *exact_divide(t, prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1] * scale;
    return sign < 0 ? -det : det;
}

Poly extactic_curve(const VectorField& X, unsigned n) {
    if (n < 1)
        throw math_error("extactic curve needs n >= 1");
    const std::size_t l = (n + 1) * (n + 2) / 2;
    return poly_determinant(derivation_rows(X, n, static_cast<unsigned>(l - 1)));
}

Poly extactic_ideal_generator(const VectorField& X, unsigned n,
                              const GeneratorIndex& idx) {
    validate_generator_index(idx, n);
    auto rows = derivation_rows(X, n, idx.ks.back());
    std::vector<std::vector<Poly>> selected;
    selected.reserve(idx.ks.size());
    for (unsigned k : idx.ks)
        selected.push_back(rows[k]);
    return poly_determinant(std::move(selected));
}

std::optional<unsigned> rational_first_integral_degree(const VectorField& X,
                                                       unsigned n_max) {
    if (n_max < 1)
        throw math_error("rational_first_integral_degree needs n_max >= 1");
    bool prev_nonzero = true; // E_0 = 1
    for (unsigned n = 1; n <= n_max; ++n) {
        bool zero = extactic_curve(X, n).is_zero();
        if (zero && prev_nonzero)
            return n;
        prev_nonzero = !zero;
    }
    return std::nullopt;
}

unsigned budget(const VectorField& X, unsigned l) {
    if (l < 1)
        throw math_error("budget needs l >= 1");
    Integer L(l), d(X.d);
    Integer s = d * (L * L * L * L + 6 * L * L * L + 11 * L * L + 6 * L);
    Integer num;
    if (infinity_data(X).invariant)
        num = s - (L * L * L * L + 2 * L * L * L - L * L + 6 * L);
    else
        num = s - (2 * L * L * L * L + 8 * L * L * L + 10 * L * L + 4 * L);
    if (num <= 0)
        return 0;
    if (num % 8 != 0)
        throw math_error("budget numerator not divisible by 8");
    Integer q = num / 8;
    return static_cast<unsigned>(q.get_ui());
}

bool budget_check(const VectorField& X, unsigned l, unsigned weighted_sum) {
    return weighted_sum >= budget(X, l);
}

} // namespace dbx
