#pragma once

#include "dbx/parse.hpp"
#include "dbx/poly.hpp"
#include "dbx/vfield.hpp"

#include <random>
#include <vector>

namespace dbx::testsupport {

inline Poly P(std::string_view text) { return parse_polynomial(text); }

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_abs = 6) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, 4);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Rational random_nonzero_rational(Rng& rng, int max_abs = 6) {
    for (;;) {
        Rational q = random_rational(rng, max_abs);
        if (!is_zero(q))
            return q;
    }
}

inline Poly random_poly(Rng& rng, unsigned max_degree, unsigned terms = 4) {
    Poly p;
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    for (unsigned i = 0; i < terms; ++i) {
        unsigned d = deg(rng);
        std::uniform_int_distribution<unsigned> ex(0, d);
        unsigned e = ex(rng);
        p.add_term({e, d - e}, random_rational(rng));
    }
    return p;
}

inline Poly random_nonzero_poly(Rng& rng, unsigned max_degree, unsigned terms = 4) {
    for (;;) {
        Poly p = random_poly(rng, max_degree, terms);
        if (!p.is_zero())
            return p;
    }
}

inline Poly random_nonconstant_poly(Rng& rng, unsigned max_degree, unsigned terms = 4) {
    for (;;) {
        Poly p = random_poly(rng, max_degree, terms);
        if (p.degree() > 0)
            return p;
    }
}

// Independent determinant oracle: plain cofactor expansion, kept separate
// from the library's Bareiss path on purpose.
inline Poly cofactor_expansion_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return Poly(Rational(1));
    if (n == 1)
        return m[0][0];
    Poly det;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * cofactor_expansion_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// Field with a prescribed invariant curve f:
// X = (g f_y + f h1) d/dx + (-g f_x + f h2) d/dy, so X(f) = f (h1 f_x + h2 f_y).
inline VectorField field_with_invariant_curve(const Poly& f, const Poly& g,
                                              const Poly& h1, const Poly& h2) {
    Poly a = g * derivative(f, Var::y) + f * h1;
    Poly b = -(g * derivative(f, Var::x)) + f * h2;
    return make_vector_field(a, b);
}

// Paper test fields.
inline VectorField vulpe_field(const Rational& t, const Rational& b) {
    // (2t^2 - 2x^2) d/dx + (b - 4xy - 2t^3 y^2) d/dy
    Poly x = Poly::var(Var::x), y = Poly::var(Var::y);
    Poly a = Poly(Rational(2) * t * t) - Rational(2) * (x * x);
    Poly bb = Poly(b) - Rational(4) * (x * y) - Rational(2) * t * t * t * (y * y);
    return make_vector_field(a, bb);
}

inline VectorField dana_field(const Rational& t, const Rational& b, const Rational& d) {
    // (-y - b x^2 - d y^2) d/dx + (x + (t-b) xy) d/dy
    Poly x = Poly::var(Var::x), y = Poly::var(Var::y);
    Poly a = -y - b * (x * x) - d * (y * y);
    Poly bb = x + (t - b) * (x * y);
    return make_vector_field(a, bb);
}

} // namespace dbx::testsupport
