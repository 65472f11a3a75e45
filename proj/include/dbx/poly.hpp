#pragma once

#include "dbx/errors.hpp"
#include "dbx/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace dbx {

enum class Var { x, y };

struct Monomial {
    unsigned ex = 0;
    unsigned ey = 0;

    unsigned total_degree() const { return ex + ey; }
    bool divides(const Monomial& m) const { return ex <= m.ex && ey <= m.ey; }

    Monomial operator*(const Monomial& m) const { return {ex + m.ex, ey + m.ey}; }
    // Quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const { return {ex - m.ex, ey - m.ey}; }

    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic with x > y, descending, so that map iteration visits
// the leading term first. This is the term order used everywhere.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() > b.total_degree();
        return a.ex > b.ex;
    }
};

// Returns true when a > b in graded lex with x > y.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
    return GrlexDesc{}(a, b);
}

/// Bivariate polynomial in x, y over Q. Sparse map representation; no zero
/// coefficients are ever stored, so the map is always canonical and equality
/// is structural.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexDesc>;

    Poly() = default;
    explicit Poly(Rational constant);
    explicit Poly(long constant) : Poly(Rational(constant)) {}

    static Poly monomial(Monomial m, Rational coeff = Rational(1));
    static Poly var(Var v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return degree() <= 0; }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    // Leading term in graded lex (undefined on zero).
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    Poly operator*(const Rational& c) const;
    friend Poly operator*(const Rational& c, const Poly& p) { return p * c; }

    bool operator==(const Poly&) const = default;

    // Adds c*m, erasing the term if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

  private:
    TermMap terms_;
};

Poly pow(const Poly& p, unsigned k);

Poly derivative(const Poly& p, Var v);

Rational evaluate(const Poly& p, const Rational& x0, const Rational& y0);

/// Exact quotient p/q, or nullopt when q does not divide p.
/// Throws math_error on q = 0.
std::optional<Poly> exact_divide(const Poly& p, const Poly& q);

/// Greatest m >= 0 with f^m | p. Throws math_error on p = 0 (multiplicity
/// undefined) and on constant f.
unsigned factor_multiplicity(const Poly& p, const Poly& f);

/// p(x + x0, y + y0): p rewritten in coordinates centered at (x0, y0).
Poly translate_to_point(const Poly& p, const Rational& x0, const Rational& y0);

/// Homogeneous part of total degree k.
Poly homogeneous_part(const Poly& p, unsigned k);

struct CanonicalForm {
    Poly primitive;    // integer coefficients, content 1, positive leading coeff
    Rational constant; // p = constant * primitive
};

/// Throws math_error on the zero polynomial.
CanonicalForm canonical_form(const Poly& p);

/// Convenience: the primitive part alone; zero maps to zero.
Poly canonicalized(const Poly& p);

/// GCD in canonical form, via a primitive remainder sequence over (Z[y])[x].
/// Throws math_error when both arguments are zero.
Poly gcd(const Poly& p, const Poly& q);

/// Graded-lex descending, explicit '*' and '^'; reparses to the same value.
std::string to_string(const Poly& p);

/// Reduced quotient of polynomials: den != 0, gcd(num, den) constant,
/// den canonical.
struct RationalFunction {
    Poly num;
    Poly den;

    bool operator==(const RationalFunction&) const = default;
};

/// Reduces and normalizes; throws math_error on zero denominator.
RationalFunction make_rational_function(Poly num, Poly den);

std::string to_string(const RationalFunction& r);

} // namespace dbx
