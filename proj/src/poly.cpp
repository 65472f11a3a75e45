#include "dbx/poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace dbx {

Poly::Poly(Rational constant) {
    if (!dbx::is_zero(constant))
        terms_.emplace(Monomial{0, 0}, std::move(constant));
}

Poly Poly::monomial(Monomial m, Rational coeff) {
    Poly p;
    if (!dbx::is_zero(coeff))
        p.terms_.emplace(m, std::move(coeff));
    return p;
}

Poly Poly::var(Var v) {
    return monomial(v == Var::x ? Monomial{1, 0} : Monomial{0, 1});
}

int Poly::degree() const {
    if (terms_.empty())
        return -1;
    // Grlex-descending iteration puts a maximal-degree term first.
    return static_cast<int>(terms_.begin()->first.total_degree());
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (dbx::is_zero(c))
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (dbx::is_zero(it->second))
            terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(m1 * m2, c1 * c2);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r;
    if (dbx::is_zero(c))
        return r;
    for (const auto& [m, coeff] : terms_)
        r.terms_.emplace(m, coeff * c);
    return r;
}

Poly pow(const Poly& p, unsigned k) {
    Poly result(Rational(1));
    Poly base = p;
    while (k > 0) {
        if (k & 1u)
            result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

Poly derivative(const Poly& p, Var v) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        if (v == Var::x && m.ex > 0)
            r.add_term({m.ex - 1, m.ey}, c * m.ex);
        else if (v == Var::y && m.ey > 0)
            r.add_term({m.ex, m.ey - 1}, c * m.ey);
    }
    return r;
}

namespace {

// pow table base^0 .. base^n
std::vector<Rational> rational_powers(const Rational& base, unsigned n) {
    std::vector<Rational> p(n + 1);
    p[0] = 1;
    for (unsigned i = 1; i <= n; ++i)
        p[i] = p[i - 1] * base;
    return p;
}

} // namespace

Rational evaluate(const Poly& p, const Rational& x0, const Rational& y0) {
    if (p.is_zero())
        return Rational(0);
    unsigned dx = 0, dy = 0;
    for (const auto& [m, c] : p.terms()) {
        dx = std::max(dx, m.ex);
        dy = std::max(dy, m.ey);
    }
    auto px = rational_powers(x0, dx);
    auto py = rational_powers(y0, dy);
    Rational acc(0);
    for (const auto& [m, c] : p.terms())
        acc += c * px[m.ex] * py[m.ey];
    return acc;
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& q) {
    if (q.is_zero())
        throw math_error("exact_divide: division by zero polynomial");
    Poly rem = p;
    Poly quot;
    // Every intermediate remainder of an exact division is a multiple of q,
    // so a leading-monomial mismatch proves non-divisibility.
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        const Monomial& lq = q.leading_monomial();
        if (!lq.divides(lm))
            return std::nullopt;
        Monomial m = lm / lq;
        Rational c = rem.leading_coefficient() / q.leading_coefficient();
        quot.add_term(m, c);
        rem -= q * Poly::monomial(m, c);
    }
    return quot;
}

unsigned factor_multiplicity(const Poly& p, const Poly& f) {
    if (p.is_zero())
        throw math_error("factor_multiplicity: undefined for the zero polynomial");
    if (f.is_constant())
        throw math_error("factor_multiplicity: factor must be non-constant");
    unsigned m = 0;
    Poly rest = p;
    for (;;) {
        auto q = exact_divide(rest, f);
        if (!q)
            return m;
        rest = std::move(*q);
        ++m;
    }
}

Poly translate_to_point(const Poly& p, const Rational& x0, const Rational& y0) {
    unsigned dx = 0, dy = 0;
    for (const auto& [m, c] : p.terms()) {
        dx = std::max(dx, m.ex);
        dy = std::max(dy, m.ey);
    }
    // Cached powers of (x + x0) and (y + y0).
    std::vector<Poly> px(dx + 1), py(dy + 1);
    px[0] = Poly(Rational(1));
    py[0] = Poly(Rational(1));
    Poly xs = Poly::var(Var::x) + Poly(x0);
    Poly ys = Poly::var(Var::y) + Poly(y0);
    for (unsigned i = 1; i <= dx; ++i)
        px[i] = px[i - 1] * xs;
    for (unsigned i = 1; i <= dy; ++i)
        py[i] = py[i - 1] * ys;
    Poly r;
    for (const auto& [m, c] : p.terms())
        r += px[m.ex] * py[m.ey] * c;
    return r;
}

Poly homogeneous_part(const Poly& p, unsigned k) {
    Poly r;
    for (const auto& [m, c] : p.terms())
        if (m.total_degree() == k)
            r.add_term(m, c);
    return r;
}

CanonicalForm canonical_form(const Poly& p) {
    if (p.is_zero())
        throw math_error("canonical_form: zero polynomial");
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational u(num_gcd, den_lcm);
    u.canonicalize();
    if (sgn(p.leading_coefficient()) < 0)
        u = -u;
    Poly primitive = p * (Rational(1) / u);
    return {std::move(primitive), std::move(u)};
}

Poly canonicalized(const Poly& p) {
    if (p.is_zero())
        return p;
    return canonical_form(p).primitive;
}

// ---------------------------------------------------------------------------
// GCD via primitive remainder sequences on (Z[y])[x].

namespace {

// Univariate over Z, index = exponent, no leading zeros.
using ZP1 = std::vector<Integer>;

void zp1_trim(ZP1& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

bool zp1_zero(const ZP1& a) { return a.empty(); }
int zp1_deg(const ZP1& a) { return static_cast<int>(a.size()) - 1; }

ZP1 zp1_mul(const ZP1& a, const ZP1& b) {
    if (a.empty() || b.empty())
        return {};
    ZP1 r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    zp1_trim(r);
    return r;
}

ZP1 zp1_sub(const ZP1& a, const ZP1& b) {
    ZP1 r = a;
    if (r.size() < b.size())
        r.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    zp1_trim(r);
    return r;
}

Integer zp1_content(const ZP1& a) {
    Integer g(0);
    for (const auto& c : a)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g; // 0 for the zero polynomial
}

ZP1 zp1_div_int(const ZP1& a, const Integer& d) {
    ZP1 r = a;
    for (auto& c : r)
        c /= d; // exact
    return r;
}

// Primitive with positive leading coefficient; zero stays zero.
ZP1 zp1_primitive(const ZP1& a) {
    if (a.empty())
        return a;
    Integer g = zp1_content(a);
    if (sgn(a.back()) < 0)
        g = -g;
    return zp1_div_int(a, g);
}

// Plain PRS; content is stripped each round so the exact pseudo-remainder
// scaling is irrelevant.
ZP1 zp1_gcd(ZP1 a, ZP1 b) {
    if (zp1_zero(a))
        return zp1_primitive(b);
    if (zp1_zero(b))
        return zp1_primitive(a);
    Integer ca = zp1_content(a), cb = zp1_content(b);
    Integer c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = zp1_div_int(a, ca);
    b = zp1_div_int(b, cb);
    if (zp1_deg(a) < zp1_deg(b))
        std::swap(a, b);
    while (!zp1_zero(b)) {
        ZP1 r = a;
        while (!zp1_zero(r) && zp1_deg(r) >= zp1_deg(b)) {
            int shift = zp1_deg(r) - zp1_deg(b);
            ZP1 shifted(static_cast<std::size_t>(shift), Integer(0));
            shifted.insert(shifted.end(), b.begin(), b.end());
            Integer lr = r.back(), lb = b.back();
            // r := lb*r - lr*x^shift*b
            for (auto& cc : r)
                cc *= lb;
            for (std::size_t i = 0; i < shifted.size(); ++i)
                r[i] -= lr * shifted[i];
            zp1_trim(r);
        }
        a = std::move(b);
        b = zp1_primitive(r);
    }
    a = zp1_primitive(a);
    return zp1_mul(ZP1{c}, a);
}

// Exact division in Z[y]; divisibility guaranteed by the caller.
ZP1 zp1_exact_div(const ZP1& a, const ZP1& b) {
    if (a.empty())
        return {};
    ZP1 rem = a;
    ZP1 quot(a.size() - b.size() + 1, Integer(0));
    while (!zp1_zero(rem)) {
        int shift = zp1_deg(rem) - zp1_deg(b);
        Integer q = rem.back() / b.back(); // exact
        quot[static_cast<std::size_t>(shift)] = q;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[static_cast<std::size_t>(shift) + i] -= q * b[i];
        zp1_trim(rem);
    }
    return quot;
}

// Bivariate as a dense vector over x; coefficients in Z[y].
using ZP2 = std::vector<ZP1>;

void zp2_trim(ZP2& a) {
    while (!a.empty() && a.back().empty())
        a.pop_back();
}

bool zp2_zero(const ZP2& a) { return a.empty(); }
int zp2_degx(const ZP2& a) { return static_cast<int>(a.size()) - 1; }

ZP1 zp2_content(const ZP2& a) {
    ZP1 g;
    for (const auto& c : a)
        g = zp1_gcd(g, c);
    return g;
}

ZP2 zp2_div_zp1(const ZP2& a, const ZP1& d) {
    ZP2 r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i].empty() ? ZP1{} : zp1_exact_div(a[i], d);
    return r;
}

ZP2 zp2_primitive(const ZP2& a) {
    if (a.empty())
        return a;
    return zp2_div_zp1(a, zp2_content(a));
}

// Pseudo-remainder of a by b in x; deg_x a >= deg_x b, b != 0.
ZP2 zp2_prem(ZP2 r, const ZP2& b) {
    const ZP1& lb = b.back();
    while (!zp2_zero(r) && zp2_degx(r) >= zp2_degx(b)) {
        int shift = zp2_degx(r) - zp2_degx(b);
        ZP1 lr = r.back();
        for (auto& c : r)
            c = zp1_mul(c, lb);
        for (std::size_t i = 0; i < b.size(); ++i) {
            auto& target = r[static_cast<std::size_t>(shift) + i];
            target = zp1_sub(target, zp1_mul(lr, b[i]));
        }
        zp2_trim(r);
    }
    return r;
}

ZP2 poly_to_zp2(const Poly& p) {
    // Clear rational content first; gcd over Q ignores constants.
    Poly prim = canonicalized(p);
    ZP2 r;
    for (const auto& [m, c] : prim.terms()) {
        if (r.size() <= m.ex)
            r.resize(m.ex + 1);
        auto& col = r[m.ex];
        if (col.size() <= m.ey)
            col.resize(m.ey + 1, Integer(0));
        col[m.ey] = c.get_num();
    }
    for (auto& col : r)
        zp1_trim(col);
    zp2_trim(r);
    return r;
}

Poly zp2_to_poly(const ZP2& a) {
    Poly p;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != 0)
                p.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)},
                           Rational(a[i][j]));
    return p;
}

} // namespace

Poly gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero())
        throw math_error("gcd: both arguments are zero");
    if (p.is_zero())
        return canonicalized(q);
    if (q.is_zero())
        return canonicalized(p);
    if (p.is_constant() || q.is_constant())
        return Poly(Rational(1));
    ZP2 a = poly_to_zp2(p);
    ZP2 b = poly_to_zp2(q);
    ZP1 ca = zp2_content(a), cb = zp2_content(b);
    ZP1 c = zp1_gcd(ca, cb);
    a = zp2_div_zp1(a, ca);
    b = zp2_div_zp1(b, cb);
    if (zp2_degx(a) < zp2_degx(b))
        std::swap(a, b);
    while (!zp2_zero(b)) {
        ZP2 r = zp2_prem(a, b);
        a = std::move(b);
        b = zp2_primitive(r);
    }
    a = zp2_primitive(a);
    // Re-attach the common content in y.
    ZP2 g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        g[i] = zp1_mul(a[i], c);
    return canonicalized(zp2_to_poly(g));
}

// ---------------------------------------------------------------------------

namespace {

void append_term(std::string& out, const Monomial& m, const Rational& coeff,
                 bool first) {
    Rational mag = coeff;
    bool neg = sgn(coeff) < 0;
    if (neg)
        mag = -mag;
    if (first)
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    std::string body;
    bool need_coeff = (m.ex == 0 && m.ey == 0) || !is_one(mag);
    if (need_coeff)
        body = to_string(mag);
    auto add_var = [&body](char v, unsigned e) {
        if (e == 0)
            return;
        if (!body.empty())
            body += '*';
        body += v;
        if (e > 1) {
            body += '^';
            body += std::to_string(e);
        }
    };
    add_var('x', m.ex);
    add_var('y', m.ey);
    out += body;
}

} // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        append_term(out, m, c, first);
        first = false;
    }
    return out;
}

RationalFunction make_rational_function(Poly num, Poly den) {
    if (den.is_zero())
        throw math_error("rational function with zero denominator");
    if (num.is_zero())
        return {Poly(), canonicalized(den)};
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = *exact_divide(num, g);
        den = *exact_divide(den, g);
    }
    CanonicalForm cf = canonical_form(den);
    num = num * (Rational(1) / cf.constant);
    return {std::move(num), std::move(cf.primitive)};
}

std::string to_string(const RationalFunction& r) {
    return "(" + to_string(r.num) + ") / (" + to_string(r.den) + ")";
}

} // namespace dbx
