#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "dbx/parse.hpp"
#include "dbx/poly.hpp"

using namespace dbx;
using dbx::testsupport::P;
using dbx::testsupport::random_nonzero_poly;
using dbx::testsupport::random_poly;

TEST_CASE("parser expands and normalizes") {
    Poly p = P("(x+y)^2 - x^2");
    Poly expected;
    expected.add_term({1, 1}, Rational(2));
    expected.add_term({0, 2}, Rational(1));
    CHECK(p == expected);

    Poly q = P("-y - x^2 - 2*y^2");
    CHECK(q.coefficient({0, 1}) == Rational(-1));
    CHECK(q.coefficient({2, 0}) == Rational(-1));
    CHECK(q.coefficient({0, 2}) == Rational(-2));
    CHECK(q.term_count() == 3);
}

TEST_CASE("parser rejections carry positions") {
    CHECK_THROWS_AS(P("x^(-1)"), parse_error);
    CHECK_THROWS_AS(P("x + z"), parse_error);
    CHECK_THROWS_AS(P("x y"), parse_error); // juxtaposition is not multiplication
    CHECK_THROWS_AS(P("(x"), parse_error);
    CHECK_THROWS_AS(P(""), parse_error);
    CHECK_THROWS_AS(P("x/2"), parse_error);
    try {
        P("x^(-1)");
    } catch (const parse_error& e) {
        CHECK(e.pos == 2);
    }
}

TEST_CASE("rational literals") {
    CHECK(P("2/4") == Poly(Rational(1, 2)));
    CHECK(P("-3/4*x").coefficient({1, 0}) == Rational(-3, 4));
    CHECK(P("2^3") == Poly(Rational(8)));
}

TEST_CASE("print then parse is the identity") {
    testsupport::Rng rng(20240817);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_poly(rng, 6, 6);
        CHECK(P(to_string(p)) == p);
    }
    CHECK(to_string(Poly()) == "0");
    CHECK(P("0") == Poly());
}

TEST_CASE("ring operations") {
    CHECK(P("x - y") * P("x + y") == P("x^2 - y^2"));
    CHECK(pow(P("x - 1"), 0) == Poly(Rational(1)));
    testsupport::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_poly(rng, 5), q = random_poly(rng, 5), r = random_poly(rng, 5);
        CHECK((p + q) - q == p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("partial derivatives") {
    CHECK(derivative(P("x^2*y"), Var::x) == P("2*x*y"));
    CHECK(derivative(P("1 + 2*y - x^2 - 6*y^2"), Var::y) == P("2 - 12*y"));
    CHECK(derivative(Poly(Rational(5)), Var::x) == Poly());

    testsupport::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_poly(rng, 5), q = random_poly(rng, 5);
        // Leibniz
        CHECK(derivative(p * q, Var::x) ==
              p * derivative(q, Var::x) + q * derivative(p, Var::x));
        CHECK(derivative(p * q, Var::y) ==
              p * derivative(q, Var::y) + q * derivative(p, Var::y));
    }
}

TEST_CASE("evaluation") {
    CHECK(evaluate(P("x^2 + y"), Rational(2), Rational(3)) == Rational(7));
    CHECK(evaluate(P("x*(1 - y)"), Rational(0), Rational(-1, 2)) == Rational(0));
    CHECK(evaluate(Poly(), Rational(10), Rational(-3)) == Rational(0));
}

TEST_CASE("exact division") {
    CHECK(*exact_divide(P("x^2 - y^2"), P("x - y")) == P("x + y"));
    CHECK(!exact_divide(P("x^2 + 1"), P("x")));
    CHECK(*exact_divide(P("-16*x^4*y"), P("x^4")) == P("-16*y"));
    CHECK_THROWS_AS(exact_divide(P("x"), Poly()), math_error);

    testsupport::Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_poly(rng, 4);
        Poly q = random_nonzero_poly(rng, 4);
        auto r = exact_divide(p * q, q);
        REQUIRE(r);
        CHECK(*r == p);
    }
}

TEST_CASE("factor multiplicity") {
    CHECK(factor_multiplicity(P("-16*x^4*y"), P("x")) == 4);
    CHECK(factor_multiplicity(P("x^2 + 1"), P("x")) == 0);
    // (1-y)^6 * q with (1-y) not dividing q, measured against (1-y)^2
    Poly q = P("x^2 + y + 3");
    CHECK(factor_multiplicity(pow(P("1 - y"), 6) * q, pow(P("1 - y"), 2)) == 3);
    CHECK_THROWS_AS(factor_multiplicity(Poly(), P("x")), math_error);
    CHECK_THROWS_AS(factor_multiplicity(P("x"), Poly(Rational(2))), math_error);

    testsupport::Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        Poly f = testsupport::random_nonconstant_poly(rng, 2, 2);
        Poly g = random_nonzero_poly(rng, 3);
        if (gcd(f, g).degree() != 0)
            continue;
        unsigned m = static_cast<unsigned>(rng() % 4);
        CHECK(factor_multiplicity(pow(f, m) * g, f) == m);
    }
}

TEST_CASE("translation") {
    CHECK(translate_to_point(P("x^2 + y"), Rational(1), Rational(2)) ==
          P("x^2 + 2*x + y + 3"));
    Poly p = P("3*x^2*y - y^3 + 7");
    CHECK(translate_to_point(p, Rational(0), Rational(0)) == p);
    CHECK(translate_to_point(P("1 - y"), Rational(0), Rational(1)) == P("-y"));

    testsupport::Rng rng(19);
    for (int i = 0; i < 200; ++i) {
        Poly q = random_poly(rng, 5);
        Rational x0 = testsupport::random_rational(rng);
        Rational y0 = testsupport::random_rational(rng);
        CHECK(translate_to_point(translate_to_point(q, x0, y0), -x0, -y0) == q);
    }
}

TEST_CASE("canonical form") {
    auto cf = canonical_form(P("-2*x - 2*y"));
    CHECK(cf.primitive == P("x + y"));
    CHECK(cf.constant == Rational(-2));

    cf = canonical_form(P("-16*x^4*y"));
    CHECK(cf.primitive == P("x^4*y"));
    CHECK(cf.constant == Rational(-16));

    cf = canonical_form(P("2/3*x"));
    CHECK(cf.primitive == P("x"));
    CHECK(cf.constant == Rational(2, 3));

    CHECK_THROWS_AS(canonical_form(Poly()), math_error);

    testsupport::Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_nonzero_poly(rng, 5);
        auto c = canonical_form(p);
        CHECK(c.primitive * c.constant == p);
        // Idempotence
        auto c2 = canonical_form(c.primitive);
        CHECK(c2.primitive == c.primitive);
        CHECK(c2.constant == Rational(1));
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(P("x^2 - y^2"), P("x^2 - 2*x*y + y^2")) == P("x - y"));
    CHECK(gcd(P("-3*x + 3*y"), Poly()) == P("x - y"));
    CHECK(gcd(P("x - 1"), P("x + 1")) == Poly(Rational(1)));
    CHECK_THROWS_AS(gcd(Poly(), Poly()), math_error);

    testsupport::Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        Poly a = random_nonzero_poly(rng, 3, 3);
        Poly b = random_nonzero_poly(rng, 3, 3);
        Poly c = random_nonzero_poly(rng, 2, 2);
        Poly g = gcd(a * c, b * c);
        // The gcd divides both products, and the common factor divides it.
        CHECK(exact_divide(a * c, g));
        CHECK(exact_divide(b * c, g));
        CHECK(exact_divide(g, c));
    }
}

TEST_CASE("rational functions reduce") {
    RationalFunction r = make_rational_function(P("x^2 - y^2"), P("2*x - 2*y"));
    CHECK(r.den == P("x - y"));
    CHECK(r.num == P("1/2*x + 1/2*y"));
    CHECK_THROWS_AS(make_rational_function(P("x"), Poly()), math_error);
}
