#include "doctest.h"
#include "support/checks.hpp"
#include "symtriple/exact.hpp"
#include "symtriple/sampling.hpp"

using namespace symtriple;
using testutil::fe;
using testutil::q;
using testutil::throws_kind;

TEST_CASE("rational arithmetic and text form") {
    CHECK(fe("1/2") + fe("1/3") == fe("5/6"));
    CHECK(to_string(q(6, -4)) == "-3/2");
    CHECK(parse_rational(" 10/4 ") == q(5, 2));
    CHECK(parse_rational("-7") == q(-7));
    CHECK(FieldElement(q(0, 5)).to_string() == "0");
    CHECK(throws_kind([] { parse_rational("1/0"); }, ErrorKind::DivisionByZero));
    CHECK(throws_kind([] { parse_rational("1/x2"); }, ErrorKind::ParseError));
    CHECK(throws_kind([] { parse_rational("--1"); }, ErrorKind::ParseError));
}

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(power(q(-2, 3), 3) == q(-8, 27));
    CHECK(power(q(2, 3), -2) == q(9, 4));
    CHECK(power(q(0), 0) == 1);
}

TEST_CASE("polynomial cancellation and inverse pairs") {
    CHECK(fe("q^2 - 1") / fe("q - 1") == fe("1 + q"));
    FieldElement x = FieldElement::symbol("x");
    FieldElement r = (x / (x - 1)) * ((x - 1) / x);
    CHECK(r.is_rational());
    CHECK(r == FieldElement(1L));
    CHECK((x + 1) - x == FieldElement(1L));
}

TEST_CASE("polynomial gcd") {
    UniPoly a = UniPoly::parse("q - 1") * UniPoly::parse("q + 2") * UniPoly::parse("q + 2");
    UniPoly b = UniPoly::parse("q + 2") * UniPoly::parse("q - 3");
    CHECK(gcd(a, b) == UniPoly::parse("2 + q"));
    CHECK(gcd(a, UniPoly::parse("q - 5")).is_one());
    UniPoly c = UniPoly::parse("1/2*q^3 + 3/7*q + 1/5");
    CHECK(gcd(c * UniPoly::parse("3*q^2 - 1"), c * UniPoly::parse("q^4 + 1")) == c.monic());
    // Many small factors, as produced by q-Pochhammer denominators.
    UniPoly p1 = UniPoly::constant("q", 1), p2 = UniPoly::constant("q", 1);
    for (int j = 1; j <= 12; ++j) {
        std::vector<Rational> f(static_cast<std::size_t>(j) + 1);
        f[0] = 1;
        f[static_cast<std::size_t>(j)] = -1;
        if (j <= 9) p1 *= UniPoly("q", f);
        if (j >= 4) p2 *= UniPoly("q", f);
    }
    // Oracle: plain Euclid with monic remainders.
    UniPoly x = p1.monic(), y = p2.monic();
    while (!y.is_zero()) {
        UniPoly r = UniPoly::divmod(x, y).second.monic();
        x = y;
        y = r;
    }
    UniPoly g = gcd(p1, p2);
    CHECK(g == x);
    CHECK(UniPoly::divmod(p1, g).second.is_zero());
    CHECK(gcd(UniPoly::exact_div(p1, g), UniPoly::exact_div(p2, g)).is_one());
}

TEST_CASE("binom_general") {
    CHECK(binom_general(fe("1/2"), 2) == fe("-1/8"));
    FieldElement a = FieldElement::symbol("alpha");
    CHECK(binom_general(a, 1) == a);
    CHECK(binom_general(a, 0) == FieldElement(1L));
    for (long k = 0; k <= 5; ++k) CHECK(binom_general(FieldElement(-1L), k) == FieldElement(k % 2 ? -1L : 1L));
    // Reflection binom(-a, k) = (-1)^k binom(a + k - 1, k).
    for (long k = 0; k <= 8; ++k) {
        FieldElement sign(k % 2 ? -1L : 1L);
        CHECK(binom_general(-a, k) == sign * binom_general(a + FieldElement(k - 1), k));
    }
    CHECK(binom_general(FieldElement(7L), 3) == FieldElement(35L));
}

TEST_CASE("specialize") {
    CHECK(fe("q + 1").specialize(q(3)) == q(4));
    FieldElement x = FieldElement::symbol("x");
    CHECK(throws_kind([&] { (x / (x - 1)).specialize(q(1)); }, ErrorKind::PoleAtPoint));
    CHECK(fe("z^2 - 1/3*z").specialize(q(2)) == q(10, 3));
    CHECK(fe("3/4").specialize(q(9)) == q(3, 4));
}

TEST_CASE("errors") {
    FieldElement x = FieldElement::symbol("x"), y = FieldElement::symbol("y");
    CHECK(throws_kind([&] { (void)(x + y); }, ErrorKind::SymbolMismatch));
    CHECK(throws_kind([&] { (void)(x * y); }, ErrorKind::SymbolMismatch));
    CHECK(throws_kind([&] { (void)(x / FieldElement()); }, ErrorKind::DivisionByZero));
    CHECK(throws_kind([&] { FieldElement().inverse(); }, ErrorKind::DivisionByZero));
    CHECK(throws_kind([] { FieldElement::parse("(1 + q"); }, ErrorKind::ParseError));
    CHECK(throws_kind([] { FieldElement::parse("q + * 2"); }, ErrorKind::ParseError));
    // A rational mixes with any symbol.
    CHECK(x + FieldElement(q(1, 2)) == fe("1/2 + x"));
}

TEST_CASE("print and parse round trip") {
    CHECK(fe("z^2 - 1/3*z").to_string() == "-1/3*z + z^2");
    CHECK(fe("(1)/(1 - q)").to_string() == "(-1)/(-1 + q)");
    CHECK(fe("-q").to_string() == "-q");
    CHECK(fe("2q^3").to_string() == "2*q^3");
    Sampler s(11);
    for (int i = 0; i < 300; ++i) {
        FieldElement a = s.element("q");
        CHECK(FieldElement::parse(a.to_string()) == a);
    }
}

TEST_CASE("field axioms and canonical form on seeded samples") {
    Sampler s(2024);
    for (int i = 0; i < 1000; ++i) {
        FieldElement a = s.element("q"), b = s.element("q"), c = s.element("q");
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == FieldElement());
        // Normalizing an already-normal element is the identity.
        CHECK(FieldElement::fraction(a.numerator(), a.denominator()) == a);
        if (!b.is_zero()) {
            FieldElement d = a / b;
            CHECK(d * b == a);
            UniPoly den = d.denominator();
            CHECK(den.leading() == 1);
            CHECK(gcd(d.numerator(), den).is_one());
            if (den.is_one() && d.numerator().is_constant()) CHECK(d.is_rational());
        }
    }
}

TEST_CASE("evaluate_at substitutes the symbol") {
    FieldElement z = FieldElement::symbol("z");
    FieldElement p = fe("z^2 - 1/3*z");
    CHECK(p.evaluate_at(z + 1) == fe("2/3 + 5/3*z + z^2"));
    CHECK(p.evaluate_at(FieldElement(q(2))) == fe("10/3"));
    FieldElement b = FieldElement::symbol("b");
    CHECK(p.evaluate_at(b * 2) == fe("-2/3*b + 4*b^2"));
}
