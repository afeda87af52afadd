#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "symtriple/error.hpp"

namespace symtriple {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
Rational power(const Rational& base, long exponent);
Integer factorial(long n);
// Binomial coefficient for any integer n and k >= 0 (falling-factorial definition).
Integer binomial(long n, long k);

// Dense polynomial over Q in one named variable. The zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::string symbol) : symbol_(std::move(symbol)) {}
    UniPoly(std::string symbol, std::vector<Rational> coeffs);

    static UniPoly constant(std::string symbol, const Rational& c);
    static UniPoly variable(std::string symbol);

    const std::string& symbol() const { return symbol_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    Rational coeff(int i) const;
    const Rational& leading() const;

    UniPoly monic() const;
    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly compose(const UniPoly& inner) const;
    UniPoly with_symbol(std::string symbol) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    // Euclidean division over Q; throws DivisionByZero for b = 0.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    // Exact quotient a / b, assuming b divides a.
    static UniPoly exact_div(const UniPoly& a, const UniPoly& b);

    std::string to_string() const;
    static UniPoly parse(std::string_view text);

private:
    void trim();

    std::string symbol_;
    std::vector<Rational> coeffs_;
};

// Monic gcd over Q (zero when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Element of Q, Q[s] or Q(s) for a single named symbol s.
class FieldElement {
public:
    FieldElement() : value_(Rational(0)) {}
    FieldElement(long v) : value_(Rational(v)) {}
    FieldElement(const Rational& r) : value_(r) {}
    template <class T, class U>
    FieldElement(const __gmp_expr<T, U>& e) : value_(Rational(e)) {}
    FieldElement(const UniPoly& p);

    static FieldElement fraction(UniPoly num, UniPoly den);
    static FieldElement symbol(const std::string& name);
    static FieldElement parse(std::string_view text);

    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    bool is_polynomial() const;
    const Rational& rational() const;
    UniPoly numerator() const;
    UniPoly denominator() const;
    std::string symbol_name() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_negative_rational() const;

    FieldElement inverse() const;
    FieldElement pow(long exponent) const;
    Rational specialize(const Rational& at) const;
    // Substitutes the symbol by an arbitrary field element.
    FieldElement evaluate_at(const FieldElement& value) const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    struct Fraction {
        UniPoly num;
        UniPoly den;
    };
    explicit FieldElement(Fraction f) : value_(std::move(f)) {}
    static FieldElement normalized(UniPoly num, UniPoly den);
    static FieldElement add(const FieldElement& a, const FieldElement& b);
    static FieldElement mul(const FieldElement& a, const FieldElement& b);

    std::variant<Rational, Fraction> value_;
};

// alpha (alpha-1) ... (alpha-k+1) / k!
FieldElement binom_general(const FieldElement& alpha, long k);

std::string to_string(const FieldElement& x);

}  // namespace symtriple
