#include <cctype>

#include "symtriple/exact.hpp"

namespace symtriple {

namespace {

std::string common_symbol(const UniPoly& a, const UniPoly& b) {
    if (a.degree() >= 1 && b.degree() >= 1 && a.symbol() != b.symbol())
        throw Error(ErrorKind::SymbolMismatch, "symbols '" + a.symbol() + "' and '" + b.symbol() + "'");
    if (a.degree() >= 1) return a.symbol();
    if (b.degree() >= 1) return b.symbol();
    return a.symbol().empty() ? b.symbol() : a.symbol();
}

// True when num/den is a plain rational.
bool collapses(const UniPoly& num, const UniPoly& den) { return den.is_one() && num.is_constant(); }

void check_symbols(const std::string& a, const std::string& b) {
    if (a != b) throw Error(ErrorKind::SymbolMismatch, "symbols '" + a + "' and '" + b + "'");
}

}  // namespace

FieldElement::FieldElement(const UniPoly& p) : FieldElement(normalized(p, UniPoly::constant(p.symbol(), 1))) {}

FieldElement FieldElement::fraction(UniPoly num, UniPoly den) { return normalized(std::move(num), std::move(den)); }

FieldElement FieldElement::symbol(const std::string& name) { return FieldElement(UniPoly::variable(name)); }

FieldElement FieldElement::normalized(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    std::string sym = common_symbol(num, den);
    if (num.is_zero()) return FieldElement();
    UniPoly g = gcd(num, den);
    if (!g.is_one()) {
        num = UniPoly::exact_div(num, g);
        den = UniPoly::exact_div(den, g);
    }
    if (den.leading() != 1) {
        Rational inv = 1 / den.leading();
        num *= inv;
        den *= inv;
    }
    if (den.is_one() && num.is_constant()) return FieldElement(num.coeff(0));
    return FieldElement(Fraction{num.with_symbol(sym), den.with_symbol(sym)});
}

bool FieldElement::is_polynomial() const {
    if (is_rational()) return true;
    return std::get<Fraction>(value_).den.is_one();
}

const Rational& FieldElement::rational() const {
    if (!is_rational()) throw Error(ErrorKind::BadParams, "element '" + to_string() + "' is not rational");
    return std::get<Rational>(value_);
}

UniPoly FieldElement::numerator() const {
    if (is_rational()) return UniPoly::constant("", std::get<Rational>(value_));
    return std::get<Fraction>(value_).num;
}

UniPoly FieldElement::denominator() const {
    if (is_rational()) return UniPoly::constant("", 1);
    return std::get<Fraction>(value_).den;
}

std::string FieldElement::symbol_name() const {
    if (is_rational()) return "";
    return std::get<Fraction>(value_).num.symbol();
}

bool FieldElement::is_zero() const { return is_rational() && std::get<Rational>(value_) == 0; }

bool FieldElement::is_one() const { return is_rational() && std::get<Rational>(value_) == 1; }

bool FieldElement::is_negative_rational() const { return is_rational() && std::get<Rational>(value_) < 0; }

FieldElement FieldElement::add(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational() && b.is_rational()) return FieldElement(Rational(a.rational() + b.rational()));
    if (a.is_rational() || b.is_rational()) {
        const Fraction& f = std::get<Fraction>((a.is_rational() ? b : a).value_);
        const Rational& r = a.is_rational() ? a.rational() : b.rational();
        // gcd(num + r*den, den) = gcd(num, den) = 1, so no reduction is needed.
        UniPoly num = f.num + f.den * r;
        if (collapses(num, f.den)) return FieldElement(num.coeff(0));
        return FieldElement(Fraction{num.with_symbol(f.den.symbol()), f.den});
    }
    const Fraction& x = std::get<Fraction>(a.value_);
    const Fraction& y = std::get<Fraction>(b.value_);
    check_symbols(x.num.symbol(), y.num.symbol());
    const std::string& sym = x.num.symbol();
    if (x.den.is_one() && y.den.is_one()) {
        UniPoly num = x.num + y.num;
        if (num.is_constant()) return FieldElement(num.coeff(0));
        return FieldElement(Fraction{num.with_symbol(sym), x.den});
    }
    if (x.den == y.den) return normalized(x.num + y.num, x.den);
    UniPoly g = gcd(x.den, y.den);
    if (g.is_one()) {
        UniPoly num = x.num * y.den + y.num * x.den;
        if (num.is_zero()) return FieldElement();
        return FieldElement(Fraction{num.with_symbol(sym), (x.den * y.den).with_symbol(sym)});
    }
    UniPoly xd = UniPoly::exact_div(x.den, g);
    UniPoly yd = UniPoly::exact_div(y.den, g);
    UniPoly num = x.num * yd + y.num * xd;
    if (num.is_zero()) return FieldElement();
    UniPoly den = xd * y.den;
    UniPoly g2 = gcd(num, g);
    if (!g2.is_one()) {
        num = UniPoly::exact_div(num, g2);
        den = UniPoly::exact_div(den, g2);
    }
    if (collapses(num, den)) return FieldElement(num.coeff(0));
    return FieldElement(Fraction{num.with_symbol(sym), den.with_symbol(sym)});
}

FieldElement FieldElement::mul(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational() && b.is_rational()) return FieldElement(Rational(a.rational() * b.rational()));
    if (a.is_rational() || b.is_rational()) {
        const Fraction& f = std::get<Fraction>((a.is_rational() ? b : a).value_);
        const Rational& r = a.is_rational() ? a.rational() : b.rational();
        if (r == 0) return FieldElement();
        return FieldElement(Fraction{f.num * r, f.den});
    }
    const Fraction& x = std::get<Fraction>(a.value_);
    const Fraction& y = std::get<Fraction>(b.value_);
    check_symbols(x.num.symbol(), y.num.symbol());
    const std::string& sym = x.num.symbol();
    if (x.den.is_one() && y.den.is_one()) return FieldElement(Fraction{(x.num * y.num).with_symbol(sym), x.den});
    UniPoly g1 = gcd(x.num, y.den);
    UniPoly g2 = gcd(y.num, x.den);
    UniPoly xn = g1.is_one() ? x.num : UniPoly::exact_div(x.num, g1);
    UniPoly yd = g1.is_one() ? y.den : UniPoly::exact_div(y.den, g1);
    UniPoly yn = g2.is_one() ? y.num : UniPoly::exact_div(y.num, g2);
    UniPoly xd = g2.is_one() ? x.den : UniPoly::exact_div(x.den, g2);
    UniPoly num = xn * yn;
    UniPoly den = xd * yd;
    if (collapses(num, den)) return FieldElement(num.coeff(0));
    return FieldElement(Fraction{num.with_symbol(sym), den.with_symbol(sym)});
}

FieldElement FieldElement::inverse() const {
    if (is_rational()) {
        const Rational& r = std::get<Rational>(value_);
        if (r == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        return FieldElement(Rational(1 / r));
    }
    const Fraction& f = std::get<Fraction>(value_);
    Rational inv = 1 / f.num.leading();
    UniPoly num = f.den * inv;
    UniPoly den = f.num * inv;
    if (collapses(num, den)) return FieldElement(num.coeff(0));
    return FieldElement(Fraction{num, den});
}

FieldElement FieldElement::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    if (is_rational()) return FieldElement(power(std::get<Rational>(value_), exponent));
    FieldElement result(1L);
    FieldElement base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

Rational FieldElement::specialize(const Rational& at) const {
    if (is_rational()) return std::get<Rational>(value_);
    const Fraction& f = std::get<Fraction>(value_);
    Rational d = f.den.eval(at);
    if (d == 0) throw Error(ErrorKind::PoleAtPoint, "denominator of '" + to_string() + "' vanishes at " + symtriple::to_string(at));
    return f.num.eval(at) / d;
}

FieldElement FieldElement::evaluate_at(const FieldElement& value) const {
    if (is_rational()) return *this;
    const Fraction& f = std::get<Fraction>(value_);
    auto horner = [&](const UniPoly& p) {
        FieldElement acc;
        for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * value + FieldElement(p.coeffs()[i]);
        return acc;
    };
    FieldElement d = horner(f.den);
    if (d.is_zero()) throw Error(ErrorKind::PoleAtPoint, "denominator of '" + to_string() + "' vanishes at " + value.to_string());
    return horner(f.num) / d;
}

FieldElement FieldElement::operator-() const {
    if (is_rational()) return FieldElement(Rational(-std::get<Rational>(value_)));
    const Fraction& f = std::get<Fraction>(value_);
    return FieldElement(Fraction{-f.num, f.den});
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    *this = add(*this, o);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    *this = add(*this, -o);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    *this = mul(*this, o);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    *this = mul(*this, o.inverse());
    return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational() != b.is_rational()) return false;
    if (a.is_rational()) return a.rational() == b.rational();
    const auto& x = std::get<FieldElement::Fraction>(a.value_);
    const auto& y = std::get<FieldElement::Fraction>(b.value_);
    return x.num.symbol() == y.num.symbol() && x.num == y.num && x.den == y.den;
}

std::string FieldElement::to_string() const {
    if (is_rational()) return symtriple::to_string(std::get<Rational>(value_));
    const Fraction& f = std::get<Fraction>(value_);
    if (f.den.is_one()) return f.num.to_string();
    return "(" + f.num.to_string() + ")/(" + f.den.to_string() + ")";
}

std::string to_string(const FieldElement& x) { return x.to_string(); }

namespace {

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Index of the parenthesis closing the one at position 0, or npos.
std::size_t matching_paren(std::string_view s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')' && --depth == 0) return i;
    }
    return std::string_view::npos;
}

}  // namespace

FieldElement FieldElement::parse(std::string_view text) {
    std::string_view s = trim_view(text);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty field element");
    if (s.front() == '(') {
        std::size_t close = matching_paren(s);
        if (close == std::string_view::npos) throw Error(ErrorKind::ParseError, "unbalanced '" + std::string(text) + "'");
        FieldElement num = parse(s.substr(1, close - 1));
        std::string_view rest = trim_view(s.substr(close + 1));
        if (rest.empty()) return num;
        if (rest.front() != '/') throw Error(ErrorKind::ParseError, "expected '/' in '" + std::string(text) + "'");
        FieldElement den = parse(trim_view(rest.substr(1)));
        return num / den;
    }
    for (char c : s)
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return FieldElement(UniPoly::parse(s));
    return FieldElement(parse_rational(s));
}

FieldElement binom_general(const FieldElement& alpha, long k) {
    if (k < 0) return FieldElement();
    FieldElement out(1L);
    for (long i = 0; i < k; ++i) out *= (alpha - FieldElement(i)) * FieldElement(make_rational(1, i + 1));
    return out;
}

}  // namespace symtriple
