#include <cctype>

#include "symtriple/exact.hpp"

namespace symtriple {

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::SymbolMismatch: return "SymbolMismatch";
        case ErrorKind::PoleAtPoint: return "PoleAtPoint";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::OrderMismatch: return "OrderMismatch";
        case ErrorKind::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
        case ErrorKind::NonzeroInnerConstant: return "NonzeroInnerConstant";
        case ErrorKind::BadConstantTerm: return "BadConstantTerm";
        case ErrorKind::NotReversible: return "NotReversible";
        case ErrorKind::InsufficientCoefficients: return "InsufficientCoefficients";
        case ErrorKind::UnstretchPrecondition: return "UnstretchPrecondition";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidTriple: return "InvalidTriple";
        case ErrorKind::UnknownSequence: return "UnknownSequence";
        case ErrorKind::UnknownTriple: return "UnknownTriple";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
    }
    return "Error";
}

Rational make_rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational power(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
        Rational inv = 1 / base;
        return power(inv, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Integer factorial(long n) {
    if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "factorial of negative integer");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    Integer out;
    Integer top(n);
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

}  // namespace symtriple
