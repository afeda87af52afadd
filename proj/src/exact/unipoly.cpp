#include <algorithm>
#include <cctype>

#include "symtriple/exact.hpp"

namespace symtriple {

namespace {

using ZPoly = std::vector<Integer>;

void trim_z(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Writes c = Z / den with Z integral and den the lcm of the coefficient denominators.
ZPoly clear_denominators(const std::vector<Rational>& c, Integer& den) {
    den = 1;
    for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    ZPoly out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer scale = den / c[i].get_den();
        out[i] = c[i].get_num() * scale;
    }
    return out;
}

Integer content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& x : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(ZPoly p) {
    trim_z(p);
    if (p.empty()) return p;
    Integer g = content(p);
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return p;
}

ZPoly primitive_integer(const std::vector<Rational>& c) {
    Integer den;
    return primitive_part(clear_denominators(c, den));
}

Integer max_norm(const ZPoly& p) {
    Integer m = 0;
    for (const auto& x : p) {
        Integer a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

Integer eval_z(const ZPoly& p, const Integer& x) {
    Integer acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Exact division over Z; returns false when g does not divide a.
bool divides_z(const ZPoly& a, const ZPoly& g) {
    if (g.empty()) return a.empty();
    if (a.size() < g.size()) return a.empty();
    ZPoly rem = a;
    const Integer& lc = g.back();
    const std::size_t dg = g.size() - 1;
    Integer q;
    for (std::size_t i = rem.size() - g.size() + 1; i-- > 0;) {
        Integer& top = rem[i + dg];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t j = 0; j <= dg; ++j) mpz_submul(rem[i + j].get_mpz_t(), q.get_mpz_t(), g[j].get_mpz_t());
    }
    for (const auto& x : rem)
        if (x != 0) return false;
    return true;
}

// Writes c = content * Z with Z primitive and a positive leading coefficient.
ZPoly split_content(const std::vector<Rational>& c, Rational& content_out) {
    Integer den;
    ZPoly z = clear_denominators(c, den);
    trim_z(z);
    Integer g = content(z);
    if (z.back() < 0) g = -g;
    for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    content_out = Rational(g, den);
    content_out.canonicalize();
    return z;
}

// Quotient a / g over Z; returns false when the division leaves a remainder.
bool quotient_z(ZPoly rem, const ZPoly& g, ZPoly& quo) {
    const Integer& lc = g.back();
    const std::size_t dg = g.size() - 1;
    quo.assign(rem.size() - dg, Integer(0));
    for (std::size_t i = quo.size(); i-- > 0;) {
        Integer& top = rem[i + dg];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
        Integer& q = quo[i];
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t j = 0; j <= dg; ++j) mpz_submul(rem[i + j].get_mpz_t(), q.get_mpz_t(), g[j].get_mpz_t());
    }
    for (std::size_t i = 0; i < dg; ++i)
        if (rem[i] != 0) return false;
    return true;
}

// Heuristic gcd of primitive integer polynomials (Char, Geddes and Gonnet).
bool heuristic_gcd(const ZPoly& a, const ZPoly& b, ZPoly& out) {
    // Divisors of a and b have coefficients up to about 2^deg times their norms, so start above that.
    const std::size_t small_deg = std::min(a.size(), b.size()) - 1;
    Integer xi = (2 * std::min(max_norm(a), max_norm(b)) + 29) << static_cast<mp_bitcnt_t>(small_deg + 1);
    const std::size_t deg = std::max(a.size(), b.size());
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg > 4000000) return false;
        Integer va = eval_z(a, xi);
        Integer vb = eval_z(b, xi);
        Integer g;
        mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
        ZPoly cand;
        Integer half = xi / 2;
        while (g != 0) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
            if (r > half) r -= xi;
            cand.push_back(r);
            g -= r;
            mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
        }
        cand = primitive_part(std::move(cand));
        if (!cand.empty() && divides_z(a, cand) && divides_z(b, cand)) {
            out = std::move(cand);
            return true;
        }
        xi = xi * 73794 / 27011;
    }
    return false;
}

}  // namespace

UniPoly::UniPoly(std::string symbol, std::vector<Rational> coeffs)
    : symbol_(std::move(symbol)), coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(std::string symbol, const Rational& c) {
    return UniPoly(std::move(symbol), std::vector<Rational>{c});
}

UniPoly UniPoly::variable(std::string symbol) {
    return UniPoly(std::move(symbol), std::vector<Rational>{Rational(0), Rational(1)});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::DivisionByZero, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return *this * inv;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
    return UniPoly(symbol_, std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc(inner.symbol());
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * inner;
        acc += UniPoly::constant(inner.symbol(), coeffs_[i]);
    }
    return acc;
}

UniPoly UniPoly::with_symbol(std::string symbol) const {
    UniPoly out = *this;
    out.symbol_ = std::move(symbol);
    return out;
}

namespace {
const std::string& merged_symbol(const UniPoly& a, const UniPoly& b) {
    if (a.degree() >= 1 && b.degree() >= 1 && a.symbol() != b.symbol())
        throw Error(ErrorKind::SymbolMismatch, "symbols '" + a.symbol() + "' and '" + b.symbol() + "'");
    if (a.degree() >= 1) return a.symbol();
    if (b.degree() >= 1) return b.symbol();
    return a.symbol().empty() ? b.symbol() : a.symbol();
}
}  // namespace

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    symbol_ = merged_symbol(*this, o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    symbol_ = merged_symbol(*this, o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    std::string sym = merged_symbol(a, b);
    if (a.is_zero() || b.is_zero()) return UniPoly(sym);
    if (a.is_constant()) return UniPoly(sym, b.coeffs_) * a.coeffs_[0];
    if (b.is_constant()) return UniPoly(sym, a.coeffs_) * b.coeffs_[0];
    // Integer convolution with one rational normalization per output coefficient.
    Integer da, db;
    ZPoly za = clear_denominators(a.coeffs_, da);
    ZPoly zb = clear_denominators(b.coeffs_, db);
    ZPoly zc(za.size() + zb.size() - 1);
    for (std::size_t i = 0; i < za.size(); ++i) {
        if (za[i] == 0) continue;
        for (std::size_t j = 0; j < zb.size(); ++j)
            mpz_addmul(zc[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
    }
    Integer den = da * db;
    std::vector<Rational> out(zc.size());
    for (std::size_t i = 0; i < zc.size(); ++i) {
        out[i] = Rational(zc[i], den);
        out[i].canonicalize();
    }
    return UniPoly(sym, std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    *this = *this * o;
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.coeffs_ != b.coeffs_) return false;
    return a.degree() < 1 || a.symbol_ == b.symbol_;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::string sym = merged_symbol(a, b);
    if (a.degree() < b.degree()) return {UniPoly(sym), UniPoly(sym, a.coeffs_)};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    Rational inv_lc = 1 / b.leading();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t i = quo.size(); i-- > 0;) {
        Rational q = rem[i + db] * inv_lc;
        if (q == 0) continue;
        quo[i] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeffs_[j];
    }
    return {UniPoly(sym, std::move(quo)), UniPoly(sym, std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
    if (b.is_constant()) {
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
        return UniPoly(merged_symbol(a, b), a.coeffs_) * (1 / b.coeffs_[0]);
    }
    if (a.is_zero() || a.degree() < b.degree()) return divmod(a, b).first;
    // Both primitive parts are integral, so by Gauss's lemma an exact quotient is too.
    Rational ca, cb;
    ZPoly za = split_content(a.coeffs_, ca);
    ZPoly zb = split_content(b.coeffs_, cb);
    ZPoly zq;
    if (!quotient_z(std::move(za), zb, zq)) return divmod(a, b).first;
    Rational scale = ca / cb;
    std::vector<Rational> out(zq.size());
    for (std::size_t i = 0; i < zq.size(); ++i) out[i] = scale * zq[i];
    return UniPoly(merged_symbol(a, b), std::move(out));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    std::string sym = merged_symbol(a, b);
    if (a.is_zero()) return b.monic().with_symbol(sym);
    if (b.is_zero()) return a.monic().with_symbol(sym);
    if (a.is_constant() || b.is_constant()) return UniPoly::constant(sym, 1);
    ZPoly za = primitive_integer(a.coeffs());
    ZPoly zb = primitive_integer(b.coeffs());
    ZPoly g;
    if (heuristic_gcd(za, zb, g)) {
        std::vector<Rational> c(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) c[i] = Rational(g[i]);
        return UniPoly(sym, std::move(c)).monic();
    }
    UniPoly x = a.monic().with_symbol(sym);
    UniPoly y = b.monic().with_symbol(sym);
    while (!y.is_zero()) {
        UniPoly r = UniPoly::divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::string UniPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = negative && !first ? Rational(-c) : c;
        std::string term;
        if (i == 0) {
            term = symtriple::to_string(mag);
        } else {
            std::string power = i == 1 ? symbol_ : symbol_ + "^" + std::to_string(i);
            if (mag == 1) term = power;
            else if (mag == -1) term = "-" + power;
            else term = symtriple::to_string(mag) + "*" + power;
        }
        if (first) out = term;
        else out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    UniPoly run() {
        std::vector<Rational> coeffs;
        skip();
        bool any = false;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (any) {
                fail();
            }
            auto [c, d] = term();
            if (static_cast<std::size_t>(d) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(d) + 1);
            coeffs[static_cast<std::size_t>(d)] += sign * c;
            any = true;
            skip();
        }
        if (!any) fail();
        return UniPoly(symbol_, std::move(coeffs));
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail() const {
        throw Error(ErrorKind::ParseError, "not a polynomial: '" + std::string(s_) + "'");
    }
    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::pair<Rational, long> term() {
        Rational c = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            skip();
            std::string den = "1";
            if (peek() == '/') {
                ++pos_;
                skip();
                den = digits();
                if (den.empty()) fail();
                skip();
            }
            c = parse_rational(num + "/" + den);
            have_coeff = true;
            if (peek() == '*') {
                ++pos_;
                skip();
            } else if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
                return {c, 0};
            }
        }
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
            if (!have_coeff) fail();
            return {c, 0};
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        if (!symbol_.empty() && symbol_ != name)
            throw Error(ErrorKind::SymbolMismatch, "symbols '" + symbol_ + "' and '" + name + "'");
        symbol_ = name;
        skip();
        long d = 1;
        if (peek() == '^') {
            ++pos_;
            skip();
            std::string e = digits();
            if (e.empty()) fail();
            d = std::stol(e);
            skip();
        }
        return {c, d};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::string symbol_;
};

}  // namespace

UniPoly UniPoly::parse(std::string_view text) { return PolyParser(text).run(); }

}  // namespace symtriple
