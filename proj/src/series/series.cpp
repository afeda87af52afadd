#include "symtriple/series.hpp"

#include "symtriple/kernels.hpp"

namespace symtriple {

namespace {

void require_order(int order) {
    if (order < 0) throw Error(ErrorKind::OrderMismatch, "negative series order");
}

FieldElement rat(long n, long d = 1) { return FieldElement(make_rational(n, d)); }

}  // namespace

Series::Series(int order) {
    require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, FieldElement());
}

Series::Series(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorKind::OrderMismatch, "series needs at least one coefficient");
}

Series Series::constant(const FieldElement& c, int order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::variable(int order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = FieldElement(1L);
    return s;
}

Series Series::from_function(int order, const std::function<FieldElement(int)>& coeff) {
    Series s(order);
    for (int n = 0; n <= order; ++n) s.coeffs_[static_cast<std::size_t>(n)] = coeff(n);
    return s;
}

const FieldElement& Series::operator[](int n) const {
    if (n < 0 || n > order())
        throw Error(ErrorKind::IndexOutOfRange, "coefficient " + std::to_string(n) + " of series of order " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(n)];
}

Series Series::truncated(int m) const {
    if (m > order() || m < 0)
        throw Error(ErrorKind::OrderMismatch, "cannot truncate order " + std::to_string(order()) + " to " + std::to_string(m));
    return Series(std::vector<FieldElement>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

Series Series::zero_extended(int m) const {
    if (m < order()) throw Error(ErrorKind::OrderMismatch, "zero extension must not shrink the series");
    Series s = *this;
    s.coeffs_.resize(static_cast<std::size_t>(m) + 1);
    return s;
}

void require_same_order(const Series& a, const Series& b) {
    if (a.order() != b.order())
        throw Error(ErrorKind::OrderMismatch, "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
}

Series Series::operator-() const {
    Series s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

Series& Series::operator+=(const Series& o) {
    require_same_order(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    require_same_order(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    require_same_order(a, b);
    Series out(a.order());
    kernels::convolve(a.coeffs_, b.coeffs_, out.coeffs_);
    return out;
}

Series& Series::operator*=(const Series& o) {
    *this = *this * o;
    return *this;
}

Series& Series::operator*=(const FieldElement& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string Series::to_string(std::string_view var) const {
    std::string out;
    bool first = true;
    for (int n = 0; n <= order(); ++n) {
        const FieldElement& c = coeffs_[static_cast<std::size_t>(n)];
        if (c.is_zero()) continue;
        bool negative = c.is_negative_rational() && !first;
        FieldElement mag = negative ? -c : c;
        std::string cs = mag.is_rational() ? mag.to_string() : "(" + mag.to_string() + ")";
        std::string term;
        if (n == 0) {
            term = cs;
        } else {
            std::string pw = n == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(n);
            if (mag.is_one()) term = pw;
            else if (mag == FieldElement(-1L)) term = "-" + pw;
            else term = cs + "*" + pw;
        }
        out += first ? term : (negative ? " - " : " + ") + term;
        first = false;
    }
    if (first) out = "0";
    return out + " + O(" + std::string(var) + "^" + std::to_string(order() + 1) + ")";
}

Series inverse(const Series& f) {
    if (f[0].is_zero()) throw Error(ErrorKind::NonInvertibleConstantTerm, "constant term is zero");
    const int N = f.order();
    std::vector<FieldElement> g(static_cast<std::size_t>(N) + 1);
    FieldElement inv0 = f[0].inverse();
    g[0] = inv0;
    for (int n = 1; n <= N; ++n) {
        FieldElement acc;
        for (int k = 1; k <= n; ++k)
            if (!f[k].is_zero()) acc += f[k] * g[static_cast<std::size_t>(n - k)];
        g[static_cast<std::size_t>(n)] = -(acc * inv0);
    }
    return Series(std::move(g));
}

Series derivative(const Series& f) {
    if (f.order() < 1) throw Error(ErrorKind::OrderMismatch, "derivative of an order-0 series is unknown");
    std::vector<FieldElement> d;
    for (int n = 1; n <= f.order(); ++n) d.push_back(f[n] * FieldElement(static_cast<long>(n)));
    return Series(std::move(d));
}

Series antiderivative(const Series& f) {
    std::vector<FieldElement> a{FieldElement()};
    for (int n = 0; n <= f.order(); ++n) a.push_back(f[n] * rat(1, n + 1));
    return Series(std::move(a));
}

Series compose(const Series& g, const Series& f) {
    require_same_order(g, f);
    if (!f[0].is_zero()) throw Error(ErrorKind::NonzeroInnerConstant, "inner series has nonzero constant term");
    const int N = g.order();
    Series acc = Series::constant(g[N], N);
    for (int k = N - 1; k >= 0; --k) {
        acc = acc * f;
        acc = acc + Series::constant(g[k], N);
    }
    return acc;
}

Series log1(const Series& f) {
    if (!f[0].is_one()) throw Error(ErrorKind::BadConstantTerm, "log1 needs constant term 1");
    const int N = f.order();
    std::vector<FieldElement> l(static_cast<std::size_t>(N) + 1);
    for (int n = 1; n <= N; ++n) {
        // n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}
        FieldElement acc = f[n] * FieldElement(static_cast<long>(n));
        for (int k = 1; k < n; ++k)
            if (!f[n - k].is_zero()) acc -= FieldElement(static_cast<long>(k)) * l[static_cast<std::size_t>(k)] * f[n - k];
        l[static_cast<std::size_t>(n)] = acc * rat(1, n);
    }
    return Series(std::move(l));
}

Series exp0(const Series& f) {
    if (!f[0].is_zero()) throw Error(ErrorKind::BadConstantTerm, "exp0 needs constant term 0");
    const int N = f.order();
    std::vector<FieldElement> g(static_cast<std::size_t>(N) + 1);
    g[0] = FieldElement(1L);
    for (int n = 1; n <= N; ++n) {
        // n g_n = sum_{k=1}^{n} k f_k g_{n-k}
        FieldElement acc;
        for (int k = 1; k <= n; ++k)
            if (!f[k].is_zero()) acc += FieldElement(static_cast<long>(k)) * f[k] * g[static_cast<std::size_t>(n - k)];
        g[static_cast<std::size_t>(n)] = acc * rat(1, n);
    }
    return Series(std::move(g));
}

Series pow_int(const Series& f, long k) {
    if (k < 0) return pow_int(inverse(f), -k);
    Series result = Series::constant(FieldElement(1L), f.order());
    Series base = f;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Series pow_general(const Series& f, const FieldElement& alpha) {
    if (!f[0].is_one()) throw Error(ErrorKind::BadConstantTerm, "pow_general needs constant term 1");
    if (alpha.is_rational() && alpha.rational() >= 0 && alpha.rational().get_den() == 1 && alpha.rational() <= 64)
        return pow_int(f, alpha.rational().get_num().get_si());
    return exp0(log1(f) * alpha);
}

Series negate_variable(const Series& f) {
    std::vector<FieldElement> c = f.coeffs();
    for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
    return Series(std::move(c));
}

Series scale_variable(const Series& f, const FieldElement& c) {
    std::vector<FieldElement> out = f.coeffs();
    FieldElement p(1L);
    for (auto& x : out) {
        x *= p;
        p *= c;
    }
    return Series(std::move(out));
}

Series multiply_by_t(const Series& f) {
    std::vector<FieldElement> c{FieldElement()};
    c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
    return Series(std::move(c));
}

Series divide_by_t(const Series& f) {
    if (!f[0].is_zero()) throw Error(ErrorKind::BadConstantTerm, "division by t needs zero constant term");
    if (f.order() < 1) throw Error(ErrorKind::OrderMismatch, "division by t of an order-0 series");
    return Series(std::vector<FieldElement>(f.coeffs().begin() + 1, f.coeffs().end()));
}

Series reversion(const Series& F) {
    const int N = F.order();
    if (N < 1 || !F[0].is_zero() || F[1].is_zero())
        throw Error(ErrorKind::NotReversible, "reversion needs F(0) = 0 and an invertible linear coefficient");
    // G holds indices 0..p-1 correctly; each Newton step doubles p.
    Series G = Series::variable(1) * F[1].inverse();
    int p = 2;
    const Series dF = derivative(F);
    while (p < N + 1) {
        int np = std::min(2 * p, N + 1);
        int m = np - 1;
        Series Gm = G.zero_extended(m);
        Series residual = compose(F.truncated(m), Gm) - Series::variable(m);
        // residual has valuation >= p, so F'(G) is only needed below index m - p + 1 <= N - 1.
        Series slope = compose(dF.truncated(std::min(m, N - 1)).zero_extended(m), Gm);
        G = Gm - residual * inverse(slope);
        p = np;
    }
    return G;
}

Series star(const Series& f) {
    if (f[0].is_zero()) throw Error(ErrorKind::NonInvertibleConstantTerm, "star needs an invertible constant term");
    return divide_by_t(reversion(multiply_by_t(f)));
}

FieldElement lagrange_coeff(const Series& phi, const Series& f, int n, LagrangeVariant variant) {
    if (f[0].is_zero()) throw Error(ErrorKind::NonInvertibleConstantTerm, "Lagrange inversion needs f(0) != 0");
    if (variant == LagrangeVariant::plain) {
        if (n < 0) return FieldElement();
        Series fn = f.truncated(n);
        Series inv = inverse(fn);
        Series tfp = Series::from_function(n, [&](int k) { return fn[k] * FieldElement(static_cast<long>(k)); });
        Series weight = Series::constant(FieldElement(1L), n) + tfp * inv;
        return (weight * phi.truncated(n) * pow_int(inv, n))[n];
    }
    if (n < -1) return FieldElement();
    const int m = n + 1;
    return (phi.truncated(m) * pow_int(inverse(f.truncated(m)), m))[m];
}

}  // namespace symtriple
