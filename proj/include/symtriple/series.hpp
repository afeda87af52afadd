#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "symtriple/exact.hpp"

namespace symtriple {

// Truncated power series c_0 + c_1 t + ... + c_N t^N with a fixed order N.
class Series {
public:
    explicit Series(int order);
    explicit Series(std::vector<FieldElement> coeffs);

    static Series constant(const FieldElement& c, int order);
    static Series variable(int order);
    static Series from_function(int order, const std::function<FieldElement(int)>& coeff);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const FieldElement& operator[](int n) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    // Keeps indices 0..m (m <= order).
    Series truncated(int m) const;
    // Pads with zeros up to index m (m >= order). Only for callers that know the padding is exact.
    Series zero_extended(int m) const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series& operator*=(const FieldElement& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const FieldElement& c) { return a *= c; }
    friend Series operator*(const FieldElement& c, Series a) { return a *= c; }
    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string to_string(std::string_view var = "t") const;

private:
    std::vector<FieldElement> coeffs_;
};

void require_same_order(const Series& a, const Series& b);

Series inverse(const Series& f);
Series derivative(const Series& f);
Series antiderivative(const Series& f);
Series compose(const Series& g, const Series& f);
Series log1(const Series& f);
Series exp0(const Series& f);
Series pow_general(const Series& f, const FieldElement& alpha);
// f^k for any integer k (negative k needs an invertible constant term).
Series pow_int(const Series& f, long k);
Series reversion(const Series& F);
Series star(const Series& f);

enum class LagrangeVariant { plain, weighted };
FieldElement lagrange_coeff(const Series& phi, const Series& f, int n, LagrangeVariant variant);

// f(-t), f(c t), t f(t) (order + 1), f(t)/t (order - 1, needs f_0 = 0).
Series negate_variable(const Series& f);
Series scale_variable(const Series& f, const FieldElement& c);
Series multiply_by_t(const Series& f);
Series divide_by_t(const Series& f);

}  // namespace symtriple
