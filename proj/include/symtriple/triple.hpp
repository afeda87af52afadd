#pragma once

#include <vector>

#include "symtriple/identity.hpp"
#include "symtriple/series.hpp"

namespace symtriple {

enum class Family { e, h, p };

// Series E, H of order N and P of order N-1, where index i of P holds p_{i+1}.
// Values built from three series pass the triple identities to order N; from_series
// derives the other two series exactly and skips the check.
class SymTriple {
public:
    // Checks constant terms, H(t)E(-t) = 1, E(t)P(-t) = E'(t), H(t)P(t) = H'(t),
    // P(t) = E(-t)H'(t) = E'(-t)H(t) and e_1 = h_1 = p_1. Throws InvalidTriple.
    SymTriple(Series E, Series H, Series P);

    static SymTriple identity(int order);
    static SymTriple from_series(Family which, const Series& s);

    int order() const { return E_.order(); }
    const Series& E() const { return E_; }
    const Series& H() const { return H_; }
    const Series& P() const { return P_; }

    const FieldElement& e(int k) const { return E_[k]; }
    const FieldElement& h(int k) const { return H_[k]; }
    // p_k for 1 <= k <= N; p_0 does not exist.
    const FieldElement& p(int k) const;
    // Coefficients with indices 1..upto of one family.
    std::vector<FieldElement> family(Family f, int upto) const;

    friend bool operator==(const SymTriple& a, const SymTriple& b) { return a.E_ == b.E_ && a.H_ == b.H_ && a.P_ == b.P_; }
    friend bool operator!=(const SymTriple& a, const SymTriple& b) { return !(a == b); }

private:
    struct Derived {};
    SymTriple(Derived, Series E, Series H, Series P) : E_(std::move(E)), H_(std::move(H)), P_(std::move(P)) {}
    Series E_, H_, P_;
};

// The first violated triple identity, if any.
IdentityCheck check_triple(const Series& E, const Series& H, const Series& P);

// k e_k = sum_{j=1}^k (-1)^{j-1} p_j e_{k-j} and p_k = sum_{j=1}^k (-1)^{j-1} j e_j h_{k-j}.
IdentityCheck check_newton(const SymTriple& t);

// One of the six De Moivre transition sums. coeffs[i] holds index i+1 of the source family.
std::vector<FieldElement> transition(Family src, Family dst, const std::vector<FieldElement>& coeffs, int upto);

SymTriple mul(const SymTriple& a, const SymTriple& b);
SymTriple div(const SymTriple& a, const SymTriple& b);
SymTriple pow(const SymTriple& t, const FieldElement& alpha);
// (H(t), E(t), P(-t))
SymTriple flip(const SymTriple& t);
// (E(-phi(-t)), H(phi(t)), phi'(t) P(phi(t))) for phi(0) = 0 of the triple's order.
SymTriple substitute(const SymTriple& t, const Series& phi);

// t -> c t
SymTriple scale(const SymTriple& t, const FieldElement& c);
// t -> t^m, giving order m N.
SymTriple stretch(const SymTriple& t, int m);
// Inverse of stretch, order floor(N/m). Needs h_k = 0 whenever m does not divide k.
SymTriple unstretch(const SymTriple& t, int m);
// Product over the m-th roots of unity, built from p~_k = m p_k for m | k and 0 otherwise.
SymTriple multisect(const SymTriple& t, int m);

// (1/H*(-t), H*(t), (log H*)'(t)).
SymTriple star_triple(const SymTriple& t);
// Coefficient n >= 1 of the starred triple from the original e, h or p by a De Moivre sum.
// For family e and n = 1 the value is h_1* (since e_1 = h_1).
FieldElement star_direct(const SymTriple& t, Family f, int n);
// (-1)^{n-1} e_n = [t^n] H^{-(n-1)}/(n-1), h_n = [t^n] H^{-(n+1)}/(n+1), p_n/n = [t^n] H^{-n}/n,
// evaluated on the triple whose H is given (n >= 1, n = 1 of e read from h).
FieldElement star_power_formula(const SymTriple& t, Family f, int n);

// E = prod (1 + x_j t), H = prod 1/(1 - x_j t), P = sum x_j/(1 - x_j t).
SymTriple from_roots(const std::vector<FieldElement>& xs, int order);
// Adds one more root by the Pascal recurrences.
SymTriple pascal_extend(const SymTriple& t, const FieldElement& x);

// S_{k,r} = sum_{j=r}^k (-1)^{j-r} C(j,r) e_j h_{k-j}, for 0 <= r <= k <= N.
FieldElement macmahon_S(const SymTriple& t, int k, int r);

struct Characterization {
    bool e_equals_h = false;  // e_k = h_k for k <= N
    bool p_even = false;      // p_{2j} = 0 for 2j <= N
    bool h_equals_p = false;
    bool e_equals_p = false;
    // Witness c = e_1; closed form (1 + ct, 1/(1 - ct), c/(1 - ct)).
    FieldElement c_h_equals_p;
    bool h_equals_p_closed_form = false;
    // Witness c = 2 e_1; closed form e_k = p_k = (-1)^k c^k B_k/k!, h_k = c^k/(k+1)!.
    FieldElement c_e_equals_p;
    bool e_equals_p_closed_form = false;
};
Characterization characterize(const SymTriple& t);

}  // namespace symtriple
