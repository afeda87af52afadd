#include <cmath>
#include <cstdio>
#include <numbers>

#include "suite.hpp"

namespace symtriple::verify {

namespace {

constexpr long kTerms = 100000;
constexpr double kTolerance = 1e-4;
constexpr double kGamma = 0.57721566490153286;
constexpr double kZeta3 = 1.2020569031595943;

std::string format(const char* fmt, double a, double b, double c) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, a, b, c);
    return buf;
}

// Rows of stirc(n, 0..K) for n = 1..N and n = -1..-N, streamed from the recursion.
struct StircRows {
    int K;
    std::vector<double> pos, neg;
    long n = 0;
    explicit StircRows(int k) : K(k), pos(static_cast<std::size_t>(k) + 1, 0.0), neg(static_cast<std::size_t>(k) + 1, 0.0) {}
    void advance() {
        ++n;
        // stirc(n, k) = stirc(n-1, k) + stirc(n, k-1)/n with stirc(n, -1) = delta_{n,1}.
        double prev = n == 1 ? 1.0 : 0.0;
        for (int k = 0; k <= K; ++k) {
            pos[static_cast<std::size_t>(k)] += prev / static_cast<double>(n);
            prev = pos[static_cast<std::size_t>(k)];
        }
        if (n == 1) {
            for (int k = 0; k <= K; ++k) neg[static_cast<std::size_t>(k)] = k == 1 ? 1.0 : 0.0;
            return;
        }
        // stirc(-m-1, k) = stirc(-m, k) + stirc(-m, k-1)/m with m = n - 1, updated from high k down.
        const double m = static_cast<double>(n - 1);
        for (int k = K; k >= 1; --k) neg[static_cast<std::size_t>(k)] += neg[static_cast<std::size_t>(k - 1)] / m;
    }
};

}  // namespace

void suite_numeric(Recorder& r) {
    const double N = static_cast<double>(kTerms);
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6;
    const double pi4 = std::pow(std::numbers::pi, 4);
    double zeta3_sum = 0, squares_sum = 0, pq01 = 0, pq11 = 0;
    double H = 0, H2 = 0;
    StircRows rows(1);
    for (long n = 0; n <= kTerms; ++n) {
        if (n > 0) {
            H += 1.0 / static_cast<double>(n);
            H2 += 1.0 / (static_cast<double>(n) * static_cast<double>(n));
            rows.advance();
            double inv_n2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
            pq01 += rows.pos[0] * rows.neg[1] * inv_n2;
            pq11 += rows.pos[1] * rows.neg[1] * inv_n2;
        }
        double w = 1.0 / ((static_cast<double>(n) + 1) * (static_cast<double>(n) + 1));
        zeta3_sum += H * w;
        squares_sum += (2 * H * H - H2) * w;
    }
    // Tails by integrals of (log x + gamma)^j / x^2 from the midpoint beyond the last term.
    auto tail = [](double a, int j) {
        double L = std::log(a) + kGamma;
        return j == 0 ? 1 / a : j == 1 ? (L + 1) / a : (L * L + 2 * L + 2) / a;
    };
    {
        double a = N + 1.5;  // summand in m = n + 1, last m = N + 1
        double est = tail(a, 1);
        double deficit = kZeta3 - zeta3_sum;
        // log(m) <= H_{m-1} <= log(m) + 1 on m >= N + 2 bounds the tail on both sides.
        double lower = (std::log(N + 2) + 1) / (N + 2), upper = (std::log(N + 1) + 2) / (N + 1);
        r.check_near("sum_{n<=N} H_n/(n+1)^2 + tail = zeta(3)", kTerms, zeta3_sum + est, kZeta3, kTolerance);
        r.check_true("zeta(3) deficit lies within the tail bounds", kTerms, lower <= deficit && deficit <= upper,
                     std::to_string(deficit), "[" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
        r.note(format("zeta(3): partial sum %.12f, tail estimate %.6e, raw deficit %.6e", zeta3_sum, est, deficit));
        r.note(format("zeta(3): rigorous tail bounds [%.6e, %.6e], estimated total %.12f", lower, upper, zeta3_sum + est));
    }
    {
        double a = N + 1.5;
        double est = 2 * tail(a, 2) - zeta2 / a;
        double target = 19 * pi4 / 360;
        r.check_near("sum (2 H_n^2 - H_n^{(2)})/(n+1)^2 + tail = 19 pi^4/360", kTerms, squares_sum + est, target, kTolerance);
        r.note(format("19 pi^4/360: partial sum %.12f, tail estimate %.6e, raw deficit %.6e", squares_sum, est, target - squares_sum));
    }
    {
        double a = N + 0.5;
        double est = tail(a, 0);
        r.check_near("sum stirc(n, 0) stirc(-n, 1)/n^2 + tail = zeta(2)", kTerms, pq01 + est, zeta2, kTolerance);
        r.note(format("(p, q) = (0, 1): partial sum %.12f, tail estimate %.6e, raw deficit %.6e", pq01, est, zeta2 - pq01));
        est = tail(a, 1);
        r.check_near("sum stirc(n, 1) stirc(-n, 1)/n^2 + tail = 2 zeta(3)", kTerms, pq11 + est, 2 * kZeta3, kTolerance);
        r.note(format("(p, q) = (1, 1): partial sum %.12f, tail estimate %.6e, raw deficit %.6e", pq11, est, 2 * kZeta3 - pq11));
    }
}

}  // namespace symtriple::verify
