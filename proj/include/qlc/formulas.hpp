#ifndef QLC_FORMULAS_HPP
#define QLC_FORMULAS_HPP

// Closed forms for the Kummer and Gauss bounds, each written exactly once.
// Every evaluator in bounds.hpp reads from here. Notation: F_k stands for
// 1F1(a+k;c+k;x); r(x) = 2F1(a+1,b;c+1;x) / 2F1(a,b;c;x).

#include "qlc/real.hpp"

namespace qlc::formulas {

inline Real one_like(const Real& v) { return Real(1L, v.precision()); }
inline Real num(long n, const Real& like) { return Real(n, like.precision()); }

// --- Turan inequalities for 1F1 -------------------------------------------

/// c >= a: 2x(c-a)/(c)_3 <= F_1^2 - F_0 F_2.
inline Real turan1_lower(const Real& a, const Real& c, const Real& x) {
    return num(2, x) * x * (c - a) / rising_factorial(c, 3);
}
/// c >= a: F_1^2 - F_0 F_2 <= (c-a)/(c(a+1)) F_1^2.
inline Real turan1_upper_factor(const Real& a, const Real& c) { return (c - a) / (c * (a + one_like(a))); }

/// a >= c: (a-c)/(c(c+1)) <= (a/c) F_1^2 - (a+1)/(c+1) F_0 F_2 <= (a-c)/(c(c+1)) F_1^2.
inline Real turan2_factor(const Real& a, const Real& c) { return (a - c) / (c * (c + one_like(c))); }
inline Real turan2_middle_weight_sq(const Real& a, const Real& c) { return a / c; }
inline Real turan2_middle_weight_prod(const Real& a, const Real& c) {
    return (a + one_like(a)) / (c + one_like(c));
}

// --- Logarithmic derivative y = 1F1'/1F1 ------------------------------------
// Two roots of the quadratics x y^2 + (c-x) y - a and (ax+c) y^2 - a(x-c+1) y - a^2.

/// (x - c + sqrt((x-c)^2 + 4ax)) / (2x); upper bound when c >= a.
/// For x <= c the conjugate form 2a / (sqrt(...) - (x-c)) avoids cancellation
/// and the 0/0 at x = 0.
inline Real logderiv_root_u(const Real& a, const Real& c, const Real& x) {
    const Real d = x - c;
    const Real s = sqrt(d * d + num(4, x) * a * x);
    if (d.sign() <= 0) return num(2, a) * a / (s - d);
    return (d + s) / (num(2, x) * x);
}

/// (x - c + 1 + sqrt((x-c+1)^2 + 4ax + 4c)) / (2x + 2c/a); lower bound when c >= a.
inline Real logderiv_root_l(const Real& a, const Real& c, const Real& x) {
    const Real d = x - c + one_like(x);
    const Real s = sqrt(d * d + num(4, x) * a * x + num(4, c) * c);
    const Real den = num(2, x) * x + num(2, c) * c / a;
    if (d.sign() < 0) return (num(4, x) * a * x + num(4, c) * c) / ((s - d) * den);
    return (d + s) / den;
}

// --- Integrated envelopes for 1F1 ------------------------------------------
// B1 integrates logderiv_root_l and B2 integrates logderiv_root_u from 0 to x;
// both equal 1 at x = 0. With b = (a+1)(a-c):

inline Real kummer_b1(const Real& a, const Real& c, const Real& x) {
    const Real one = one_like(x);
    const Real two = num(2, x);
    const Real b = (a + one) * (a - c);
    const Real s = sqrt((x - c + one) * (x - c + one) + num(4, x) * a * x + num(4, c) * c);
    const Real a2 = a * a;
    const Real base_num = one + two * a - c + x + s;
    const Real base_den = c * c * (a + one) + a - c + (a2 + b) * x + (a2 - b) * s;
    if (base_num.sign() <= 0 || base_den.sign() <= 0) throw DomainError("B1 base is not positive");
    const Real lead = pow(two + two * a, -b / a) * pow(c, (a2 - b) / a);
    return lead * pow(base_num, (a2 + b) / (two * a)) / pow(base_den, (a2 - b) / (two * a)) *
           exp((x - c - one + s) / two);
}

inline Real kummer_b2(const Real& a, const Real& c, const Real& x) {
    const Real two = num(2, x);
    const Real s = sqrt((x - c) * (x - c) + num(4, x) * a * x);
    const Real base_num = two * a + s + x - c;
    const Real base_den = two * a * x / c + s - (x - c);
    if (base_num.sign() <= 0 || base_den.sign() <= 0) throw DomainError("B2 base is not positive");
    const Real lead = pow(num(4, a) * a * c, c / two) / pow(two * a, a);
    return lead * pow(base_num, a - c / two) / pow(base_den, c / two) * exp((s + x - c) / two);
}

// --- Gauss ratio r(x) -------------------------------------------------------

/// Root (B - sqrt(B^2 - 4a(c-b+1)x)) / (2(a/c)(c-b+1)x), B = c + (a-b+1)x,
/// written as 2c / (B + sqrt(...)). Upper bound for r when c+1 < b, lower
/// when c+1 > b; at b = c+1 it equals r = c/(c-(c-a)x).
inline Real gauss_ratio_root(const Real& a, const Real& b, const Real& c, const Real& x) {
    const Real one = one_like(x);
    const Real big_b = c + (a - b + one) * x;
    const Real rad = big_b * big_b - num(4, a) * a * (c - b + one) * x;
    if (rad.sign() < 0) throw DomainError("negative radicand in the Gauss ratio bound");
    return num(2, c) * c / (big_b + sqrt(rad));
}

/// Euler's fraction r = c/(a(b-c)x) K (a+n)(b-c-n)x / (c+n+(a-b+n+1)x).
inline Real euler_partial_numerator(const Real& a, const Real& b, const Real& c, const Real& x, long n) {
    const Real nn = num(n, x);
    return (a + nn) * (b - c - nn) * x;
}
inline Real euler_partial_denominator(const Real& a, const Real& b, const Real& c, const Real& x, long n) {
    const Real nn = num(n, x);
    return c + nn + (a - b + nn + one_like(x)) * x;
}

/// Closed form of Euler's fraction made 1-periodic from n = 0:
/// (B - sqrt(B^2 - 4a(c-b)x)) / (2(a/c)(c-b)x), B = c + (a-b+1)x. Raw display.
inline Real euler_periodic0_display(const Real& a, const Real& b, const Real& c, const Real& x) {
    const Real one = one_like(x);
    const Real big_b = c + (a - b + one) * x;
    const Real s = sqrt(big_b * big_b - num(4, a) * a * (c - b) * x);
    return (big_b - s) / (num(2, x) * (a / c) * (c - b) * x);
}

/// Fixed point t = alpha / (beta + t) taken on the branch that vanishes with
/// alpha: 2 alpha / (beta + sqrt(beta^2 + 4 alpha)).
inline Real periodic_tail(const Real& alpha, const Real& beta) {
    const Real rad = beta * beta + num(4, alpha) * alpha;
    if (rad.sign() < 0) throw DomainError("negative radicand in a periodic tail");
    const Real den = beta + sqrt(rad);
    if (den.is_zero()) throw DomainError("periodic tail denominator vanished");
    return num(2, alpha) * alpha / den;
}

} // namespace qlc::formulas

#endif // QLC_FORMULAS_HPP
