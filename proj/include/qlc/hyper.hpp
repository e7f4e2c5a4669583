#ifndef QLC_HYPER_HPP
#define QLC_HYPER_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "qlc/ball.hpp"
#include "qlc/errors.hpp"
#include "qlc/real.hpp"

namespace qlc {

struct HyperParams {
    std::vector<Real> a;
    std::vector<Real> b;
    Real x;
};

struct EvalResult {
    Real value;
    Real error_bound;
    std::size_t terms_used = 0;
    /// Index from which the geometric tail bound was applied, and its ratio.
    std::size_t tail_index = 0;
    Real tail_ratio;

    Ball ball() const { return {value, error_bound}; }
};

namespace detail {

inline bool is_nonpositive_integer(const Real& v) { return v.is_integer() && v.sign() <= 0; }

/// Bound on |t_{k+1}/t_k| valid for every k >= n, or +inf if none is
/// available yet. Each numerator is paired with a denominator (n! supplies
/// the extra one); a pair (alpha, beta) contributes 1 if alpha <= beta and
/// (alpha+n)/(beta+n) otherwise, an unpaired denominator 1/(beta+n).
inline Real tail_ratio_bound(const std::vector<Real>& a, const std::vector<Real>& b, const Real& absx,
                             std::size_t n, mpfr_prec_t prec) {
    std::vector<Real> dens = b;
    dens.emplace_back(1L, prec);
    const Real nn(static_cast<long>(n), prec);
    Real rho = absx;
    for (std::size_t i = 0; i < dens.size(); ++i) {
        const Real beta = dens[i] + nn;
        if (beta.sign() <= 0) return Real::inf(prec);
        if (i < a.size()) {
            const Real alpha = a[i] + nn;
            if (alpha.sign() <= 0) return Real::inf(prec);
            if (a[i] > dens[i]) rho = rho * (alpha / beta);
        } else {
            rho = rho / beta;
        }
    }
    return rho;
}

} // namespace detail

/// Generalized hypergeometric sum by direct term recurrence.
///
/// Stops once the geometric tail bound falls below 2^-precision relative to
/// the partial sum. The error bound adds that tail to a running-error bound
/// for the rounding in the recurrence and the summation.
inline EvalResult pfq_direct(const HyperParams& params, mpfr_prec_t precision) {
    const std::size_t p = params.a.size();
    const std::size_t q = params.b.size();
    for (const auto& bj : params.b)
        if (detail::is_nonpositive_integer(bj)) throw PoleParameter("denominator parameter " + bj.str(6));
    if (p > q + 1) throw DomainError("pFq with p > q+1 diverges for x != 0");

    const mpfr_prec_t wp = precision + 32;
    const Real x = params.x.with_precision(wp);
    const Real absx = abs(x);
    if (p == q + 1 && absx >= Real(1L, wp)) throw DivergentArgument("|x| >= 1 with p = q+1");

    bool terminating = false;
    for (const auto& ai : params.a) terminating = terminating || detail::is_nonpositive_integer(ai);

    std::vector<Real> a;
    std::vector<Real> b;
    for (const auto& v : params.a) a.push_back(v.with_precision(wp));
    for (const auto& v : params.b) b.push_back(v.with_precision(wp));

    const Real target = Real::epsilon(precision, wp);
    Real sum(1L, wp);
    Real abs_sum(1L, wp);
    Real term(1L, wp);
    Real tail(wp);
    Real rho(wp);
    std::size_t n = 0;
    std::size_t tail_index = 0;
    const std::size_t max_terms = 1000000;
    for (;; ++n) {
        const Real nn(static_cast<long>(n), wp);
        Real next = term * x / (nn + Real(1L, wp));
        for (const auto& ai : a) next *= ai + nn;
        for (const auto& bj : b) next /= bj + nn;
        if (next.is_zero()) {
            if (terminating) break;
            if (x.is_zero()) break;
        }
        rho = detail::tail_ratio_bound(a, b, absx, n + 1, wp);
        if (rho < Real(1L, wp)) {
            tail = abs(next) / (Real(1L, wp) - rho);
            if (tail <= target * abs(sum)) {
                tail_index = n + 1;
                break;
            }
        }
        sum += next;
        abs_sum += abs(next);
        term = std::move(next);
        if (n > max_terms) throw DomainError("hypergeometric summation did not converge");
    }
    if (terminating || x.is_zero()) tail = Real(wp);

    const std::size_t count = n + 1;
    const Real unit = Real::epsilon(wp - 1, wp);
    const Real rounding = abs_sum * Real(static_cast<long>(count * (p + q + 4)), wp) * unit;

    EvalResult out;
    out.value = sum.with_precision(precision);
    out.error_bound = (tail + rounding + Ball::rounding_pad(out.value)).with_precision(precision);
    out.terms_used = count;
    out.tail_index = tail_index;
    out.tail_ratio = rho.with_precision(precision);
    return out;
}

struct KummerBundle {
    Real a;
    Real c;
    Real x;
    Real prefactor;
};

/// 1F1(a;c;x) = e^x 1F1(c-a;c;-x).
inline KummerBundle kummer_transform(const Real& a, const Real& c, const Real& x) {
    return {c - a, c, -x, exp(x)};
}

struct PfaffBundle {
    Real a;
    Real b;
    Real c;
    Real x;
    Real prefactor;
};

/// 2F1(a,b;c;x) = (1-x)^-a 2F1(a,c-b;c;x/(x-1)), for x < 1.
inline PfaffBundle pfaff_transform(const Real& a, const Real& b, const Real& c, const Real& x) {
    const Real one(1L, x.precision());
    if (x >= one) throw DomainError("Pfaff transformation needs x < 1");
    return {a, c - b, c, x / (x - one), pow(one - x, -a)};
}

namespace detail {

/// Multiplies a sum by a rounded elementary prefactor and rounds to the
/// output precision, widening the bound for both roundings.
inline EvalResult scale_result(const Real& prefactor, EvalResult inner, mpfr_prec_t precision) {
    const Ball v = Ball{prefactor, Ball::rounding_pad(prefactor)} * inner.ball();
    inner.value = v.mid.with_precision(precision);
    inner.error_bound = (v.rad + Ball::rounding_pad(inner.value)).with_precision(precision);
    inner.error_bound = inner.error_bound + Ball::rounding_pad(inner.error_bound);
    return inner;
}

} // namespace detail

/// pFq value. Negative arguments of 1F1 and 2F1 go through the Kummer and
/// Pfaff transformations; other negative-argument sums are direct.
inline EvalResult pfq(const HyperParams& params, mpfr_prec_t precision) {
    const std::size_t p = params.a.size();
    const std::size_t q = params.b.size();
    if (params.x.sign() < 0 && p == 1 && q == 1) {
        const mpfr_prec_t wp = precision + 32;
        const auto t = kummer_transform(params.a[0].with_precision(wp), params.b[0].with_precision(wp),
                                        params.x.with_precision(wp));
        return detail::scale_result(t.prefactor, pfq_direct({{t.a}, {t.c}, t.x}, wp), precision);
    }
    if (params.x.sign() < 0 && p == 2 && q == 1) {
        for (const auto& bj : params.b)
            if (detail::is_nonpositive_integer(bj)) throw PoleParameter("denominator parameter " + bj.str(6));
        if (abs(params.x) >= Real(1L, params.x.precision())) throw DivergentArgument("|x| >= 1 with p = q+1");
        const mpfr_prec_t wp = precision + 32;
        const auto t = pfaff_transform(params.a[0].with_precision(wp), params.a[1].with_precision(wp),
                                       params.b[0].with_precision(wp), params.x.with_precision(wp));
        return detail::scale_result(t.prefactor, pfq_direct({{t.a, t.b}, {t.c}, t.x}, wp), precision);
    }
    return pfq_direct(params, precision);
}

inline EvalResult hyp1f1(const Real& a, const Real& c, const Real& x, mpfr_prec_t precision) {
    return pfq({{a}, {c}, x}, precision);
}

inline EvalResult hyp2f1(const Real& a, const Real& b, const Real& c, const Real& x, mpfr_prec_t precision) {
    return pfq({{a, b}, {c}, x}, precision);
}

/// y = 1F1'(a;c;x) / 1F1(a;c;x) = a 1F1(a+1;c+1;x) / (c 1F1(a;c;x)).
inline Ball kummer_log_derivative(const Real& a, const Real& c, const Real& x, mpfr_prec_t precision) {
    const Real one(1L, precision);
    const Ball num = Ball::exact(a) * hyp1f1(a + one, c + one, x, precision).ball();
    const Ball den = Ball::exact(c) * hyp1f1(a, c, x, precision).ball();
    return num / den;
}

/// |LHS - RHS| of a relation together with the evaluation error bound.
struct Residual {
    Real residual;
    Real bound;
    bool within_bound() const { return residual <= bound; }
};

inline Residual residual_of(const Ball& difference) { return {abs(difference.mid), difference.rad}; }

/// 1F1(a+2;c+2;x) = (c+1)(x-c)/((a+1)x) 1F1(a+1;c+1;x) + c(c+1)/((a+1)x) 1F1(a;c;x).
inline Residual contiguous_residual_1f1(const Real& a, const Real& c, const Real& x, mpfr_prec_t precision) {
    if (x.is_zero()) throw DomainError("the contiguous relation needs x != 0");
    const Real one(1L, precision);
    const Real two(2L, precision);
    const Ball f0 = hyp1f1(a, c, x, precision).ball();
    const Ball f1 = hyp1f1(a + one, c + one, x, precision).ball();
    const Ball f2 = hyp1f1(a + two, c + two, x, precision).ball();
    const Ball ax = Ball::exact(a + one) * Ball::exact(x);
    const Ball k1 = Ball::exact(c + one) * Ball::exact(x - c) / ax;
    const Ball k0 = Ball::exact(c) * Ball::exact(c + one) / ax;
    return residual_of(f2 - (k1 * f1 + k0 * f0));
}

/// (a+1)/(c+1) 2F1(a+2,b;c+2;x) = (c+(a-b+1)x)/((c-b+1)x) 2F1(a+1,b;c+1;x) - c/((c-b+1)x) 2F1(a,b;c;x).
inline Residual contiguous_residual_2f1(const Real& a, const Real& b, const Real& c, const Real& x,
                                        mpfr_prec_t precision) {
    if (x.is_zero()) throw DomainError("the contiguous relation needs x != 0");
    const Real one(1L, precision);
    const Real two(2L, precision);
    const Real cb1 = c - b + one;
    if (cb1.is_zero()) throw DomainError("the contiguous relation needs c - b + 1 != 0");
    const Ball f0 = hyp2f1(a, b, c, x, precision).ball();
    const Ball f1 = hyp2f1(a + one, b, c + one, x, precision).ball();
    const Ball f2 = hyp2f1(a + two, b, c + two, x, precision).ball();
    const Ball d = Ball::exact(cb1) * Ball::exact(x);
    const Ball lhs = Ball::exact(a + one) / Ball::exact(c + one) * f2;
    const Ball k1 = Ball::exact(c + (a - b + one) * x) / d;
    const Ball k0 = Ball::exact(c) / d;
    return residual_of(lhs - (k1 * f1 - k0 * f0));
}

/// The three 1F1 contiguous relations behind the Kummer product identity:
///   1F1(a;c) = 1F1(a;c+1) + ax/(c(c+1)) 1F1(a+1;c+2)
///   1F1(a+mu;c+mu) = 1F1(a+mu+1;c+mu+1) - (c-a)x/((c+mu)(c+mu+1)) 1F1(a+mu+1;c+mu+2)
///   1F1(a+1;c+1) = 1F1(a;c+1) + x/(c+1) 1F1(a+1;c+2)
inline std::array<Residual, 3> kummer_identity_contiguous_residuals(const Real& a, const Real& c, const Real& mu,
                                                                    const Real& x, mpfr_prec_t precision) {
    const Real one(1L, precision);
    const Real two(2L, precision);
    auto F = [&](const Real& p, const Real& q) { return hyp1f1(p, q, x, precision).ball(); };
    const Ball X = Ball::exact(x);

    const Ball r1 = F(a, c) - (F(a, c + one) + Ball::exact(a) * X / (Ball::exact(c) * Ball::exact(c + one)) *
                                                   F(a + one, c + two));
    const Real am = a + mu;
    const Real cm = c + mu;
    const Ball r2 = F(am, cm) - (F(am + one, cm + one) - Ball::exact(c - a) * X /
                                                             (Ball::exact(cm) * Ball::exact(cm + one)) *
                                                             F(am + one, cm + two));
    const Ball r3 = F(a + one, c + one) - (F(a, c + one) + X / Ball::exact(c + one) * F(a + one, c + two));
    return {residual_of(r1), residual_of(r2), residual_of(r3)};
}

} // namespace qlc

#endif // QLC_HYPER_HPP
