#ifndef QLC_BOUNDS_HPP
#define QLC_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "qlc/evaluate.hpp"
#include "qlc/formulas.hpp"

namespace qlc {

namespace detail {
/// Closed forms here take at most a few dozen rounded operations, plus real
/// powers whose error grows with the exponent; 2^(16-prec) relative covers it.
inline Ball closed_form(const Real& v) {
    return {v, abs(v) * Real::epsilon(v.precision() - 16, v.precision())};
}
} // namespace detail

struct BoundTriple {
    Real x;
    Ball lower;
    Ball reference;
    Ball upper;
    std::string lower_tag;
    std::string reference_tag;
    std::string upper_tag;

    /// Signed gaps reference - lower and upper - reference.
    Real margin_low() const { return reference.mid - lower.mid; }
    Real margin_high() const { return upper.mid - reference.mid; }

    /// lower <= reference <= upper up to the combined error radii; with
    /// `strict_lower`, the lower gap must exceed the combined radius.
    bool brackets(bool strict_lower = false, bool strict_upper = false) const {
        const Real tol_low = lower.rad + reference.rad;
        const Real tol_high = upper.rad + reference.rad;
        const bool low_ok = strict_lower ? margin_low() > tol_low : margin_low() >= -tol_low;
        const bool high_ok = strict_upper ? margin_high() > tol_high : margin_high() >= -tol_high;
        return low_ok && high_ok;
    }
};

/// Turanian of 1F1 with its bounds. c >= a selects the first pair of
/// inequalities; a > c the weighted second pair.
inline BoundTriple turan_1f1(const Real& a, const Real& c, const Real& x, mpfr_prec_t precision) {
    if (a.sign() <= 0 || c.sign() <= 0) throw DomainError("turan_1f1 needs a, c > 0");
    if (x.sign() < 0) throw DomainError("turan_1f1 needs x >= 0");
    const Real one(1L, precision);
    const Real two(2L, precision);
    const Ball f0 = hyp1f1(a, c, x, precision).ball();
    const Ball f1 = hyp1f1(a + one, c + one, x, precision).ball();
    const Ball f2 = hyp1f1(a + two, c + two, x, precision).ball();
    BoundTriple t;
    t.x = x;
    if (c >= a) {
        t.lower = detail::closed_form(formulas::turan1_lower(a, c, x));
        t.reference = f1 * f1 - f0 * f2;
        t.upper = detail::closed_form(formulas::turan1_upper_factor(a, c)) * f1 * f1;
        t.lower_tag = "turan1_lower";
        t.reference_tag = "F1^2-F0*F2";
        t.upper_tag = "turan1_upper";
    } else {
        const Ball k = detail::closed_form(formulas::turan2_factor(a, c));
        t.lower = k;
        t.reference = detail::closed_form(formulas::turan2_middle_weight_sq(a, c)) * f1 * f1 -
                      detail::closed_form(formulas::turan2_middle_weight_prod(a, c)) * f0 * f2;
        t.upper = k * f1 * f1;
        t.lower_tag = "turan2_lower";
        t.reference_tag = "(a/c)F1^2-((a+1)/(c+1))F0*F2";
        t.upper_tag = "turan2_upper";
    }
    return t;
}

struct Envelope {
    Ball lower;
    Ball upper;
};

/// Bounds for 1F1'(a;c;x)/1F1(a;c;x), x >= 0.
inline Envelope logderiv_envelope(const Real& a, const Real& c, const Real& x) {
    if (a.sign() <= 0 || c.sign() <= 0) throw DomainError("logderiv_envelope needs a, c > 0");
    if (x.sign() < 0) throw DomainError("logderiv_envelope needs x >= 0");
    const Ball u = detail::closed_form(formulas::logderiv_root_u(a, c, x));
    const Ball l = detail::closed_form(formulas::logderiv_root_l(a, c, x));
    if (c >= a) return {l, u};
    return {u, l};
}

enum class EnvelopeOrientation { B1Lower, B2Lower };

struct KummerEnvelope {
    Ball b1;
    Ball b2;
    EnvelopeOrientation orientation;
    const Ball& lower() const { return orientation == EnvelopeOrientation::B1Lower ? b1 : b2; }
    const Ball& upper() const { return orientation == EnvelopeOrientation::B1Lower ? b2 : b1; }
};

/// B1 <= 1F1 <= B2 when c >= a, reversed when a > c.
inline KummerEnvelope kummer_envelope(const Real& a, const Real& c, const Real& x) {
    if (a.sign() <= 0 || c.sign() <= 0) throw DomainError("kummer_envelope needs a, c > 0");
    if (x.sign() < 0) throw DomainError("kummer_envelope needs x >= 0");
    return {detail::closed_form(formulas::kummer_b1(a, c, x)), detail::closed_form(formulas::kummer_b2(a, c, x)),
            c >= a ? EnvelopeOrientation::B1Lower : EnvelopeOrientation::B2Lower};
}

enum class BoundDirection { Upper, Lower, Exact };

inline std::string to_string(BoundDirection d) {
    switch (d) {
    case BoundDirection::Upper: return "UPPER";
    case BoundDirection::Lower: return "LOWER";
    case BoundDirection::Exact: return "EXACT";
    }
    return "?";
}

struct GaussRatioBound {
    Ball bound;
    BoundDirection direction;
};

/// Bound for r(x) = 2F1(a+1,b;c+1;x)/2F1(a,b;c;x) when c >= a > 0, 0 <= x < 1.
inline GaussRatioBound gauss_ratio_bound(const Real& a, const Real& b, const Real& c, const Real& x) {
    if (!(c >= a) || a.sign() <= 0) throw DomainError("gauss_ratio_bound needs c >= a > 0");
    if (x.sign() < 0 || x >= Real(1L, x.precision())) throw DomainError("gauss_ratio_bound needs 0 <= x < 1");
    const Real d = c - b + Real(1L, c.precision());
    const BoundDirection dir = d.is_zero() ? BoundDirection::Exact
                                           : (d.sign() < 0 ? BoundDirection::Upper : BoundDirection::Lower);
    return {detail::closed_form(formulas::gauss_ratio_root(a, b, c, x)), dir};
}

/// Directly evaluated r(x).
inline Ball gauss_ratio(const Real& a, const Real& b, const Real& c, const Real& x, mpfr_prec_t precision) {
    const Real one(1L, precision);
    return hyp2f1(a + one, b, c + one, x, precision).ball() / hyp2f1(a, b, c, x, precision).ball();
}

enum class TailMode { FullEuler, PeriodicFrom };

/// K_{n>=0} a_n / b_n with either a truncated tail (FullEuler: the fraction
/// stops at `depth`) or a tail made 1-periodic from index `periodic_from`.
struct CFSpec {
    std::function<Real(long)> partial_numerator;
    std::function<Real(long)> partial_denominator;
    TailMode mode = TailMode::FullEuler;
    std::size_t periodic_from = 0;
};

inline Real continued_fraction_eval(const CFSpec& cf, std::size_t depth) {
    long top = static_cast<long>(depth);
    Real t(cf.partial_numerator(0).precision());
    if (cf.mode == TailMode::PeriodicFrom) {
        top = static_cast<long>(cf.periodic_from);
        t = formulas::periodic_tail(cf.partial_numerator(top), cf.partial_denominator(top));
        --top;
    } else {
        const Real den = cf.partial_denominator(top);
        if (den.is_zero()) throw ZeroDenominator(static_cast<std::size_t>(top));
        t = cf.partial_numerator(top) / den;
        --top;
    }
    for (long n = top; n >= 0; --n) {
        const Real den = cf.partial_denominator(n) + t;
        if (den.is_zero()) throw ZeroDenominator(static_cast<std::size_t>(n));
        t = cf.partial_numerator(n) / den;
    }
    return t;
}

/// Euler's fraction for r(x). The leading factor c/(a(b-c)x) times a_0
/// reduces to c, so r = c / (b_0 + K_{n>=1} a_n/b_n); this form also covers
/// b = c and x = 0.
inline Real euler_fraction(const Real& a, const Real& b, const Real& c, const Real& x, TailMode mode,
                           std::size_t depth_or_n) {
    namespace fm = formulas;
    const Real b0 = fm::euler_partial_denominator(a, b, c, x, 0);
    if (mode == TailMode::FullEuler && depth_or_n == 0) {
        if (b0.is_zero()) throw ZeroDenominator(0);
        return c / b0;
    }
    CFSpec shifted;
    if (mode == TailMode::PeriodicFrom && depth_or_n == 0) {
        shifted.partial_numerator = [=](long) { return fm::euler_partial_numerator(a, b, c, x, 0); };
        shifted.partial_denominator = [=](long) { return b0; };
        shifted.mode = TailMode::PeriodicFrom;
        shifted.periodic_from = 0;
    } else {
        shifted.partial_numerator = [=](long n) { return fm::euler_partial_numerator(a, b, c, x, n + 1); };
        shifted.partial_denominator = [=](long n) { return fm::euler_partial_denominator(a, b, c, x, n + 1); };
        shifted.mode = mode;
        shifted.periodic_from = depth_or_n - 1;
    }
    const Real tail = continued_fraction_eval(shifted, depth_or_n - (mode == TailMode::FullEuler ? 1 : 0));
    const Real den = b0 + tail;
    if (den.is_zero()) throw ZeroDenominator(0);
    return c / den;
}

enum class TuranKind { F, G, H };

inline std::string to_string(TuranKind k) {
    switch (k) {
    case TuranKind::F: return "F";
    case TuranKind::G: return "G";
    case TuranKind::H: return "H";
    }
    return "?";
}

namespace detail {

inline constexpr std::size_t kSequenceHorizon = 64;

inline bool lc_pf2(const CoefficientSequence& seq) {
    const auto f = seq.terms(kSequenceHorizon);
    return sequence_is_log_concave(f) && sequence_is_pf2(f);
}

/// Hypotheses of the two-sided corollaries for each kind; throws
/// HypothesisUnmet with the reason.
inline void require_two_sided_hypotheses(TuranKind kind, const Rational& a, const Rational& c,
                                         const CoefficientSequence& seq) {
    if (!a.is_positive() || !c.is_positive()) throw HypothesisUnmet("a and c must be positive");
    const Rational c1 = c + Rational(1);
    switch (kind) {
    case TuranKind::F:
        if (c < a) throw HypothesisUnmet("kind F needs c >= a");
        if (!lc_pf2(seq)) throw HypothesisUnmet("kind F needs a log-concave sequence without internal zeros");
        return;
    case TuranKind::G:
        if (a < c) throw HypothesisUnmet("kind G needs a >= c");
        if (a > c1 && !lc_pf2(seq))
            throw HypothesisUnmet("kind G with a > c+1 needs a log-concave sequence without internal zeros");
        return;
    case TuranKind::H:
        if ((a < c || a > c1) && !lc_pf2(seq))
            throw HypothesisUnmet("kind H with a outside [c, c+1] needs a log-concave sequence without internal zeros");
        return;
    }
}

inline Family family_of(TuranKind k) {
    return k == TuranKind::F ? Family::F : (k == TuranKind::G ? Family::G : Family::H);
}

} // namespace detail

/// Two-sided bounds for f(nu;x)^2 - f(0;x) f(2nu;x), for nu a positive integer.
inline BoundTriple turanian_two_sided(TuranKind kind, const Rational& a, const Rational& c, std::uint64_t nu,
                                      const Real& x, const CoefficientSequence& seq, mpfr_prec_t precision) {
    if (nu == 0) throw DomainError("nu must be a positive integer");
    detail::require_two_sided_hypotheses(kind, a, c, seq);
    const FamilySpec spec{detail::family_of(kind), a, c, seq};
    const Rational nuq(static_cast<long>(nu));
    const Ball fnu = family_value(spec, nuq, x, precision);
    const Ball f0 = family_value(spec, Rational(0), x, precision);
    const Ball f2nu = family_value(spec, nuq + nuq, x, precision);
    const auto w = seq.terms(1);
    const Rational& w0 = w[0];
    const Rational& w1 = w[1];

    BoundTriple t;
    t.x = x;
    t.reference = fnu * fnu - f0 * f2nu;
    t.reference_tag = "f(nu)^2-f(0)f(2nu)";
    switch (kind) {
    case TuranKind::F: {
        const Rational k = Rational(2) * w0 * w1 * nuq * nuq * (c - a) /
                           (c * (c + nuq) * (c + nuq + nuq));
        t.lower = Ball::exact(k, precision) * Ball::exact(x.with_precision(precision));
        const Rational up = (rising_factorial(a + nuq, nu) * rising_factorial(c, nu) -
                             rising_factorial(c + nuq, nu) * rising_factorial(a, nu)) /
                            (rising_factorial(c, nu) * rising_factorial(a + nuq, nu));
        t.upper = Ball::exact(up, precision) * fnu * fnu;
        break;
    }
    case TuranKind::G: {
        const Rational bracket = rising_factorial(a, nu) * rising_factorial(a, nu) /
                                     (rising_factorial(c, nu) * rising_factorial(c, nu)) -
                                 rising_factorial(a, 2 * nu) / rising_factorial(c, 2 * nu);
        const Real ga = gamma(Real(a, precision + 16)) / gamma(Real(c, precision + 16));
        t.lower = detail::closed_form((ga * ga).with_precision(precision)) * Ball::exact(w0 * w0 * bracket, precision);
        const Rational up = (rising_factorial(c + nuq, nu) * rising_factorial(a, nu) -
                             rising_factorial(a + nuq, nu) * rising_factorial(c, nu)) /
                            (rising_factorial(a, nu) * rising_factorial(c + nuq, nu));
        t.upper = Ball::exact(up, precision) * fnu * fnu;
        break;
    }
    case TuranKind::H: {
        const Real den = gamma(Real(c + nuq, precision + 16)) * gamma(Real(c + nuq + nuq, precision + 16));
        const Rational top = w0 * w0 * (rising_factorial(c + nuq, nu) - rising_factorial(c, nu));
        t.lower = Ball::exact(top, precision) / detail::closed_form(den.with_precision(precision));
        const Rational up = Rational(1) - rising_factorial(a, nu) * rising_factorial(c, nu) /
                                              (rising_factorial(a + nuq, nu) * rising_factorial(c + nuq, nu));
        t.upper = Ball::exact(up, precision) * fnu * fnu;
        break;
    }
    }
    t.lower_tag = "turanian_" + to_string(kind) + "_lower";
    t.upper_tag = "turanian_" + to_string(kind) + "_upper";
    return t;
}

struct RatioBounds {
    Rational lower_exact;
    Ball lower;
    Ball ratio;
    Real upper;
};

/// lower <= f(0;x) f(mu+nu;x) / (f(nu;x) f(mu;x)) <= 1 with the exact
/// Pochhammer lower bound for each kind.
inline RatioBounds ratio_two_sided(TuranKind kind, const Rational& a, const Rational& c, const Rational& mu,
                                   std::uint64_t nu, const Real& x, const CoefficientSequence& seq,
                                   mpfr_prec_t precision) {
    if (mu.is_negative()) throw DomainError("mu must be nonnegative");
    detail::require_two_sided_hypotheses(kind, a, c, seq);
    const FamilySpec spec{detail::family_of(kind), a, c, seq};
    const Rational nuq(static_cast<long>(nu));
    Rational lower;
    switch (kind) {
    case TuranKind::F:
        lower = rising_factorial(c + mu, nu) * rising_factorial(a, nu) /
                (rising_factorial(a + mu, nu) * rising_factorial(c, nu));
        break;
    case TuranKind::G:
        lower = rising_factorial(a + mu, nu) * rising_factorial(c, nu) /
                (rising_factorial(c + mu, nu) * rising_factorial(a, nu));
        break;
    case TuranKind::H:
        lower = rising_factorial(a, nu) * rising_factorial(c, nu) /
                (rising_factorial(a + mu, nu) * rising_factorial(c + mu, nu));
        break;
    }
    const Ball num = family_value(spec, Rational(0), x, precision) * family_value(spec, mu + nuq, x, precision);
    const Ball den = family_value(spec, nuq, x, precision) * family_value(spec, mu, x, precision);
    return {lower, Ball::exact(lower, precision), num / den, Real(1L, precision)};
}

} // namespace qlc

#endif // QLC_BOUNDS_HPP
