#ifndef QLC_VERIFIER_HPP
#define QLC_VERIFIER_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlc/evaluate.hpp"
#include "qlc/parallel.hpp"

namespace qlc {

enum class TheoremId { T1_F_CONCAVE, T2_F_CONVEX, T3_G_CONVEX, T4_G_CONCAVE, T5_H_CONCAVE, T6_Q_CONVEX, C1_CONJ, C2_CONJ };

inline std::string_view to_string(TheoremId id) {
    switch (id) {
    case TheoremId::T1_F_CONCAVE: return "T1_F_CONCAVE";
    case TheoremId::T2_F_CONVEX: return "T2_F_CONVEX";
    case TheoremId::T3_G_CONVEX: return "T3_G_CONVEX";
    case TheoremId::T4_G_CONCAVE: return "T4_G_CONCAVE";
    case TheoremId::T5_H_CONCAVE: return "T5_H_CONCAVE";
    case TheoremId::T6_Q_CONVEX: return "T6_Q_CONVEX";
    case TheoremId::C1_CONJ: return "C1_CONJ";
    case TheoremId::C2_CONJ: return "C2_CONJ";
    }
    return "?";
}

/// Accepts the full names and the short forms T1..T6, C1, C2.
inline TheoremId parse_theorem(std::string_view s) {
    static const std::pair<std::string_view, TheoremId> table[] = {
        {"T1", TheoremId::T1_F_CONCAVE}, {"T2", TheoremId::T2_F_CONVEX}, {"T3", TheoremId::T3_G_CONVEX},
        {"T4", TheoremId::T4_G_CONCAVE}, {"T5", TheoremId::T5_H_CONCAVE}, {"T6", TheoremId::T6_Q_CONVEX},
        {"C1", TheoremId::C1_CONJ},      {"C2", TheoremId::C2_CONJ},
    };
    for (const auto& [shortname, id] : table)
        if (s == shortname || s == to_string(id)) return id;
    throw ParseError("unknown theorem '" + std::string(s) + "'");
}

inline bool is_conjecture(TheoremId id) { return id == TheoremId::C1_CONJ || id == TheoremId::C2_CONJ; }

inline Family theorem_family(TheoremId id) {
    switch (id) {
    case TheoremId::T1_F_CONCAVE:
    case TheoremId::T2_F_CONVEX:
    case TheoremId::C1_CONJ: return Family::F;
    case TheoremId::T3_G_CONVEX:
    case TheoremId::T4_G_CONCAVE:
    case TheoremId::C2_CONJ: return Family::G;
    case TheoremId::T5_H_CONCAVE: return Family::H;
    case TheoremId::T6_Q_CONVEX: return Family::Q;
    }
    return Family::F;
}

/// +1 when the theorem claims nonnegative coefficients, -1 for nonpositive.
inline int expected_sign(TheoremId id) {
    switch (id) {
    case TheoremId::T2_F_CONVEX:
    case TheoremId::T3_G_CONVEX:
    case TheoremId::T6_Q_CONVEX: return -1;
    default: return 1;
    }
}

enum class Verdict { Certified, Violation, HypothesisUnmet, Indeterminate };

inline std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Certified: return "CERTIFIED";
    case Verdict::Violation: return "VIOLATION";
    case Verdict::HypothesisUnmet: return "HYPOTHESIS_UNMET";
    case Verdict::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

struct GridPoint {
    Rational mu;
    Rational nu;
};

struct PointResult {
    Rational mu;
    Rational nu;
    Verdict verdict = Verdict::Certified;
    bool exact = true;
    std::optional<std::size_t> index;   // first offending coefficient
    std::string coefficient;            // exact rational or enclosure
    std::string reason;                 // hypothesis failure
    std::vector<std::size_t> indeterminate_indices;
    std::string prefactor;              // positive factor removed before the sign test
    std::string kappa;                  // gamma ratio in the cofactor
};

struct CertificationReport {
    TheoremId theorem;
    Family family;
    Rational a;
    Rational c;
    std::string sequence;
    std::size_t order = 0;
    mpfr_prec_t precision = kDefaultIntervalPrecision;
    std::vector<PointResult> points;

    bool all_certified() const {
        return std::all_of(points.begin(), points.end(), [](const auto& p) { return p.verdict == Verdict::Certified; });
    }
    bool any(Verdict v) const {
        return std::any_of(points.begin(), points.end(), [v](const auto& p) { return p.verdict == v; });
    }
};

struct VerifyOptions {
    mpfr_prec_t precision = kDefaultIntervalPrecision;
    unsigned threads = 1;
};

namespace detail {

inline constexpr std::size_t kHypothesisHorizon = 64;

inline bool sequence_lc_pf2(const CoefficientSequence& seq) {
    const auto f = seq.terms(kHypothesisHorizon);
    return sequence_is_log_concave(f) && sequence_is_pf2(f);
}

/// Empty when the point satisfies the hypotheses, otherwise the reason.
inline std::string hypothesis_failure(TheoremId id, const FamilySpec& spec, const GridPoint& pt) {
    const Rational& a = spec.a;
    const Rational& c = spec.c;
    const Rational one(1);
    if (pt.mu.is_negative() || pt.nu.is_negative()) return "shifts must be nonnegative";
    auto discrete = [&]() -> std::string {
        if (!pt.nu.is_integer()) return "nu must be an integer";
        if (pt.mu < pt.nu - one) return "mu must be at least nu-1";
        return {};
    };
    const bool lc = sequence_lc_pf2(spec.sequence);
    switch (id) {
    case TheoremId::T1_F_CONCAVE:
        if (c < a) return "requires c >= a";
        if (!lc) return "requires a log-concave sequence without internal zeros";
        return discrete();
    case TheoremId::T2_F_CONVEX:
        if (a < c) return "requires a >= c";
        return {};
    case TheoremId::T3_G_CONVEX:
        if (c < a) return "requires c >= a";
        return {};
    case TheoremId::T4_G_CONCAVE:
        if (a < c) return "requires a >= c";
        if (a > c + one && !lc) return "a > c+1 requires a log-concave sequence without internal zeros";
        return discrete();
    case TheoremId::T5_H_CONCAVE:
        if ((a < c || a > c + one) && !lc)
            return "a outside [c, c+1] requires a log-concave sequence without internal zeros";
        return discrete();
    case TheoremId::T6_Q_CONVEX:
        return {};
    case TheoremId::C1_CONJ:
        if (c < a) return "requires c >= a";
        if (!lc) return "requires a log-concave sequence without internal zeros";
        return {};
    case TheoremId::C2_CONJ:
        if (a < c) return "requires a >= c";
        if (a > c + one && !lc) return "a > c+1 requires a log-concave sequence without internal zeros";
        return {};
    }
    return {};
}

inline bool wrong_sign(Sign s, int expected) {
    return (expected > 0 && s == Sign::Negative) || (expected < 0 && s == Sign::Positive);
}

} // namespace detail

/// Verdict for a cofactor series against the expected sign (+1 or -1).
inline PointResult certify_series(const TruncatedSeries<Rational>& s, int expected) {
    PointResult r;
    for (std::size_t m = 0; m <= s.order(); ++m) {
        if (detail::wrong_sign(sign_of(s[m]), expected)) {
            r.verdict = Verdict::Violation;
            r.index = m;
            r.coefficient = s[m].str();
            return r;
        }
    }
    return r;
}

/// Interval version: a definite wrong sign is a violation; straddles make
/// the point indeterminate and are listed.
inline PointResult certify_series(const TruncatedSeries<Interval>& s, int expected) {
    PointResult r;
    r.exact = false;
    for (std::size_t m = 0; m <= s.order(); ++m) {
        const Sign sg = s[m].sign();
        if (detail::wrong_sign(sg, expected)) {
            r.verdict = Verdict::Violation;
            r.index = m;
            r.coefficient = s[m].str(30);
            r.indeterminate_indices.clear();
            return r;
        }
        if (sg == Sign::Indeterminate) r.indeterminate_indices.push_back(m);
    }
    if (!r.indeterminate_indices.empty()) {
        r.verdict = Verdict::Indeterminate;
        r.index = r.indeterminate_indices.front();
        r.coefficient = s[r.indeterminate_indices.front()].str(30);
    }
    return r;
}

/// Sign certification of one grid point. Exact whenever the gamma ratio in
/// the cofactor pairs up, otherwise interval-guarded.
inline PointResult certify_point(TheoremId id, const FamilySpec& spec, const GridPoint& pt, std::size_t order,
                                 mpfr_prec_t precision) {
    PointResult r;
    if (const std::string why = detail::hypothesis_failure(id, spec, pt); !why.empty()) {
        r.verdict = Verdict::HypothesisUnmet;
        r.reason = why;
    } else {
        const int expected = expected_sign(id);
        try {
            const PrefactoredSeries d = product_difference(spec, pt.mu, pt.nu, order);
            r = certify_series(d.series, expected);
            r.prefactor = d.prefactor.describe();
            r.kappa = d.kappa_form.describe();
        } catch (const ExactnessUnavailable&) {
            const EnclosedDifference d = product_difference_enclosure(spec, pt.mu, pt.nu, order, precision);
            r = certify_series(d.series, expected);
            r.prefactor = d.prefactor.describe();
            r.kappa = d.kappa.str(30);
        }
    }
    r.mu = pt.mu;
    r.nu = pt.nu;
    return r;
}

namespace detail {
inline CertificationReport run_grid(TheoremId id, const FamilySpec& spec, std::vector<GridPoint> grid,
                                    std::size_t order, const VerifyOptions& opt) {
    spec.validate();
    if (spec.family != theorem_family(id))
        throw PreconditionViolation(std::string(to_string(id)) + " concerns family " +
                                    std::string(to_string(theorem_family(id))) + ", not " +
                                    std::string(to_string(spec.family)));
    if (grid.empty()) throw PreconditionViolation("empty grid");
    if (order < 1) throw PreconditionViolation("order must be at least 1");
    std::sort(grid.begin(), grid.end(), [](const GridPoint& x, const GridPoint& y) {
        return x.mu != y.mu ? x.mu < y.mu : x.nu < y.nu;
    });
    CertificationReport rep{id, spec.family, spec.a, spec.c, spec.sequence.describe(), order, opt.precision, {}};
    rep.points = parallel_map(
        grid, [&](const GridPoint& pt) { return certify_point(id, spec, pt, order, opt.precision); }, opt.threads);
    return rep;
}
} // namespace detail

/// Certifies a theorem's coefficient sign over a grid through `order`.
/// Grid points are sorted by (mu, nu) in the report.
inline CertificationReport verify_theorem(TheoremId id, const FamilySpec& spec, std::vector<GridPoint> grid,
                                          std::size_t order, const VerifyOptions& opt = {}) {
    if (is_conjecture(id)) throw PreconditionViolation("use explore_conjecture for conjectures");
    return detail::run_grid(id, spec, std::move(grid), order, opt);
}

/// Explores a conjecture over (alpha, beta) shifts at base 0; by the shift
/// reduction a nonzero base is the same question with a, c moved.
inline CertificationReport explore_conjecture(TheoremId id, const FamilySpec& spec, std::vector<GridPoint> grid,
                                              std::size_t order, mpfr_prec_t precision, unsigned threads = 1) {
    if (!is_conjecture(id)) throw PreconditionViolation("explore_conjecture takes C1 or C2");
    return detail::run_grid(id, spec, std::move(grid), order, {precision, threads});
}

// --- Identities ---------------------------------------------------------------

namespace detail {
inline TruncatedSeries<Rational> kummer_series(const Rational& alpha, const Rational& gamma_, std::size_t order) {
    if (!gamma_.is_positive() && gamma_.is_integer())
        throw PoleParameter("denominator parameter " + gamma_.str() + " is a nonpositive integer");
    return base_series(std::vector<Rational>(order + 1, Rational(1)), alpha, gamma_, order);
}
} // namespace detail

/// LHS - RHS of the Kummer product identity
///   F(a+mu;c+mu) F(a+1;c+1) - F(a+mu+1;c+mu+1) F(a;c)
///   = (c-a)x / (c(c+1)(c+mu)(c+mu+1)) [ (c+mu)(c+mu+1) F(a+1;c+2) F(a+mu+1;c+mu+1)
///                                       - c(c+1) F(a+1;c+1) F(a+mu+1;c+mu+2) ]
/// with F(p;q) = 1F1(p;q;x), expanded exactly through `order`.
inline TruncatedSeries<Rational> check_kummer_identity(const Rational& a, const Rational& c, const Rational& mu,
                                                       std::size_t order) {
    using detail::kummer_series;
    const Rational one(1);
    const Rational two(2);
    for (const Rational& g : {c, c + mu})
        if (!g.is_positive() && g.is_integer())
            throw PoleParameter("denominator parameter " + g.str() + " is a nonpositive integer");
    const Rational am = a + mu;
    const Rational cm = c + mu;
    const auto lhs = subtract(cauchy_product(kummer_series(am, cm, order), kummer_series(a + one, c + one, order)),
                              cauchy_product(kummer_series(am + one, cm + one, order), kummer_series(a, c, order)));
    const auto bracket =
        subtract(scale(cauchy_product(kummer_series(a + one, c + two, order), kummer_series(am + one, cm + one, order)),
                       cm * (cm + one)),
                 scale(cauchy_product(kummer_series(a + one, c + one, order), kummer_series(am + one, cm + two, order)),
                       c * (c + one)));
    const Rational k = (c - a) / (c * (c + one) * cm * (cm + one));
    const auto rhs = shift_up(scale(bracket, k), 1, Rational(0));
    return subtract(lhs, rhs);
}

/// sum_{k=0}^m (a)_k (a+mu)_{m-k} / ((b)_k (b+mu)_{m-k}) binom(m,k) (m-2k+mu).
inline Rational absum_value(const Rational& a, const Rational& b, const Rational& mu, std::uint64_t m) {
    if (!b.is_positive() || !(b + mu).is_positive()) throw PreconditionViolation("requires b > 0 and b + mu > 0");
    if (mu.is_negative()) throw PreconditionViolation("requires mu >= 0");
    if (m < 1) throw PreconditionViolation("requires m >= 1");
    Rational total(0);
    const Rational mq(static_cast<long>(m));
    for (std::uint64_t k = 0; k <= m; ++k) {
        const Rational u = rising_factorial(a, k) * rising_factorial(a + mu, m - k) /
                           (rising_factorial(b, k) * rising_factorial(b + mu, m - k));
        total += u * Rational(binomial(m, static_cast<std::int64_t>(k))) *
                 (mq - Rational(static_cast<long>(2 * k)) + mu);
    }
    return total;
}

/// Checks u_k (m-2k+mu) = alpha_{k+1} - alpha_k for k = 0..m, with
///   alpha_k = (b-1)(b-1+mu)(a)_k (a+mu)_{m+1-k} / ((a-b+1)(b-1)_k (b-1+mu)_{m+1-k})
/// taken in the cancelled form (b-1)/(b-1)_k = 1/(b)_{k-1}, which stays
/// finite at b = 1.
inline bool check_gosper_antidifference(const Rational& a, const Rational& b, const Rational& mu, std::uint64_t m) {
    const Rational one(1);
    if ((a - b + one).is_zero()) throw PreconditionViolation("a - b + 1 = 0 makes the antidifference undefined");
    if (!b.is_positive() || !(b + mu).is_positive()) throw PreconditionViolation("requires b > 0 and b + mu > 0");
    auto alpha = [&](std::uint64_t k) {
        const Rational left = k == 0 ? b - one : one / rising_factorial(b, k - 1);
        const Rational right = m + 1 == k ? b - one + mu : one / rising_factorial(b + mu, m - k);
        return rising_factorial(a, k) * rising_factorial(a + mu, m + 1 - k) * left * right / (a - b + one);
    };
    const Rational mq(static_cast<long>(m));
    for (std::uint64_t k = 0; k <= m; ++k) {
        const Rational u = rising_factorial(a, k) * rising_factorial(a + mu, m - k) /
                           (rising_factorial(b, k) * rising_factorial(b + mu, m - k));
        if (u * (mq - Rational(static_cast<long>(2 * k)) + mu) != alpha(k + 1) - alpha(k)) return false;
    }
    return true;
}

// --- Numeric consequences of certified signs ------------------------------------

using RealFunction = std::function<Real(const Real&)>;

inline constexpr double kPropertyTolerance = 1e-12;

/// f(x^l y^(1-l)) <= f(x)^l f(y)^(1-l) at every l in the grid, relative 1e-12.
inline bool check_multiplicative_convexity(const RealFunction& f, const Real& x, const Real& y,
                                           const std::vector<Real>& lambdas) {
    if (x.sign() <= 0 || y.sign() <= 0) throw DomainError("x and y must be positive");
    const Real fx = f(x);
    const Real fy = f(y);
    const mpfr_prec_t p = x.precision();
    const Real one(1L, p);
    const Real tol(kPropertyTolerance, p);
    for (const auto& l : lambdas) {
        if (l.sign() < 0 || l > one) throw DomainError("lambda must lie in [0, 1]");
        const Real lhs = f(pow(x, l) * pow(y, one - l));
        const Real rhs = pow(fx, l) * pow(fy, one - l);
        if (lhs > rhs + tol * abs(rhs)) return false;
    }
    return true;
}

/// Midpoint log-convexity of y -> |f(1/y)| over every pair of grid points:
/// g((y1+y2)/2)^2 <= g(y1) g(y2), relative 1e-12. An identically zero f
/// passes.
inline bool check_reciprocal_log_convexity(const RealFunction& f, const std::vector<Real>& y_grid) {
    for (const auto& y : y_grid)
        if (y.sign() <= 0) throw DomainError("y grid must be positive");
    if (y_grid.empty()) return true;
    const mpfr_prec_t p = y_grid.front().precision();
    const Real one(1L, p);
    const Real two(2L, p);
    const Real tol(kPropertyTolerance, p);
    auto g = [&](const Real& y) { return abs(f(one / y)); };
    for (std::size_t i = 0; i < y_grid.size(); ++i) {
        for (std::size_t j = i + 1; j < y_grid.size(); ++j) {
            const Real mid = g((y_grid[i] + y_grid[j]) / two);
            const Real rhs = g(y_grid[i]) * g(y_grid[j]);
            if (mid * mid > rhs + tol * rhs) return false;
        }
    }
    return true;
}

/// Numeric value of the product difference f(mu)f(nu) - f(0)f(mu+nu) at x.
inline Ball product_difference_value(const FamilySpec& spec, const Rational& mu, const Rational& nu, const Real& x,
                                     mpfr_prec_t precision) {
    return family_value(spec, mu, x, precision) * family_value(spec, nu, x, precision) -
           family_value(spec, Rational(0), x, precision) * family_value(spec, mu + nu, x, precision);
}

} // namespace qlc

#endif // QLC_VERIFIER_HPP
