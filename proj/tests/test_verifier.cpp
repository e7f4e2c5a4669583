#include <gtest/gtest.h>

#include "qlc/verifier.hpp"

using namespace qlc;

namespace {

FamilySpec spec_of(Family f, Rational a, Rational c, CoefficientSequence seq = CoefficientSequence::ones()) {
    return {f, std::move(a), std::move(c), std::move(seq)};
}

// Integer points with mu >= nu - 1.
std::vector<GridPoint> integer_grid(long mu_max, long nu_min, long nu_max) {
    std::vector<GridPoint> g;
    for (long mu = 0; mu <= mu_max; ++mu)
        for (long nu = nu_min; nu <= nu_max; ++nu)
            if (mu >= nu - 1) g.push_back({Rational(mu), Rational(nu)});
    return g;
}

Real R(long p, long q = 1) { return Real(Rational(p, q), 128); }

} // namespace

TEST(Theorem, ParsesShortAndFullNames) {
    EXPECT_EQ(parse_theorem("T3"), TheoremId::T3_G_CONVEX);
    EXPECT_EQ(parse_theorem("C2_CONJ"), TheoremId::C2_CONJ);
    EXPECT_THROW(parse_theorem("T9"), ParseError);
}

TEST(VerifyTheorem, KummerInstanceCertified) {
    const auto rep = verify_theorem(TheoremId::T1_F_CONCAVE, spec_of(Family::F, Rational(1), Rational(2)),
                                    {{Rational(1), Rational(1)}}, 40);
    ASSERT_EQ(rep.points.size(), 1u);
    EXPECT_EQ(rep.points[0].verdict, Verdict::Certified);
    EXPECT_TRUE(rep.points[0].exact);
}

TEST(VerifyTheorem, EqualParametersCertifiedWithZeroSeries) {
    const auto spec = spec_of(Family::F, Rational(3, 2), Rational(3, 2));
    const auto rep = verify_theorem(TheoremId::T1_F_CONCAVE, spec, integer_grid(3, 1, 2), 30);
    EXPECT_TRUE(rep.all_certified());
    EXPECT_TRUE(is_zero_series(product_difference(spec, Rational(2), Rational(1), 30).series));
}

TEST(VerifyTheorem, QFamilyNonpositive) {
    const auto spec = spec_of(Family::Q, Rational(5, 2), Rational(7, 3));
    const auto rep = verify_theorem(TheoremId::T6_Q_CONVEX, spec, {{Rational(1), Rational(1)}}, 40);
    EXPECT_TRUE(rep.all_certified());
    const auto d = product_difference(spec, Rational(1), Rational(1), 40);
    for (std::size_t m = 0; m <= 40; ++m) EXPECT_LE(d.series[m].sign(), 0) << m;
}

TEST(VerifyTheorem, HypothesisFailuresAreVerdicts) {
    const auto spec = spec_of(Family::F, Rational(2), Rational(1));
    const auto rep = verify_theorem(TheoremId::T1_F_CONCAVE, spec, {{Rational(1), Rational(1)}}, 10);
    EXPECT_EQ(rep.points[0].verdict, Verdict::HypothesisUnmet);
    EXPECT_EQ(rep.points[0].reason, "requires c >= a");

    const auto ok = spec_of(Family::F, Rational(1), Rational(2));
    const auto fractional = verify_theorem(TheoremId::T1_F_CONCAVE, ok, {{Rational(1), Rational(1, 2)}}, 10);
    EXPECT_EQ(fractional.points[0].verdict, Verdict::HypothesisUnmet);
    const auto too_small = verify_theorem(TheoremId::T1_F_CONCAVE, ok, {{Rational(0), Rational(3)}}, 10);
    EXPECT_EQ(too_small.points[0].reason, "mu must be at least nu-1");

    const auto convex_seq = spec_of(Family::F, Rational(1), Rational(2), CoefficientSequence::pochhammer(Rational(1)));
    const auto lc = verify_theorem(TheoremId::T1_F_CONCAVE, convex_seq, {{Rational(1), Rational(1)}}, 10);
    EXPECT_EQ(lc.points[0].verdict, Verdict::HypothesisUnmet);
}

TEST(VerifyTheorem, FamilyMismatchAndEmptyGrid) {
    const auto spec = spec_of(Family::G, Rational(1), Rational(2));
    EXPECT_THROW(verify_theorem(TheoremId::T1_F_CONCAVE, spec, {{Rational(1), Rational(1)}}, 10),
                 PreconditionViolation);
    EXPECT_THROW(verify_theorem(TheoremId::T3_G_CONVEX, spec, {}, 10), PreconditionViolation);
    EXPECT_THROW(verify_theorem(TheoremId::C1_CONJ, spec_of(Family::F, Rational(1), Rational(2)),
                                {{Rational(1), Rational(1)}}, 10),
                 PreconditionViolation);
}

TEST(VerifyTheorem, ReportSortedAndThreadIndependent) {
    const auto spec = spec_of(Family::G, Rational(1), Rational(3));
    std::vector<GridPoint> grid{{Rational(2), Rational(1)}, {Rational(0), Rational(1, 2)}, {Rational(1), Rational(3)}};
    const auto one = verify_theorem(TheoremId::T3_G_CONVEX, spec, grid, 20, {256, 1});
    const auto four = verify_theorem(TheoremId::T3_G_CONVEX, spec, grid, 20, {256, 4});
    ASSERT_EQ(one.points.size(), 3u);
    EXPECT_EQ(one.points[0].mu, Rational(0));
    EXPECT_EQ(one.points[2].mu, Rational(2));
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(one.points[i].verdict, four.points[i].verdict);
        EXPECT_EQ(one.points[i].kappa, four.points[i].kappa);
    }
    EXPECT_TRUE(one.all_certified());
}

TEST(VerifyTheorem, SmallerOrderStaysCertified) {
    const auto spec = spec_of(Family::H, Rational(3, 2), Rational(1));
    const auto grid = integer_grid(3, 1, 2);
    for (const std::size_t order : {30u, 15u, 5u, 1u})
        EXPECT_TRUE(verify_theorem(TheoremId::T5_H_CONCAVE, spec, grid, order).all_certified()) << order;
}

TEST(VerifyTheorem, UnitShiftMatchesDirectCertification) {
    const auto spec = spec_of(Family::F, Rational(2, 3), Rational(7, 4));
    const auto unit = verify_theorem(TheoremId::T1_F_CONCAVE, spec, integer_grid(4, 1, 1), 25);
    std::vector<GridPoint> direct;
    for (long nu = 1; nu <= 4; ++nu)
        for (long mu = nu - 1; mu <= 4; ++mu) direct.push_back({Rational(mu), Rational(nu)});
    const auto full = verify_theorem(TheoremId::T1_F_CONCAVE, spec, direct, 25);
    EXPECT_EQ(unit.all_certified(), full.all_certified());
    EXPECT_TRUE(full.all_certified());
}

TEST(CertifySeries, CatchesInjectedSignFlip) {
    const auto d = product_difference(spec_of(Family::F, Rational(1), Rational(2)), Rational(1), Rational(1), 20);
    EXPECT_EQ(certify_series(d.series, +1).verdict, Verdict::Certified);
    auto coeffs = d.series.coeffs();
    coeffs[7] = -coeffs[7];
    const PointResult r = certify_series(TruncatedSeries<Rational>(coeffs), +1);
    EXPECT_EQ(r.verdict, Verdict::Violation);
    EXPECT_EQ(r.index, 7u);
    EXPECT_EQ(r.coefficient, coeffs[7].str());
}

TEST(CertifySeries, IntervalStraddleIsIndeterminate) {
    std::vector<Interval> v{Interval::enclose(Rational(1), 64),
                            Interval::from_bounds(Real(-1e-30, 64), Real(1e-30, 64)),
                            Interval::enclose(Rational(2), 64)};
    const PointResult r = certify_series(TruncatedSeries<Interval>(v), +1);
    EXPECT_EQ(r.verdict, Verdict::Indeterminate);
    EXPECT_EQ(r.indeterminate_indices, std::vector<std::size_t>{1});
    EXPECT_FALSE(r.exact);
}

TEST(StrictPositivity, CoefficientsPositiveBeyondZero) {
    const auto d = product_difference(spec_of(Family::F, Rational(1, 2), Rational(5, 2),
                                              CoefficientSequence::hyper_term({}, {Rational(1)})),
                                      Rational(2), Rational(1), 30);
    for (std::size_t m = 1; m <= 30; ++m) EXPECT_GT(d.series[m].sign(), 0) << m;
}

TEST(Conjecture, HalfShiftsCertified) {
    const auto c1 = explore_conjecture(TheoremId::C1_CONJ, spec_of(Family::F, Rational(1), Rational(2)),
                                       {{Rational(1, 2), Rational(1, 2)}}, 20, 256);
    EXPECT_FALSE(c1.any(Verdict::Violation));
    EXPECT_TRUE(c1.all_certified());
    const auto c2 = explore_conjecture(TheoremId::C2_CONJ, spec_of(Family::G, Rational(3), Rational(1)),
                                       {{Rational(3, 2), Rational(3, 2)}}, 20, 256);
    EXPECT_FALSE(c2.any(Verdict::Violation));
}

TEST(Conjecture, IntegerShiftsAgreeWithTheorem) {
    const auto spec = spec_of(Family::F, Rational(1), Rational(2));
    const auto c = explore_conjecture(TheoremId::C1_CONJ, spec, {{Rational(2), Rational(1)}}, 20, 256);
    const auto t = verify_theorem(TheoremId::T1_F_CONCAVE, spec, {{Rational(2), Rational(1)}}, 20);
    EXPECT_EQ(c.points[0].verdict, t.points[0].verdict);
}

TEST(Identities, KummerResidualZero) {
    EXPECT_TRUE(is_zero_series(check_kummer_identity(Rational(1), Rational(2), Rational(1), 30)));
    EXPECT_TRUE(is_zero_series(check_kummer_identity(Rational(5, 3), Rational(2, 7), Rational(0), 20)));
    EXPECT_TRUE(is_zero_series(check_kummer_identity(Rational(3), Rational(3), Rational(5, 2), 20)));
    EXPECT_THROW(check_kummer_identity(Rational(1), Rational(-1), Rational(1), 10), PoleParameter);
}

TEST(Identities, AbsumValues) {
    // a = b: sum binom(m,k)(m-2k+mu) = mu 2^m.
    EXPECT_EQ(absum_value(Rational(3, 2), Rational(3, 2), Rational(1, 2), 5), Rational(16));
    // a = 0 keeps only k = 0: (mu)_m (m+mu) / (b+mu)_m.
    const Rational b(2), mu(3, 2);
    EXPECT_EQ(absum_value(Rational(0), b, mu, 3),
              rising_factorial(mu, 3) * (Rational(3) + mu) / rising_factorial(b + mu, 3));
    EXPECT_GT(absum_value(Rational(2), Rational(1), Rational(1, 2), 3).sign(), 0);
    EXPECT_THROW(absum_value(Rational(1), Rational(0), Rational(1), 3), PreconditionViolation);
}

TEST(Identities, GosperAntidifference) {
    EXPECT_TRUE(check_gosper_antidifference(Rational(3), Rational(2), Rational(1), 4));
    EXPECT_TRUE(check_gosper_antidifference(Rational(2), Rational(1), Rational(0), 2));
    EXPECT_TRUE(check_gosper_antidifference(Rational(7, 3), Rational(5, 4), Rational(3, 2), 9));
    EXPECT_THROW(check_gosper_antidifference(Rational(1), Rational(2), Rational(1), 3), PreconditionViolation);
}

TEST(NumericProperties, MultiplicativeConvexity) {
    const RealFunction poly = [](const Real& x) { return Real(1L, x.precision()) + x * x; };
    EXPECT_TRUE(check_multiplicative_convexity(poly, R(1), R(2), {R(1, 2)}));
    EXPECT_TRUE(check_multiplicative_convexity(poly, R(1), R(2), {R(0), R(1)}));
    const RealFunction saturating = [](const Real& x) { return x / (Real(1L, x.precision()) + x); };
    EXPECT_FALSE(check_multiplicative_convexity(saturating, R(1), R(9), {R(1, 2)}));

    const auto spec = spec_of(Family::F, Rational(1), Rational(2));
    const RealFunction phi = [&](const Real& x) {
        return product_difference_value(spec, Rational(1), Rational(1), x, 128).mid;
    };
    std::vector<Real> lambdas;
    for (long i = 0; i <= 10; ++i) lambdas.push_back(R(i, 10));
    EXPECT_TRUE(check_multiplicative_convexity(phi, R(1), R(3), lambdas));
}

TEST(NumericProperties, ReciprocalLogConvexity) {
    const std::vector<Real> ys{R(1, 2), R(1), R(2), R(4)};
    const auto f_spec = spec_of(Family::F, Rational(1), Rational(2));
    const RealFunction phi = [&](const Real& x) {
        return product_difference_value(f_spec, Rational(1), Rational(1), x, 128).mid;
    };
    EXPECT_TRUE(check_reciprocal_log_convexity(phi, ys));

    const auto flat = spec_of(Family::F, Rational(2), Rational(2));
    const RealFunction zero = [&](const Real& x) {
        return product_difference_value(flat, Rational(1), Rational(1), x, 128).mid;
    };
    EXPECT_TRUE(check_reciprocal_log_convexity(zero, ys));

    const auto q_spec = spec_of(Family::Q, Rational(3, 2), Rational(2));
    const RealFunction rho = [&](const Real& x) {
        return -product_difference_value(q_spec, Rational(1), Rational(1), x, 128).mid;
    };
    EXPECT_TRUE(check_reciprocal_log_convexity(rho, ys));
    EXPECT_THROW(check_reciprocal_log_convexity(phi, {R(-1)}), DomainError);
}
