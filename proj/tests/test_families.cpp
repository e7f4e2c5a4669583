#include <gtest/gtest.h>

#include <random>

#include "qlc/families.hpp"

using namespace qlc;

namespace {

FamilySpec spec_of(Family f, Rational a, Rational c, CoefficientSequence seq = CoefficientSequence::ones()) {
    return {f, std::move(a), std::move(c), std::move(seq)};
}

// Relative agreement of an exact value times a float prefactor with a float
// value; exact zeros are compared on the scale of the subtracted products.
bool agrees(const Real& approx, const Real& exact, const Real& scale, double tol) {
    const Real err = abs(approx - exact);
    const Real ref = max(abs(exact), scale);
    if (ref.is_zero()) return err.is_zero();
    return (err / ref).to_double() <= tol;
}

} // namespace

TEST(CoefficientSequence, TermsOfEachKind) {
    EXPECT_EQ(CoefficientSequence::ones().terms(2), (std::vector<Rational>{1, 1, 1}));
    EXPECT_EQ(CoefficientSequence::pochhammer(Rational(2)).terms(3), (std::vector<Rational>{1, 2, 6, 24}));
    EXPECT_EQ(CoefficientSequence::hyper_term({Rational(1)}, {Rational(2)}).terms(3),
              (std::vector<Rational>{1, Rational(1, 2), Rational(1, 3), Rational(1, 4)}));
    EXPECT_EQ(CoefficientSequence::explicit_terms({1, 2}).terms(3), (std::vector<Rational>{1, 2, 0, 0}));
    EXPECT_THROW(CoefficientSequence::hyper_term({}, {Rational(-1)}), PoleParameter);
}

TEST(CoefficientSequence, ParsesAndDescribes) {
    for (const std::string s : {"ones", "poch:3/2", "hyper:1,2/3", "explicit:1,1/2,1/6"})
        EXPECT_EQ(CoefficientSequence::parse(s).describe(), s);
    EXPECT_THROW(CoefficientSequence::parse("bogus"), ParseError);
}

TEST(SequencePredicates, LogConcavity) {
    EXPECT_TRUE(sequence_is_log_concave(CoefficientSequence::hyper_term({}, {Rational(1)}), 30));
    EXPECT_FALSE(sequence_is_log_concave(CoefficientSequence::explicit_terms({1, 1, 3}), 2));
    std::vector<Rational> geometric;
    for (long k = 0, p = 1; k < 12; ++k, p *= 2) geometric.emplace_back(p);
    EXPECT_TRUE(sequence_is_log_concave(geometric));
    EXPECT_FALSE(sequence_is_log_concave(CoefficientSequence::pochhammer(Rational(1)), 10));
}

TEST(SequencePredicates, Pf2) {
    EXPECT_TRUE(sequence_is_pf2(std::vector<Rational>{0, 0, 1, 2, 1}));
    EXPECT_FALSE(sequence_is_pf2(std::vector<Rational>{1, 0, 1}));
    EXPECT_FALSE(sequence_is_pf2(std::vector<Rational>{0, 0, 0}));
    EXPECT_FALSE(sequence_is_pf2(std::vector<Rational>{1, -1}));
}

TEST(SequencePredicates, SignChanges) {
    EXPECT_EQ(sign_change_count({-1, -1, 0, 2}), 1u);
    EXPECT_EQ(sign_change_count({1, -1, 1}), 2u);
    EXPECT_EQ(sign_change_count({0, 0}), 0u);
}

TEST(FamilySpec, Validation) {
    EXPECT_THROW(spec_of(Family::F, Rational(0), Rational(1)).validate(), NonPositiveParameter);
    EXPECT_THROW(spec_of(Family::F, Rational(1), Rational(-1)).validate(), NonPositiveParameter);
    EXPECT_THROW(spec_of(Family::F, Rational(1), Rational(1), CoefficientSequence::explicit_terms({0, 0})).validate(),
                 DomainError);
    EXPECT_THROW(spec_of(Family::F, Rational(1), Rational(1), CoefficientSequence::explicit_terms({1, -1})).validate(),
                 DomainError);
}

TEST(FamilySeries, Examples) {
    const auto e = family_series(spec_of(Family::F, Rational(3), Rational(3)), Rational(0), 5).cofactor;
    EXPECT_EQ(e[5], Rational(1, 120));
    const auto f = family_series(spec_of(Family::F, Rational(1), Rational(2)), Rational(0), 3).cofactor;
    EXPECT_EQ(f[1], Rational(1, 2));
    EXPECT_THROW(family_series(spec_of(Family::F, Rational(0), Rational(2)), Rational(0), 3), NonPositiveParameter);
}

TEST(FamilySeries, GaussCaseMatchesRawGammaCoefficients) {
    // G with g_n = (b)_n: Gamma(a+mu)/Gamma(c+mu) 2F1(a+mu, b; c+mu; x).
    const auto spec = spec_of(Family::G, Rational(3, 2), Rational(5, 2), CoefficientSequence::pochhammer(Rational(2)));
    const mpfr_prec_t prec = 256;
    const auto fs = family_series(spec, Rational(1), 20);
    const auto raw = family_series_float(spec, Rational(1), 20, prec);
    const Real pre = fs.prefactor.evaluate(prec);
    EXPECT_EQ(fs.prefactor.describe(), "Gamma(5/2) / Gamma(7/2)");
    for (std::size_t n = 0; n <= 20; ++n) {
        const Real exact = pre * Real(fs.cofactor[n], prec);
        EXPECT_TRUE(agrees(raw[n], exact, Real(prec), 1e-60)) << n;
    }
}

TEST(ProductDifference, FirstCoefficientClosedForm) {
    const auto d = product_difference(spec_of(Family::F, Rational(1), Rational(2)), Rational(1), Rational(1), 6);
    EXPECT_EQ(d.series[0], Rational(0));
    EXPECT_EQ(d.series[1], Rational(1, 12));
    EXPECT_EQ(d.kappa, Rational(1));
}

TEST(ProductDifference, TrivialCases) {
    for (const Family fam : {Family::F, Family::G, Family::H, Family::Q}) {
        const auto spec = spec_of(fam, Rational(3, 2), Rational(2));
        EXPECT_TRUE(is_zero_series(product_difference(spec, Rational(0), Rational(3), 20).series));
    }
    EXPECT_TRUE(is_zero_series(
        product_difference(spec_of(Family::F, Rational(5, 3), Rational(5, 3)), Rational(2), Rational(1, 2), 25).series));
}

TEST(ProductDifference, PairsAcrossGroupsWhenAMinusCIsInteger) {
    const auto same = product_difference(spec_of(Family::G, Rational(2), Rational(2)), Rational(1, 2), Rational(1, 4), 15);
    EXPECT_EQ(same.kappa, Rational(1));
    EXPECT_TRUE(is_zero_series(same.series));

    const auto spec = spec_of(Family::G, Rational(3), Rational(2));
    const auto d = product_difference(spec, Rational(1, 2), Rational(1, 3), 10);
    const auto parts = product_parts(spec, Rational(1, 2), Rational(1, 3), 10);
    EXPECT_TRUE(kappa_enclosure(spec, parts, 256).contains(Real(d.kappa, 256)));
    EXPECT_THROW(product_difference(spec_of(Family::G, Rational(5, 2), Rational(2)), Rational(1, 2), Rational(1, 3), 5),
                 ExactnessUnavailable);
}

TEST(ProductDifference, Symmetric) {
    for (const Family fam : {Family::F, Family::G, Family::H, Family::Q}) {
        const auto spec = spec_of(fam, Rational(7, 3), Rational(4, 5), CoefficientSequence::hyper_term({Rational(1)}, {Rational(3)}));
        const auto x = product_difference(spec, Rational(3), Rational(2), 20);
        const auto y = product_difference(spec, Rational(2), Rational(3), 20);
        EXPECT_EQ(x.series.coeffs(), y.series.coeffs());
    }
}

TEST(ProductDifference, ConstantTermOnlyVanishesWhenKappaIsOne) {
    const auto d = product_difference(spec_of(Family::H, Rational(1), Rational(2)), Rational(1), Rational(1), 4);
    // kappa = Gamma(3)^2 / (Gamma(2) Gamma(4)) = 2/3.
    EXPECT_EQ(d.kappa, Rational(2, 3));
    EXPECT_EQ(d.series[0], Rational(1, 3));
}

TEST(ProductDifference, ExactWhenOneShiftIsInteger) {
    const auto spec = spec_of(Family::G, Rational(3), Rational(1));
    EXPECT_NO_THROW(product_difference(spec, Rational(1, 2), Rational(2), 10));
    EXPECT_THROW(product_difference(spec_of(Family::G, Rational(5, 2), Rational(1)), Rational(1, 2), Rational(1, 3), 10),
                 ExactnessUnavailable);
}

TEST(ProductDifference, EnclosureContainsExactCofactor) {
    const auto spec = spec_of(Family::Q, Rational(3, 2), Rational(1));
    const auto exact = product_difference(spec, Rational(1, 2), Rational(1), 15);
    const auto enc = product_difference_enclosure(spec, Rational(1, 2), Rational(1), 15, 256);
    for (std::size_t m = 0; m <= 15; ++m) EXPECT_TRUE(enc.series[m].contains(Real(exact.series[m], 300))) << m;
}

TEST(ProductDifference, ShiftIdentity) {
    // f over (a, c) at base mu0 equals f over (a+mu0, c+mu0) at base 0.
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(1, 30), den(1, 6), sh(0, 4);
    for (int trial = 0; trial < 12; ++trial) {
        const Rational a(num(rng), den(rng)), c(num(rng), den(rng));
        const Rational alpha(sh(rng)), beta(sh(rng), 2);
        const Rational mu0(trial % 6);
        const std::size_t order = 30;
        const auto seq = CoefficientSequence::hyper_term({Rational(1, 2)}, {Rational(2)});
        const auto f = seq.terms(order);
        auto base = [&](const Rational& s) {
            return family_series(spec_of(Family::F, a, c, seq), s, order).cofactor;
        };
        const auto lhs = subtract(cauchy_product(base(mu0 + alpha), base(mu0 + beta)),
                                  cauchy_product(base(mu0), base(mu0 + alpha + beta)));
        const auto rhs = product_difference(spec_of(Family::F, a + mu0, c + mu0, seq), alpha, beta, order).series;
        EXPECT_EQ(lhs.coeffs(), rhs.coeffs());
    }
}

TEST(ProductDifference, FloatPathAgreesWithExactPath) {
    const mpfr_prec_t prec = 256;
    std::size_t compared = 0;
    for (const Family fam : {Family::F, Family::G, Family::H, Family::Q}) {
        const auto spec = spec_of(fam, Rational(5, 2), Rational(4, 3), CoefficientSequence::hyper_term({Rational(1)}, {Rational(2)}));
        const auto d = product_difference(spec, Rational(2), Rational(1), 40);
        const auto raw = product_difference_float(spec, Rational(2), Rational(1), 40, prec);
        const Real pre = d.prefactor.evaluate(prec);
        // Scale of the subtracted terms, for coefficients that vanish exactly.
        const auto parts = product_parts(spec, Rational(2), Rational(1), 40);
        for (std::size_t m = 0; m <= 40; ++m) {
            const Real exact = pre * Real(d.series[m], prec);
            const Real scale = pre * Real(parts.first[m], prec);
            EXPECT_TRUE(agrees(raw[m], exact, scale, 1e-20)) << to_string(fam) << " m=" << m;
            ++compared;
        }
    }
    EXPECT_GE(compared, 100u);
}
