#include <gtest/gtest.h>

#include <random>

#include "qlc/series.hpp"

using namespace qlc;

namespace {

TruncatedSeries<Rational> series_of(std::initializer_list<Rational> xs) {
    return TruncatedSeries<Rational>(std::vector<Rational>(xs));
}

TruncatedSeries<Rational> random_series(std::mt19937& rng, std::size_t order) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= order; ++i) c.emplace_back(num(rng), den(rng));
    return TruncatedSeries<Rational>(std::move(c));
}

TruncatedSeries<Rational> exp_series(std::size_t order) {
    std::vector<Rational> c;
    Rational f(1);
    for (std::size_t n = 0; n <= order; ++n) {
        c.push_back(f);
        f /= Rational(static_cast<long>(n + 1));
    }
    return TruncatedSeries<Rational>(std::move(c));
}

} // namespace

TEST(CauchyProduct, Examples) {
    const auto sq = cauchy_product(series_of({1, 1, 0}), series_of({1, 1, 0}));
    EXPECT_EQ(sq.coeffs(), (std::vector<Rational>{1, 2, 1}));
    EXPECT_TRUE(is_zero_series(cauchy_product(series_of({3, 4, 5}), zero_series(2))));
    EXPECT_EQ(cauchy_product(exp_series(4), exp_series(4))[4], Rational(2, 3));
}

TEST(CauchyProduct, TruncatesToSmallerOrder) {
    const auto p = cauchy_product(series_of({1, 2, 3, 4}), series_of({1, 1}));
    EXPECT_EQ(p.order(), 1u);
    EXPECT_EQ(p[1], Rational(3));
}

TEST(CauchyProduct, CommutativeAssociativeWithUnit) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t order = 1 + trial % 30;
        const auto a = random_series(rng, order);
        const auto b = random_series(rng, order);
        const auto c = random_series(rng, order);
        EXPECT_EQ(cauchy_product(a, b).coeffs(), cauchy_product(b, a).coeffs());
        EXPECT_EQ(cauchy_product(cauchy_product(a, b), c).coeffs(), cauchy_product(a, cauchy_product(b, c)).coeffs());
        EXPECT_EQ(cauchy_product(a, unit_series(order)).coeffs(), a.coeffs());
    }
}

TEST(Subtract, Examples) {
    const auto a = series_of({1, 2, 3});
    EXPECT_TRUE(is_zero_series(subtract(a, a)));
    EXPECT_EQ(subtract(series_of({1, 2}), series_of({0, 1})).coeffs(), (std::vector<Rational>{1, 1}));
}

TEST(SignPattern, Examples) {
    const auto p = sign_pattern(series_of({0, Rational(1, 12), Rational(3, 80)}));
    EXPECT_EQ(p.signs, (std::vector<Sign>{Sign::Zero, Sign::Positive, Sign::Positive}));
    EXPECT_FALSE(p.first_negative_index.has_value());
    EXPECT_EQ(p.first_positive_index, 1u);

    const auto z = sign_pattern(zero_series(4));
    for (const auto s : z.signs) EXPECT_EQ(s, Sign::Zero);

    EXPECT_EQ(sign_pattern(series_of({1, -1})).first_negative_index, 1u);
}

TEST(SignPattern, PositiveSeriesHasNoOtherSigns) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(1, 50), den(1, 9);
    std::vector<Rational> c;
    for (int i = 0; i < 25; ++i) c.emplace_back(num(rng), den(rng));
    const auto p = sign_pattern(TruncatedSeries<Rational>(c));
    for (const auto s : p.signs) EXPECT_EQ(s, Sign::Positive);
}

TEST(TruncatedSeries, RejectsEmptyAndShifts) {
    EXPECT_THROW(TruncatedSeries<Rational>(std::vector<Rational>{}), DomainError);
    const auto s = shift_up(series_of({1, 2, 3}), 1, Rational(0));
    EXPECT_EQ(s.coeffs(), (std::vector<Rational>{0, 1, 2}));
    EXPECT_EQ(series_of({1, 2, 3}).truncated(1).coeffs(), (std::vector<Rational>{1, 2}));
}
