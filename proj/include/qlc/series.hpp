#ifndef QLC_SERIES_HPP
#define QLC_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "qlc/errors.hpp"
#include "qlc/sign.hpp"

namespace qlc {

/// Formal power series c_0 + c_1 x + ... + c_M x^M taken modulo x^(M+1).
///
/// Coefficients are stored densely. Arithmetic between series of different
/// orders truncates to the smaller order.
template <typename T>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw DomainError("a truncated series needs at least one coefficient");
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const T& operator[](std::size_t i) const { return coeffs_.at(i); }
    T& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    /// Keep only c_0..c_order.
    TruncatedSeries truncated(std::size_t order) const {
        if (order > this->order()) throw DomainError("cannot extend a truncated series");
        return TruncatedSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

private:
    std::vector<T> coeffs_;
};

/// Coefficient m of the result is sum_{k<=m} A_k B_{m-k}.
template <typename T>
TruncatedSeries<T> cauchy_product(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<T> out;
    out.reserve(order + 1);
    for (std::size_t m = 0; m <= order; ++m) {
        T acc = a[0] * b[m];
        for (std::size_t k = 1; k <= m; ++k) acc = acc + a[k] * b[m - k];
        out.push_back(std::move(acc));
    }
    return TruncatedSeries<T>(std::move(out));
}

template <typename T>
TruncatedSeries<T> subtract(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<T> out;
    out.reserve(order + 1);
    for (std::size_t m = 0; m <= order; ++m) out.push_back(a[m] - b[m]);
    return TruncatedSeries<T>(std::move(out));
}

template <typename T>
TruncatedSeries<T> add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<T> out;
    out.reserve(order + 1);
    for (std::size_t m = 0; m <= order; ++m) out.push_back(a[m] + b[m]);
    return TruncatedSeries<T>(std::move(out));
}

template <typename T, typename S>
TruncatedSeries<T> scale(const TruncatedSeries<T>& a, const S& factor) {
    std::vector<T> out;
    out.reserve(a.order() + 1);
    for (const auto& c : a.coeffs()) out.push_back(c * factor);
    return TruncatedSeries<T>(std::move(out));
}

/// Multiplication by x^k, keeping the order.
template <typename T>
TruncatedSeries<T> shift_up(const TruncatedSeries<T>& a, std::size_t k, const T& zero) {
    std::vector<T> out(a.order() + 1, zero);
    for (std::size_t m = k; m <= a.order(); ++m) out[m] = a[m - k];
    return TruncatedSeries<T>(std::move(out));
}

inline TruncatedSeries<Rational> zero_series(std::size_t order) {
    return TruncatedSeries<Rational>(std::vector<Rational>(order + 1, Rational(0)));
}

inline TruncatedSeries<Rational> unit_series(std::size_t order) {
    auto s = zero_series(order);
    s[0] = Rational(1);
    return s;
}

inline bool is_zero_series(const TruncatedSeries<Rational>& s) {
    for (const auto& c : s.coeffs())
        if (!c.is_zero()) return false;
    return true;
}

struct SignPattern {
    std::vector<Sign> signs;
    std::optional<std::size_t> first_negative_index;
    std::optional<std::size_t> first_positive_index;
    std::optional<std::size_t> first_indeterminate_index;
};

/// Sign of every coefficient; the element type needs a sign_of overload or a
/// sign() member returning Sign.
template <typename T>
SignPattern sign_pattern(const TruncatedSeries<T>& s) {
    SignPattern out;
    out.signs.reserve(s.order() + 1);
    for (std::size_t i = 0; i <= s.order(); ++i) {
        Sign sg;
        if constexpr (std::is_same_v<T, Rational>) {
            sg = sign_of(s[i]);
        } else {
            sg = s[i].sign();
        }
        out.signs.push_back(sg);
        if (sg == Sign::Negative && !out.first_negative_index) out.first_negative_index = i;
        if (sg == Sign::Positive && !out.first_positive_index) out.first_positive_index = i;
        if (sg == Sign::Indeterminate && !out.first_indeterminate_index) out.first_indeterminate_index = i;
    }
    return out;
}

} // namespace qlc

#endif // QLC_SERIES_HPP
