#ifndef QLC_REAL_HPP
#define QLC_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <string>
#include <utility>

#include "qlc/rational.hpp"

namespace qlc {

inline constexpr mpfr_prec_t kDefaultEvalPrecision = 128;
inline constexpr mpfr_prec_t kDefaultIntervalPrecision = 256;

/// Owning MPFR value with an explicit per-value precision.
///
/// Binary operations produce a result at the larger of the two operand
/// precisions and round to nearest. Directed rounding is done by Interval.
class Real {
public:
    explicit Real(mpfr_prec_t prec = kDefaultEvalPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(double value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, value, MPFR_RNDN);
    }
    Real(long value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    Real(int value, mpfr_prec_t prec) : Real(static_cast<long>(value), prec) {}
    Real(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), rnd);
    }
    Real(const Real& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    Real(Real&& other) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }
    Real& operator=(const Real& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real nan(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_nan(r.v_);
        return r;
    }
    static Real inf(mpfr_prec_t prec, int sign = 1) {
        Real r(prec);
        mpfr_set_inf(r.v_, sign);
        return r;
    }
    /// 2^-bits at the given precision.
    static Real epsilon(mpfr_prec_t bits, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_ui_2exp(r.v_, 1, -bits, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    Real with_precision(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }

    /// Scientific notation with the requested number of significant digits.
    std::string str(int digits = 20) const {
        if (is_nan()) return "nan";
        if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
        char* buf = nullptr;
        const std::string fmt = "%." + std::to_string(std::max(1, digits - 1)) + "Re";
        mpfr_asprintf(&buf, fmt.c_str(), v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    Real operator-() const {
        Real r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

#define QLC_REAL_BINOP(op, fn)                                              \
    friend Real operator op(const Real& a, const Real& b) {                 \
        Real r(std::max(a.precision(), b.precision()));                     \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                    \
        return r;                                                           \
    }                                                                       \
    Real& operator op##=(const Real& b) {                                   \
        if (b.precision() > precision()) mpfr_prec_round(v_, b.precision(), MPFR_RNDN); \
        fn(v_, v_, b.v_, MPFR_RNDN);                                        \
        return *this;                                                       \
    }

    QLC_REAL_BINOP(+, mpfr_add)
    QLC_REAL_BINOP(-, mpfr_sub)
    QLC_REAL_BINOP(*, mpfr_mul)
    QLC_REAL_BINOP(/, mpfr_div)
#undef QLC_REAL_BINOP

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.str(); }

private:
    mpfr_t v_;
};

namespace detail {
template <typename Fn>
Real unary(const Real& x, Fn fn) {
    Real r(x.precision());
    fn(r.get(), x.get(), MPFR_RNDN);
    return r;
}
} // namespace detail

inline Real abs(const Real& x) { return detail::unary(x, mpfr_abs); }
inline Real sqrt(const Real& x) { return detail::unary(x, mpfr_sqrt); }
inline Real exp(const Real& x) { return detail::unary(x, mpfr_exp); }
inline Real log(const Real& x) { return detail::unary(x, mpfr_log); }
inline Real gamma(const Real& x) { return detail::unary(x, mpfr_gamma); }
inline Real log1p(const Real& x) { return detail::unary(x, mpfr_log1p); }

inline Real pow(const Real& x, const Real& y) {
    Real r(std::max(x.precision(), y.precision()));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

inline Real lngamma(const Real& x) {
    Real r(x.precision());
    mpfr_lngamma(r.get(), x.get(), MPFR_RNDN);
    return r;
}

inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

/// Rising factorial in floating point.
inline Real rising_factorial(const Real& a, std::uint64_t n) {
    Real out(1L, a.precision());
    Real term = a;
    const Real one(1L, a.precision());
    for (std::uint64_t i = 0; i < n; ++i) {
        out *= term;
        term += one;
    }
    return out;
}

/// Default precision for the CLI and reports, overridable with QLC_PRECISION.
inline mpfr_prec_t default_precision_from_env(mpfr_prec_t fallback) {
    if (const char* env = std::getenv("QLC_PRECISION"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long bits = std::strtol(env, &end, 10);
        if (end != nullptr && *end == '\0' && bits >= 64) return static_cast<mpfr_prec_t>(bits);
    }
    return fallback;
}

} // namespace qlc

#endif // QLC_REAL_HPP
