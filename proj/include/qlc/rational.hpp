#ifndef QLC_RATIONAL_HPP
#define QLC_RATIONAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlc/errors.hpp"

namespace qlc {

using Integer = mpz_class;

/// Exact rational number backed by GMP.
///
/// Always held in canonical form: lowest terms, positive denominator, zero is
/// 0/1. Every arithmetic operator returns a canonical value.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : value_(num, den) {
        if (den == 0) throw DomainError("zero denominator");
        value_.canonicalize();
    }
    Rational(const Integer& num, const Integer& den) : value_(num, den) {
        if (den == 0) throw DomainError("zero denominator");
        value_.canonicalize();
    }
    explicit Rational(const Integer& value) : value_(value) {}
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p", "p/q" or a decimal literal such as "-1.25" or "3e-2".
    /// Decimals are converted exactly (0.1 is 1/10).
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_positive() const { return sign() > 0; }
    bool is_negative() const { return sign() < 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Largest integer not exceeding the value.
    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
        return q;
    }

    double to_double() const { return value_.get_d(); }
    std::string str() const { return value_.get_str(); }
    const mpq_class& mpq() const { return value_; }
    mpq_srcptr get_mpq_t() const { return value_.get_mpq_t(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    mpq_class value_;
};

inline Rational Rational::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == ' ' || ch == '_'; }), s.end());
    if (s.empty()) throw ParseError("empty rational literal");

    auto parse_integer = [&](const std::string& digits) {
        Integer z;
        std::string body = digits;
        if (!body.empty() && body[0] == '+') body.erase(0, 1);
        if (body.empty() || body == "-" ||
            body.find_first_not_of("-0123456789") != std::string::npos ||
            body.find('-', 1) != std::string::npos) {
            throw ParseError("malformed rational literal '" + std::string(text) + "'");
        }
        z.set_str(body, 10);
        return z;
    };

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        Integer num = parse_integer(s.substr(0, slash));
        Integer den = parse_integer(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return {num, den};
    }

    // Decimal with optional exponent.
    std::string mantissa = s;
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
        mantissa = s.substr(0, e);
        const std::string exp_text = s.substr(e + 1);
        try {
            std::size_t used = 0;
            exponent = std::stol(exp_text, &used);
            if (used != exp_text.size()) throw ParseError("bad exponent");
        } catch (const std::exception&) {
            throw ParseError("malformed exponent in '" + std::string(text) + "'");
        }
    }
    long frac_digits = 0;
    if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
        frac_digits = static_cast<long>(mantissa.size() - dot - 1);
        mantissa.erase(dot, 1);
        if (mantissa.empty() || mantissa == "-" || mantissa == "+")
            throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    Integer num = parse_integer(mantissa);
    const long shift = exponent - frac_digits;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0) return Rational(Integer(num * scale));
    return {num, scale};
}

/// (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
inline Rational rising_factorial(const Rational& a, std::uint64_t n) {
    Rational result(1);
    Rational term = a;
    for (std::uint64_t i = 0; i < n; ++i) {
        result *= term;
        term += Rational(1);
    }
    return result;
}

/// Binomial coefficient; zero outside 0 <= k <= m.
inline Integer binomial(std::uint64_t m, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > m) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), m, static_cast<unsigned long>(k));
    return out;
}

/// Product of rising factorials raised to +1 or -1.
struct PochhammerRatio {
    struct Factor {
        Rational base;
        std::uint64_t length = 0;
        int exponent = 1; // +1 numerator, -1 denominator
    };

    std::vector<Factor> factors;

    PochhammerRatio& times(Rational base, std::uint64_t length) {
        if (length > 0) factors.push_back({std::move(base), length, +1});
        return *this;
    }
    PochhammerRatio& over(Rational base, std::uint64_t length) {
        if (length > 0) factors.push_back({std::move(base), length, -1});
        return *this;
    }

    bool all_bases_positive() const {
        return std::all_of(factors.begin(), factors.end(),
                           [](const Factor& f) { return f.base.is_positive(); });
    }

    Rational evaluate() const {
        Rational num(1);
        Rational den(1);
        for (const auto& f : factors) {
            (f.exponent > 0 ? num : den) *= rising_factorial(f.base, f.length);
        }
        if (den.is_zero()) throw DomainError("Pochhammer ratio has a vanishing denominator");
        return num / den;
    }

    std::string describe() const {
        if (factors.empty()) return "1";
        std::string num;
        std::string den;
        for (const auto& f : factors) {
            std::string& side = f.exponent > 0 ? num : den;
            side += "(" + f.base.str() + ")_" + std::to_string(f.length);
        }
        if (num.empty()) num = "1";
        return den.empty() ? num : num + " / " + den;
    }
};

/// One gamma factor Gamma(base + offset)^sign in a product sharing a base.
struct GammaShift {
    Rational offset;
    int sign = 1;
};

/// Rewrites prod Gamma(a + offset_i)^{sign_i} as a Pochhammer ratio.
///
/// Numerator and denominator arguments are matched inside each residue class
/// of the offsets modulo 1; Gamma(x+n)/Gamma(x) = (x)_n closes each pair.
/// Throws UnpairableArguments when some class has unequal counts.
inline PochhammerRatio pair_gamma_shifts(const Rational& a, const std::vector<GammaShift>& shifts) {
    struct Classes {
        std::vector<Rational> num;
        std::vector<Rational> den;
    };
    std::map<Rational, Classes> by_class;
    for (const auto& s : shifts) {
        if (s.sign != 1 && s.sign != -1) throw DomainError("gamma exponent must be +1 or -1");
        const Rational arg = a + s.offset;
        if (!arg.is_positive() && arg.is_integer())
            throw PoleParameter("Gamma(" + arg.str() + ") is a pole");
        const Rational frac = s.offset - Rational(s.offset.floor());
        (s.sign > 0 ? by_class[frac].num : by_class[frac].den).push_back(s.offset);
    }

    PochhammerRatio out;
    for (auto& [frac, cls] : by_class) {
        if (cls.num.size() != cls.den.size()) {
            throw UnpairableArguments("gamma arguments with fractional offset " + frac.str() +
                                      " cannot be paired by integer differences");
        }
        std::sort(cls.num.begin(), cls.num.end());
        std::sort(cls.den.begin(), cls.den.end());
        for (std::size_t i = 0; i < cls.num.size(); ++i) {
            const Rational diff = cls.num[i] - cls.den[i];
            const unsigned long len = Integer(diff.abs().numerator()).get_ui();
            if (diff.sign() >= 0) {
                out.times(a + cls.den[i], len);
            } else {
                out.over(a + cls.num[i], len);
            }
        }
    }
    return out;
}

/// Exact value of prod Gamma(a + offset_i)^{sign_i} when the arguments pair
/// up by integer differences.
inline Rational gamma_ratio_integer_shift(const Rational& a, const std::vector<GammaShift>& shifts) {
    return pair_gamma_shifts(a, shifts).evaluate();
}

} // namespace qlc

#endif // QLC_RATIONAL_HPP
