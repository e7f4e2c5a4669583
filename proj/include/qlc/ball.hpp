#ifndef QLC_BALL_HPP
#define QLC_BALL_HPP

#include <algorithm>

#include "qlc/real.hpp"

namespace qlc {

/// Midpoint-radius value: the true quantity lies in [mid - rad, mid + rad].
///
/// Used to carry evaluation error bounds of hypergeometric sums through the
/// products and differences that form Turanians and ratios. Each operation
/// pads the radius by a few ulps of the midpoint for its own rounding.
struct Ball {
    Real mid;
    Real rad;

    Ball() = default;
    Ball(Real m, Real r) : mid(std::move(m)), rad(std::move(r)) {}
    static Ball exact(const Real& m) { return {m, Real(m.precision())}; }
    static Ball exact(const Rational& q, mpfr_prec_t prec) {
        Real m(q, prec);
        return {m, rounding_pad(m)};
    }

    mpfr_prec_t precision() const { return mid.precision(); }
    Real lower() const { return mid - rad; }
    Real upper() const { return mid + rad; }

    /// |x| * 2^(4 - prec): generous allowance for one rounded operation.
    static Real rounding_pad(const Real& x) {
        return abs(x) * Real::epsilon(x.precision() - 4, x.precision());
    }

    friend Ball operator+(const Ball& a, const Ball& b) {
        Real m = a.mid + b.mid;
        Real r = a.rad + b.rad + rounding_pad(m);
        return {std::move(m), std::move(r)};
    }
    friend Ball operator-(const Ball& a, const Ball& b) {
        Real m = a.mid - b.mid;
        Real r = a.rad + b.rad + rounding_pad(a.mid) + rounding_pad(b.mid);
        return {std::move(m), std::move(r)};
    }
    Ball operator-() const { return {-mid, rad}; }
    friend Ball operator*(const Ball& a, const Ball& b) {
        Real m = a.mid * b.mid;
        Real r = abs(a.mid) * b.rad + abs(b.mid) * a.rad + a.rad * b.rad + rounding_pad(m);
        return {std::move(m), std::move(r)};
    }
    friend Ball operator/(const Ball& a, const Ball& b) {
        const Real bm = abs(b.mid);
        if (bm <= b.rad) throw DomainError("ball division by an enclosure of zero");
        Real m = a.mid / b.mid;
        Real r = (abs(a.mid) * b.rad + bm * a.rad) / (bm * (bm - b.rad)) + rounding_pad(m);
        return {std::move(m), std::move(r)};
    }
};

} // namespace qlc

#endif // QLC_BALL_HPP
