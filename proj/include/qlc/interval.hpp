#ifndef QLC_INTERVAL_HPP
#define QLC_INTERVAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <string>

#include "qlc/real.hpp"
#include "qlc/sign.hpp"

namespace qlc {

/// Closed interval [lo, hi] with outward (directed) rounding on every
/// operation, so the enclosure always contains the exact result.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = kDefaultIntervalPrecision) : lo_(prec), hi_(prec) {}

    static Interval enclose(const Rational& q, mpfr_prec_t prec) {
        Interval out(prec);
        mpfr_set_q(out.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(out.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
        return out;
    }
    static Interval from_bounds(const Real& lo, const Real& hi) {
        if (hi < lo) throw DomainError("interval bounds out of order");
        Interval out(std::max(lo.precision(), hi.precision()));
        mpfr_set(out.lo_.get(), lo.get(), MPFR_RNDD);
        mpfr_set(out.hi_.get(), hi.get(), MPFR_RNDU);
        return out;
    }

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    mpfr_prec_t precision() const { return lo_.precision(); }

    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }

    Sign sign() const {
        if (lo_.sign() > 0) return Sign::Positive;
        if (hi_.sign() < 0) return Sign::Negative;
        if (lo_.is_zero() && hi_.is_zero()) return Sign::Zero;
        return Sign::Indeterminate;
    }

    Real width() const {
        Real w(precision());
        mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        return w;
    }
    Real midpoint() const {
        Real m(precision());
        mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
        mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
        return m;
    }

    std::string str(int digits = 12) const { return "[" + lo_.str(digits) + ", " + hi_.str(digits) + "]"; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(std::max(a.precision(), b.precision()));
        mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
        mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
        mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
        return r;
    }
    Interval operator-() const {
        Interval r(precision());
        mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
        mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
        return r;
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        const mpfr_prec_t prec = std::max(a.precision(), b.precision());
        std::array<Real, 4> down{Real(prec), Real(prec), Real(prec), Real(prec)};
        std::array<Real, 4> up{Real(prec), Real(prec), Real(prec), Real(prec)};
        const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> pairs{{
            {a.lo_.get(), b.lo_.get()},
            {a.lo_.get(), b.hi_.get()},
            {a.hi_.get(), b.lo_.get()},
            {a.hi_.get(), b.hi_.get()},
        }};
        for (std::size_t i = 0; i < 4; ++i) {
            mpfr_mul(down[i].get(), pairs[i].first, pairs[i].second, MPFR_RNDD);
            mpfr_mul(up[i].get(), pairs[i].first, pairs[i].second, MPFR_RNDU);
        }
        Interval r(prec);
        r.lo_ = *std::min_element(down.begin(), down.end(), [](const Real& x, const Real& y) { return x < y; });
        r.hi_ = *std::max_element(up.begin(), up.end(), [](const Real& x, const Real& y) { return x < y; });
        return r;
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw DomainError("interval division by an enclosure of zero");
        Interval inv(b.precision());
        mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
        mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
        return a * inv;
    }

private:
    Real lo_;
    Real hi_;
};

/// Enclosure of Gamma(x) for rational x > 0.
///
/// MPFR's gamma is correctly rounded in every direction; the only work here is
/// handling an argument that is itself not representable, using monotonicity
/// of Gamma on either side of its minimum near 1.4616.
inline Interval gamma_enclosure(const Rational& x, mpfr_prec_t prec) {
    if (!x.is_positive()) throw DomainError("gamma enclosure needs a positive argument");
    const Interval arg = Interval::enclose(x, prec);
    Real lo_lo(prec), lo_hi(prec), hi_lo(prec), hi_hi(prec);
    mpfr_gamma(lo_lo.get(), arg.lo().get(), MPFR_RNDD);
    mpfr_gamma(lo_hi.get(), arg.lo().get(), MPFR_RNDU);
    mpfr_gamma(hi_lo.get(), arg.hi().get(), MPFR_RNDD);
    mpfr_gamma(hi_hi.get(), arg.hi().get(), MPFR_RNDU);
    if (arg.lo() == arg.hi()) return Interval::from_bounds(lo_lo, lo_hi);

    // Gamma attains its minimum 0.88560319... at 1.46163214...
    static const Rational kLeftOfMin(14616321, 10000000);
    static const Rational kRightOfMin(14616322, 10000000);
    if (x >= kRightOfMin) return Interval::from_bounds(lo_lo, hi_hi);
    if (x <= kLeftOfMin) return Interval::from_bounds(hi_lo, lo_hi);
    return Interval::from_bounds(Real(Rational(8856, 10000), prec, MPFR_RNDD), max(lo_hi, hi_hi));
}

} // namespace qlc

#endif // QLC_INTERVAL_HPP
