#ifndef QLC_EVALUATE_HPP
#define QLC_EVALUATE_HPP

#include "qlc/families.hpp"
#include "qlc/hyper.hpp"

namespace qlc {

/// Value of a family member at a point, including its gamma prefactor.
///
/// ONES, POCHHAMMER and HYPER_TERM weights are summed as pFq with the shift
/// parameters appended; EXPLICIT weights give a polynomial.
inline Ball family_value(const FamilySpec& spec, const Rational& mu, const Real& x, mpfr_prec_t precision) {
    spec.validate();
    const mpfr_prec_t wp = precision + 16;
    const Real am(spec.a + mu, wp);
    const Real cm(spec.c + mu, wp);
    const auto& seq = spec.sequence;
    Ball series;
    switch (seq.kind()) {
    case CoefficientSequence::Kind::Ones:
        series = hyp1f1(am, cm, x, wp).ball();
        break;
    case CoefficientSequence::Kind::Pochhammer:
        series = hyp2f1(am, Real(seq.pochhammer_base(), wp), cm, x, wp).ball();
        break;
    case CoefficientSequence::Kind::HyperTerm: {
        HyperParams p{{am}, {cm}, x.with_precision(wp)};
        for (const auto& v : seq.numerators()) p.a.emplace_back(v, wp);
        for (const auto& v : seq.denominators()) p.b.emplace_back(v, wp);
        series = pfq(p, wp).ball();
        break;
    }
    case CoefficientSequence::Kind::Explicit: {
        const std::size_t last = seq.values().empty() ? 0 : seq.values().size() - 1;
        const auto coeffs = family_series(spec, mu, last).cofactor;
        // Horner in balls so the rounding is tracked.
        series = Ball::exact(Real(coeffs[last], wp));
        const Ball xb = Ball::exact(x.with_precision(wp));
        for (std::size_t i = last; i-- > 0;) series = series * xb + Ball::exact(coeffs[i], wp);
        break;
    }
    }
    const Real pre = detail::prefactor_at(spec, mu).evaluate(wp);
    const Ball out = Ball{pre, Ball::rounding_pad(pre) * Real(static_cast<long>(4), wp)} * series;
    return {out.mid.with_precision(precision), out.rad.with_precision(precision)};
}

} // namespace qlc

#endif // QLC_EVALUATE_HPP
