#ifndef QLC_SYMMETRIC_HPP
#define QLC_SYMMETRIC_HPP

#include <cstddef>
#include <vector>

#include "qlc/families.hpp"

namespace qlc {

/// e_k(xs); e_0 = 1.
inline Rational elementary_symmetric(std::size_t k, const std::vector<Rational>& xs) {
    if (k > xs.size()) throw IndexOutOfRange("e_" + std::to_string(k) + " of " + std::to_string(xs.size()) + " variables");
    // e[j] holds e_j of the variables seen so far.
    std::vector<Rational> e(k + 1, Rational(0));
    e[0] = Rational(1);
    for (const auto& x : xs)
        for (std::size_t j = k; j >= 1; --j) e[j] += x * e[j - 1];
    return e[k];
}

/// Numerator parameters a_1..a_{q-r} and denominator parameters b_1..b_q.
struct ParamVectors {
    std::vector<Rational> numerators;
    std::vector<Rational> denominators;

    std::size_t q() const { return denominators.size(); }
    std::size_t r() const { return denominators.size() - numerators.size(); }

    void validate() const {
        if (denominators.empty()) throw DomainError("at least one denominator parameter is required");
        if (numerators.size() > denominators.size())
            throw DomainError("more numerator than denominator parameters");
        for (const auto& v : numerators)
            if (!v.is_positive()) throw NonPositiveParameter("numerator parameter " + v.str());
        for (const auto& v : denominators)
            if (!v.is_positive()) throw NonPositiveParameter("denominator parameter " + v.str());
    }
};

/// e_q(b)/e_{q-r}(a) <= e_{q-1}(b)/e_{q-r-1}(a) <= ... <= e_r(b), each step
/// compared after cross-multiplying.
inline bool chain_condition(const ParamVectors& pv) {
    pv.validate();
    const std::size_t q = pv.q();
    const std::size_t m = pv.numerators.size();
    for (std::size_t j = 0; j < m; ++j) {
        const Rational lhs = elementary_symmetric(q - j, pv.denominators) * elementary_symmetric(m - j - 1, pv.numerators);
        const Rational rhs = elementary_symmetric(q - j - 1, pv.denominators) * elementary_symmetric(m - j, pv.numerators);
        if (lhs > rhs) return false;
    }
    return true;
}

/// Prefix sums of b bounded by those of a, both ascending and positive.
inline bool majorization_implies_chain(const std::vector<Rational>& a_sorted, const std::vector<Rational>& b_sorted) {
    if (a_sorted.size() != b_sorted.size()) throw DomainError("vectors must have equal length");
    for (const auto* v : {&a_sorted, &b_sorted}) {
        for (std::size_t i = 0; i < v->size(); ++i) {
            if (!(*v)[i].is_positive()) throw NonPositiveParameter("entry " + (*v)[i].str());
            if (i > 0 && (*v)[i] < (*v)[i - 1]) throw UnsortedInput("vectors must be ascending");
        }
    }
    Rational sa(0);
    Rational sb(0);
    for (std::size_t k = 0; k < a_sorted.size(); ++k) {
        sa += a_sorted[k];
        sb += b_sorted[k];
        if (sb > sa) return false;
    }
    return true;
}

/// f_n = prod (a_i)_n / prod (b_j)_n for n <= horizon, as explicit terms.
inline CoefficientSequence hyper_term_sequence(const ParamVectors& pv, std::size_t horizon) {
    pv.validate();
    return CoefficientSequence::explicit_terms(
        CoefficientSequence::hyper_term(pv.numerators, pv.denominators).terms(horizon));
}

} // namespace qlc

#endif // QLC_SYMMETRIC_HPP
