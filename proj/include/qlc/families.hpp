#ifndef QLC_FAMILIES_HPP
#define QLC_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlc/errors.hpp"
#include "qlc/interval.hpp"
#include "qlc/rational.hpp"
#include "qlc/real.hpp"
#include "qlc/series.hpp"

namespace qlc {

enum class Family { F, G, H, Q };

inline std::string_view to_string(Family f) {
    switch (f) {
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::Q: return "Q";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    if (s == "F" || s == "f") return Family::F;
    if (s == "G" || s == "g") return Family::G;
    if (s == "H" || s == "h") return Family::H;
    if (s == "Q" || s == "q") return Family::Q;
    throw ParseError("unknown family '" + std::string(s) + "'");
}

/// The weight sequence {f_n} multiplying the series terms.
///
/// Terms of hypergeometric sequences are produced by running ratios, so the
/// size of term n grows linearly in n.
class CoefficientSequence {
public:
    enum class Kind { Ones, Pochhammer, HyperTerm, Explicit };

    static CoefficientSequence ones() { return CoefficientSequence(Kind::Ones); }

    /// f_n = (b)_n.
    static CoefficientSequence pochhammer(Rational b) {
        CoefficientSequence s(Kind::Pochhammer);
        s.nums_ = {std::move(b)};
        return s;
    }

    /// f_n = prod (a_i)_n / prod (b_j)_n, with no implicit n!.
    static CoefficientSequence hyper_term(std::vector<Rational> nums, std::vector<Rational> dens) {
        for (const auto& b : dens)
            if (!b.is_positive() && b.is_integer())
                throw PoleParameter("denominator parameter " + b.str() + " is a nonpositive integer");
        CoefficientSequence s(Kind::HyperTerm);
        s.nums_ = std::move(nums);
        s.dens_ = std::move(dens);
        return s;
    }

    /// Listed terms; every term past the list is zero.
    static CoefficientSequence explicit_terms(std::vector<Rational> values) {
        CoefficientSequence s(Kind::Explicit);
        s.values_ = std::move(values);
        return s;
    }

    /// "ones", "poch:B", "hyper:A1,A2/B1,B2" or "explicit:V0,V1,...".
    static CoefficientSequence parse(std::string_view text);

    Kind kind() const { return kind_; }
    const std::vector<Rational>& numerators() const { return nums_; }
    const std::vector<Rational>& denominators() const { return dens_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& pochhammer_base() const { return nums_.at(0); }

    /// f_0 .. f_last.
    std::vector<Rational> terms(std::size_t last) const {
        std::vector<Rational> out;
        out.reserve(last + 1);
        switch (kind_) {
        case Kind::Ones:
            out.assign(last + 1, Rational(1));
            break;
        case Kind::Explicit:
            for (std::size_t n = 0; n <= last; ++n)
                out.push_back(n < values_.size() ? values_[n] : Rational(0));
            break;
        case Kind::Pochhammer:
        case Kind::HyperTerm: {
            Rational t(1);
            for (std::size_t n = 0; n <= last; ++n) {
                out.push_back(t);
                const Rational shift(static_cast<long>(n));
                for (const auto& a : nums_) t *= a + shift;
                for (const auto& b : dens_) t /= b + shift;
            }
            break;
        }
        }
        return out;
    }

    Rational term(std::size_t n) const { return terms(n).back(); }

    std::string describe() const {
        auto join = [](const std::vector<Rational>& v) {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
            return out;
        };
        switch (kind_) {
        case Kind::Ones: return "ones";
        case Kind::Pochhammer: return "poch:" + nums_.at(0).str();
        case Kind::HyperTerm: return "hyper:" + join(nums_) + "/" + join(dens_);
        case Kind::Explicit: return "explicit:" + join(values_);
        }
        return "?";
    }

private:
    explicit CoefficientSequence(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<Rational> nums_;
    std::vector<Rational> dens_;
    std::vector<Rational> values_;
};

namespace detail {
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(Rational::parse(item));
    return out;
}
} // namespace detail

inline CoefficientSequence CoefficientSequence::parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (head == "ones") return ones();
    if (head == "poch") return pochhammer(Rational::parse(body));
    if (head == "explicit") return explicit_terms(detail::parse_rational_list(body));
    if (head == "hyper") {
        const auto slash = body.find('/');
        if (slash == std::string_view::npos) throw ParseError("hyper sequence needs 'nums/dens'");
        return hyper_term(detail::parse_rational_list(body.substr(0, slash)),
                          detail::parse_rational_list(body.substr(slash + 1)));
    }
    throw ParseError("unknown sequence '" + std::string(text) + "'");
}

/// True iff f_k^2 >= f_{k-1} f_{k+1} for 1 <= k <= N-1, over f_0..f_N.
inline bool sequence_is_log_concave(const std::vector<Rational>& f) {
    for (std::size_t k = 1; k + 1 < f.size(); ++k)
        if (f[k] * f[k] < f[k - 1] * f[k + 1]) return false;
    return true;
}

inline bool sequence_is_log_concave(const CoefficientSequence& seq, std::size_t horizon) {
    return sequence_is_log_concave(seq.terms(horizon));
}

/// Nonnegative, not identically zero, zeros only as a prefix and/or suffix.
inline bool sequence_is_pf2(const std::vector<Rational>& f) {
    std::optional<std::size_t> first;
    std::optional<std::size_t> last;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_negative()) return false;
        if (f[i].is_positive()) {
            if (!first) first = i;
            last = i;
        }
    }
    if (!first) return false;
    for (std::size_t i = *first; i <= *last; ++i)
        if (f[i].is_zero()) return false;
    return true;
}

inline bool sequence_is_pf2(const CoefficientSequence& seq, std::size_t horizon) {
    return sequence_is_pf2(seq.terms(horizon));
}

/// Number of strict sign alternations, zeros skipped.
inline std::size_t sign_change_count(const std::vector<Rational>& values) {
    std::size_t changes = 0;
    int previous = 0;
    for (const auto& v : values) {
        const int s = v.sign();
        if (s == 0) continue;
        if (previous != 0 && s != previous) ++changes;
        previous = s;
    }
    return changes;
}

struct FamilySpec {
    Family family = Family::F;
    Rational a{1};
    Rational c{1};
    CoefficientSequence sequence = CoefficientSequence::ones();

    /// Horizon used to reject sequences that vanish identically.
    static constexpr std::size_t kTrivialityHorizon = 64;

    void validate() const {
        if (!a.is_positive()) throw NonPositiveParameter("a = " + a.str() + " must be positive");
        if (!c.is_positive()) throw NonPositiveParameter("c = " + c.str() + " must be positive");
        const auto f = sequence.terms(kTrivialityHorizon);
        bool any = false;
        for (const auto& t : f) {
            if (t.is_negative()) throw DomainError("sequence term " + t.str() + " is negative");
            any = any || t.is_positive();
        }
        if (!any) throw DomainError("the coefficient sequence vanishes identically");
    }
};

/// Product of Gamma(arg)^exponent factors, exponent +1 or -1.
struct GammaProduct {
    struct Factor {
        Rational arg;
        int exponent = 1;
    };
    std::vector<Factor> factors;

    GammaProduct& times(Rational arg) { factors.push_back({std::move(arg), 1}); return *this; }
    GammaProduct& over(Rational arg) { factors.push_back({std::move(arg), -1}); return *this; }

    Real evaluate(mpfr_prec_t prec) const {
        Real out(1L, prec);
        for (const auto& f : factors) {
            const Real g = gamma(Real(f.arg, prec));
            out = f.exponent > 0 ? out * g : out / g;
        }
        return out;
    }

    Interval enclose(mpfr_prec_t prec) const {
        Interval out = Interval::enclose(Rational(1), prec);
        for (const auto& f : factors) {
            const Interval g = gamma_enclosure(f.arg, prec);
            out = f.exponent > 0 ? out * g : out / g;
        }
        return out;
    }

    std::string describe() const {
        if (factors.empty()) return "1";
        std::string num;
        std::string den;
        for (const auto& f : factors) (f.exponent > 0 ? num : den) += "Gamma(" + f.arg.str() + ")";
        if (num.empty()) num = "1";
        return den.empty() ? num : num + " / " + den;
    }
};

/// Family member at shift mu, as prefactor * cofactor series.
struct FamilySeries {
    TruncatedSeries<Rational> cofactor;
    GammaProduct prefactor;
};

namespace detail {

/// Coefficients f_n (a)_n / ((c)_n n!) for n <= order.
inline TruncatedSeries<Rational> base_series(const std::vector<Rational>& f, const Rational& a, const Rational& c,
                                             std::size_t order) {
    std::vector<Rational> out;
    out.reserve(order + 1);
    Rational ratio(1);
    for (std::size_t n = 0; n <= order; ++n) {
        out.push_back(f[n] * ratio);
        const Rational shift(static_cast<long>(n));
        const Rational den = (c + shift) * Rational(static_cast<long>(n + 1));
        if (den.is_zero()) throw PoleParameter("c + n vanishes at n = " + std::to_string(n));
        ratio = ratio * (a + shift) / den;
    }
    return TruncatedSeries<Rational>(std::move(out));
}

inline GammaProduct prefactor_at(const FamilySpec& spec, const Rational& mu) {
    GammaProduct p;
    switch (spec.family) {
    case Family::F: break;
    case Family::G: p.times(spec.a + mu).over(spec.c + mu); break;
    case Family::H: p.over(spec.c + mu); break;
    case Family::Q: p.times(spec.a + mu); break;
    }
    return p;
}

inline void require_nonnegative_shift(const Rational& s, const char* name) {
    if (s.is_negative()) throw DomainError(std::string(name) + " = " + s.str() + " must be nonnegative");
}

} // namespace detail

/// Family member at shift mu: the gamma prefactor and the rational cofactor
/// sum f_n (a+mu)_n / ((c+mu)_n n!) x^n.
inline FamilySeries family_series(const FamilySpec& spec, const Rational& mu, std::size_t order) {
    spec.validate();
    detail::require_nonnegative_shift(mu, "mu");
    return {detail::base_series(spec.sequence.terms(order), spec.a + mu, spec.c + mu, order),
            detail::prefactor_at(spec, mu)};
}

/// Raw family coefficients in floating point, built from gamma values of each
/// term rather than from Pochhammer recurrences.
inline TruncatedSeries<Real> family_series_float(const FamilySpec& spec, const Rational& mu, std::size_t order,
                                                 mpfr_prec_t prec) {
    spec.validate();
    detail::require_nonnegative_shift(mu, "mu");
    const auto f = spec.sequence.terms(order);
    const Real am(spec.a + mu, prec);
    const Real cm(spec.c + mu, prec);
    const Real gam_a = gamma(am);
    const Real gam_c = gamma(cm);
    std::vector<Real> out;
    out.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        const Real nn(static_cast<long>(n), prec);
        const Real num = gamma(am + nn);
        const Real den = gamma(cm + nn) * gamma(nn + Real(1L, prec));
        Real term = Real(f[n], prec) * num / den;
        switch (spec.family) {
        case Family::F: term = term * gam_c / gam_a; break;
        case Family::G: break;
        case Family::H: term = term / gam_a; break;
        case Family::Q: term = term * gam_c; break;
        }
        out.push_back(std::move(term));
    }
    return TruncatedSeries<Real>(std::move(out));
}

/// D = P * [f(mu) f(nu) - kappa f(0) f(mu+nu)] with f the cofactor series.
///
/// `first` holds f(mu) f(nu) and `second` holds f(0) f(mu+nu); both exact.
/// kappa is a gamma ratio split into a-shifted and c-shifted groups.
struct ProductParts {
    TruncatedSeries<Rational> first;
    TruncatedSeries<Rational> second;
    GammaProduct prefactor;
    std::vector<GammaShift> kappa_a;
    std::vector<GammaShift> kappa_c;
};

inline ProductParts product_parts(const FamilySpec& spec, const Rational& mu, const Rational& nu, std::size_t order) {
    spec.validate();
    detail::require_nonnegative_shift(mu, "mu");
    detail::require_nonnegative_shift(nu, "nu");
    const auto f = spec.sequence.terms(order);
    const Rational& a = spec.a;
    const Rational& c = spec.c;
    auto at = [&](const Rational& s) { return detail::base_series(f, a + s, c + s, order); };

    ProductParts parts{cauchy_product(at(mu), at(nu)), cauchy_product(at(Rational(0)), at(mu + nu)), {}, {}, {}};
    const std::vector<GammaShift> a_group{{Rational(0), 1}, {mu + nu, 1}, {mu, -1}, {nu, -1}};
    const std::vector<GammaShift> c_group{{mu, 1}, {nu, 1}, {Rational(0), -1}, {mu + nu, -1}};
    switch (spec.family) {
    case Family::F: break;
    case Family::G:
        parts.kappa_a = a_group;
        parts.kappa_c = c_group;
        parts.prefactor.times(a + mu).times(a + nu).over(c + mu).over(c + nu);
        break;
    case Family::H:
        parts.kappa_c = c_group;
        parts.prefactor.over(c + mu).over(c + nu);
        break;
    case Family::Q:
        parts.kappa_a = a_group;
        parts.prefactor.times(a + mu).times(a + nu);
        break;
    }
    return parts;
}

/// Exact kappa as a Pochhammer ratio; throws ExactnessUnavailable when the
/// gamma arguments do not pair by integer differences.
inline PochhammerRatio exact_kappa(const FamilySpec& spec, const ProductParts& parts) {
    try {
        PochhammerRatio r = pair_gamma_shifts(spec.a, parts.kappa_a);
        const PochhammerRatio rc = pair_gamma_shifts(spec.c, parts.kappa_c);
        r.factors.insert(r.factors.end(), rc.factors.begin(), rc.factors.end());
        return r;
    } catch (const UnpairableArguments& e) {
        // With a - c an integer the two groups may still pair across each other.
        if (parts.kappa_a.empty() || parts.kappa_c.empty() || !(spec.a - spec.c).is_integer())
            throw ExactnessUnavailable(e.what());
        std::vector<GammaShift> pooled;
        for (const auto& s : parts.kappa_a) pooled.push_back({spec.a + s.offset, s.sign});
        for (const auto& s : parts.kappa_c) pooled.push_back({spec.c + s.offset, s.sign});
        try {
            return pair_gamma_shifts(Rational(0), pooled);
        } catch (const UnpairableArguments&) {
            throw ExactnessUnavailable(e.what());
        }
    }
}

/// Enclosure of kappa from gamma enclosures; works for any shifts.
inline Interval kappa_enclosure(const FamilySpec& spec, const ProductParts& parts, mpfr_prec_t prec) {
    GammaProduct g;
    for (const auto& s : parts.kappa_a) (s.sign > 0 ? g.times(spec.a + s.offset) : g.over(spec.a + s.offset));
    for (const auto& s : parts.kappa_c) (s.sign > 0 ? g.times(spec.c + s.offset) : g.over(spec.c + s.offset));
    return g.enclose(prec);
}

/// Product difference with its positive gamma prefactor factored out.
///
/// For G, H and Q the cofactor's constant term is f_0^2 (1 - kappa), which
/// vanishes only when kappa = 1.
struct PrefactoredSeries {
    TruncatedSeries<Rational> series;
    GammaProduct prefactor;
    PochhammerRatio kappa_form;
    Rational kappa{1};
};

inline PrefactoredSeries product_difference(const FamilySpec& spec, const Rational& mu, const Rational& nu,
                                            std::size_t order) {
    ProductParts parts = product_parts(spec, mu, nu, order);
    PochhammerRatio form = exact_kappa(spec, parts);
    Rational kappa = form.evaluate();
    auto series = subtract(parts.first, scale(parts.second, kappa));
    return {std::move(series), std::move(parts.prefactor), std::move(form), std::move(kappa)};
}

/// Interval-guarded cofactor series for shifts where kappa is not rational.
struct EnclosedDifference {
    TruncatedSeries<Interval> series;
    GammaProduct prefactor;
    Interval kappa;
};

inline EnclosedDifference product_difference_enclosure(const FamilySpec& spec, const Rational& mu,
                                                       const Rational& nu, std::size_t order, mpfr_prec_t prec) {
    ProductParts parts = product_parts(spec, mu, nu, order);
    const Interval kappa = kappa_enclosure(spec, parts, prec);
    std::vector<Interval> out;
    out.reserve(order + 1);
    for (std::size_t m = 0; m <= order; ++m)
        out.push_back(Interval::enclose(parts.first[m], prec) - kappa * Interval::enclose(parts.second[m], prec));
    return {TruncatedSeries<Interval>(std::move(out)), std::move(parts.prefactor), kappa};
}

/// Raw product difference in floating point from independently built family
/// coefficients; no prefactor is removed.
inline TruncatedSeries<Real> product_difference_float(const FamilySpec& spec, const Rational& mu,
                                                      const Rational& nu, std::size_t order, mpfr_prec_t prec) {
    const auto fm = family_series_float(spec, mu, order, prec);
    const auto fn = family_series_float(spec, nu, order, prec);
    const auto f0 = family_series_float(spec, Rational(0), order, prec);
    const auto fmn = family_series_float(spec, mu + nu, order, prec);
    return subtract(cauchy_product(fm, fn), cauchy_product(f0, fmn));
}

} // namespace qlc

#endif // QLC_FAMILIES_HPP
