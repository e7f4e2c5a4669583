#ifndef QLC_SIGN_HPP
#define QLC_SIGN_HPP

#include <string_view>

#include "qlc/rational.hpp"

namespace qlc {

// Indeterminate only arises from interval enclosures that straddle zero.
enum class Sign { Negative, Zero, Positive, Indeterminate };

inline Sign sign_of(const Rational& q) {
    const int s = q.sign();
    return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline std::string_view to_string(Sign s) {
    switch (s) {
    case Sign::Negative: return "NEG";
    case Sign::Zero: return "ZERO";
    case Sign::Positive: return "POS";
    case Sign::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

} // namespace qlc

#endif // QLC_SIGN_HPP
