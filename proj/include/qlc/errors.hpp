#ifndef QLC_ERRORS_HPP
#define QLC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlc {

// Every failure the library reports derives from qlc::Error so callers can
// catch the whole family at the CLI boundary.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QLC_DEFINE_ERROR(Name)                  \
    class Name : public Error {                 \
    public:                                     \
        explicit Name(const std::string& what)  \
            : Error(#Name ": " + what) {}       \
    }

QLC_DEFINE_ERROR(ParseError);
QLC_DEFINE_ERROR(UnpairableArguments);
QLC_DEFINE_ERROR(NonPositiveParameter);
QLC_DEFINE_ERROR(ExactnessUnavailable);
QLC_DEFINE_ERROR(PoleParameter);
QLC_DEFINE_ERROR(DivergentArgument);
QLC_DEFINE_ERROR(DomainError);
QLC_DEFINE_ERROR(IndexOutOfRange);
QLC_DEFINE_ERROR(UnsortedInput);
QLC_DEFINE_ERROR(HypothesisUnmet);
QLC_DEFINE_ERROR(PreconditionViolation);

#undef QLC_DEFINE_ERROR

class ZeroDenominator : public Error {
public:
    explicit ZeroDenominator(std::size_t depth)
        : Error("ZeroDenominator: continued fraction denominator vanished at depth " +
                std::to_string(depth)),
          depth_(depth) {}

    std::size_t depth() const noexcept { return depth_; }

private:
    std::size_t depth_;
};

} // namespace qlc

#endif // QLC_ERRORS_HPP
