#ifndef SWEEPLAB_ERROR_HPP
#define SWEEPLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sweeplab {

enum class ErrorCode {
    NonPositive,
    NonCoprime,
    ParamsTooLarge,
    BadLetter,
    BadCounts,
    NotDyck,
    LimitExceeded,
    RowOutOfRange,
    IndexOutOfRange,
    NotInImage,
    NonIntegral,
    InvalidMove,
    NoMoveAvailable,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sweeplab

#endif  // SWEEPLAB_ERROR_HPP
