#include "sweeplab/error.hpp"

namespace sweeplab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::NonCoprime: return "NonCoprime";
        case ErrorCode::ParamsTooLarge: return "ParamsTooLarge";
        case ErrorCode::BadLetter: return "BadLetter";
        case ErrorCode::BadCounts: return "BadCounts";
        case ErrorCode::NotDyck: return "NotDyck";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
        case ErrorCode::RowOutOfRange: return "RowOutOfRange";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotInImage: return "NotInImage";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::InvalidMove: return "InvalidMove";
        case ErrorCode::NoMoveAvailable: return "NoMoveAvailable";
    }
    return "Unknown";
}

}  // namespace sweeplab
