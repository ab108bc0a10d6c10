#include "sweeplab/params.hpp"

#include <numeric>

#include <fmt/format.h>

#include "sweeplab/error.hpp"

namespace sweeplab {

std::string Params::to_string() const {
    return fmt::format("({},{},{})", m_, n_, d_);
}

Params make_params(rank_t m, rank_t n, rank_t d) {
    if (m < 1 || n < 1 || d < 1) {
        throw Error(ErrorCode::NonPositive,
                    fmt::format("m, n, d must be positive, got ({},{},{})", m, n, d));
    }
    if (std::gcd(m, n) != 1) {
        throw Error(ErrorCode::NonCoprime,
                    fmt::format("m={} and n={} are not co-prime", m, n));
    }
    if (m > kMaxHeight || n > kMaxHeight || d > kMaxHeight ||
        m * n > kMaxHeight || m * n * d > kMaxHeight) {
        throw Error(ErrorCode::ParamsTooLarge,
                    fmt::format("dmn exceeds {} for ({},{},{})", kMaxHeight, m, n, d));
    }
    return Params(m, n, d);
}

}  // namespace sweeplab
