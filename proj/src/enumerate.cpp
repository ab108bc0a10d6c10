#include "sweeplab/enumerate.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include <fmt/format.h>

#include "sweeplab/error.hpp"

namespace sweeplab {

std::size_t default_enumeration_limit() {
    if (const char* env = std::getenv("SWEEPLAB_LIMIT")) {
        std::string_view text(env);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size()) return value;
    }
    return kDefaultEnumerationLimit;
}

namespace {

class Enumerator {
public:
    Enumerator(const Params& p, const std::function<void(const StepWord&)>& visit)
        : p_(p), visit_(visit) {
        steps_.reserve(static_cast<std::size_t>(p.length()));
    }

    void run() { extend(0, 0, 0); }

private:
    void extend(rank_t north, rank_t east, rank_t rank) {
        if (north == p_.north_count() && east == p_.east_count()) {
            visit_(StepWord(p_, steps_));
            return;
        }
        if (north < p_.north_count()) {
            steps_.push_back(Step::North);
            extend(north + 1, east, rank + p_.m());
            steps_.pop_back();
        }
        if (east < p_.east_count() && rank >= p_.n()) {
            steps_.push_back(Step::East);
            extend(north, east + 1, rank - p_.n());
            steps_.pop_back();
        }
    }

    const Params& p_;
    const std::function<void(const StepWord&)>& visit_;
    std::vector<Step> steps_;
};

}  // namespace

void for_each_dyck(const Params& params,
                   const std::function<void(const StepWord&)>& visit,
                   std::size_t limit) {
    if (static_cast<std::size_t>(params.length()) > limit) {
        throw Error(ErrorCode::LimitExceeded,
                    fmt::format("dm+dn = {} exceeds the enumeration limit {}",
                                params.length(), limit));
    }
    Enumerator(params, visit).run();
}

std::vector<StepWord> enumerate_dyck(const Params& params, std::size_t limit) {
    std::vector<StepWord> out;
    for_each_dyck(params, [&](const StepWord& w) { out.push_back(w); }, limit);
    return out;
}

BigCount count_dyck(const Params& params) {
    const auto width = static_cast<std::size_t>(params.east_count());
    const auto height = static_cast<std::size_t>(params.north_count());
    // ways[x] holds the number of Dyck prefixes ending at (x, y) for the
    // current row y.
    std::vector<BigCount> ways(width + 1);
    for (std::size_t y = 0; y <= height; ++y) {
        for (std::size_t x = 0; x <= width; ++x) {
            const rank_t rank = params.m() * static_cast<rank_t>(y) -
                                params.n() * static_cast<rank_t>(x);
            if (rank < 0) {
                ways[x] = 0;
                continue;
            }
            if (x == 0 && y == 0) {
                ways[x] = 1;
                continue;
            }
            // ways[x] still holds the value from row y-1 (the North predecessor).
            BigCount total = y > 0 ? ways[x] : BigCount(0);
            if (x > 0) total += ways[x - 1];
            ways[x] = std::move(total);
        }
    }
    return ways[width];
}

}  // namespace sweeplab
