#include "sweeplab/word.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "sweeplab/error.hpp"

namespace sweeplab {

char to_char(Step s) noexcept { return s == Step::North ? 'N' : 'E'; }

StepWord::StepWord(Params params, std::vector<Step> steps)
    : params_(params), steps_(std::move(steps)) {
    const auto north = std::count(steps_.begin(), steps_.end(), Step::North);
    const auto east = static_cast<rank_t>(steps_.size()) - north;
    if (north != params_.north_count() || east != params_.east_count()) {
        throw Error(ErrorCode::BadCounts,
                    fmt::format("expected {} N and {} E for {}, got {} N and {} E",
                                params_.north_count(), params_.east_count(),
                                params_.to_string(), north, east));
    }
}

Step StepWord::at(std::size_t column) const {
    if (column < 1 || column > steps_.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    fmt::format("column {} outside 1..{}", column, steps_.size()));
    }
    return steps_[column - 1];
}

StepWord StepWord::with_swapped(std::size_t column) const {
    if (column < 1 || column >= steps_.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    fmt::format("cannot swap columns {} and {}", column, column + 1));
    }
    auto steps = steps_;
    std::swap(steps[column - 1], steps[column]);
    return StepWord(params_, std::move(steps));
}

std::string StepWord::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (auto s : steps_) out.push_back(to_char(s));
    return out;
}

StepWord parse_word(std::string_view text, const Params& params) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'N':
            case 'S': steps.push_back(Step::North); break;
            case 'E':
            case 'W': steps.push_back(Step::East); break;
            default:
                throw Error(ErrorCode::BadLetter,
                            fmt::format("bad letter '{}' at position {}", text[i], i + 1));
        }
    }
    return StepWord(params, std::move(steps));
}

RankSequence start_ranks(const StepWord& word) {
    const auto& p = word.params();
    std::vector<rank_t> ranks;
    ranks.reserve(word.size());
    rank_t r = 0;
    for (auto s : word.steps()) {
        ranks.push_back(r);
        r += s == Step::North ? p.m() : -p.n();
    }
    RankSequence seq(std::move(ranks));
    seq.final_ = r;
    return seq;
}

bool is_dyck(const StepWord& word) {
    const auto& p = word.params();
    rank_t r = 0;
    for (auto s : word.steps()) {
        r += s == Step::North ? p.m() : -p.n();
        if (r < 0) return false;
    }
    return true;
}

void require_dyck(const StepWord& word) {
    if (!is_dyck(word)) {
        throw Error(ErrorCode::NotDyck,
                    fmt::format("{} is not a Dyck path for {}", word.str(),
                                word.params().to_string()));
    }
}

StepWord base_path(const Params& params) {
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(params.length()));
    rank_t r = 0;
    for (rank_t i = 0; i < params.length(); ++i) {
        if (r >= params.n()) {
            steps.push_back(Step::East);
            r -= params.n();
        } else {
            steps.push_back(Step::North);
            r += params.m();
        }
    }
    return StepWord(params, std::move(steps));
}

StepWord corner_path(const Params& params) {
    std::vector<Step> steps(static_cast<std::size_t>(params.north_count()), Step::North);
    steps.resize(static_cast<std::size_t>(params.length()), Step::East);
    return StepWord(params, std::move(steps));
}

std::vector<rank_t> south_end_ranks(const StepWord& word) {
    require_dyck(word);
    const auto ranks = start_ranks(word);
    std::vector<rank_t> out;
    out.reserve(static_cast<std::size_t>(word.params().north_count()));
    for (std::size_t c = 1; c <= word.size(); ++c) {
        if (word.at(c) == Step::North) out.push_back(ranks.at(c));
    }
    return out;
}

}  // namespace sweeplab
