#include "sweeplab/sweep.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "sweeplab/diagram.hpp"
#include "sweeplab/error.hpp"

namespace sweeplab {

bool GreenLine::strictly_above(rank_t height, Abscissa x) const noexcept {
    if (height != level_) return height > level_;
    return x.num < pivot_x_ * x.den;
}

bool GreenLine::strictly_below(rank_t height, Abscissa x) const noexcept {
    if (height != level_) return height < level_;
    return x.num > pivot_x_ * x.den;
}

std::vector<std::size_t> sweep_order(const StepWord& word) {
    const auto ranks = start_ranks(word);
    std::vector<std::size_t> order(word.size());
    std::iota(order.begin(), order.end(), std::size_t{1});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return SweepKey{ranks.at(a), a} < SweepKey{ranks.at(b), b};
    });
    return order;
}

StepWord sweep(const StepWord& word) {
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (auto c : sweep_order(word)) steps.push_back(word.at(c));
    return StepWord(word.params(), std::move(steps));
}

rank_t image_start_rank(const StepWord& word, std::size_t position) {
    if (position < 1 || position > word.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    fmt::format("sweep position {} outside 1..{}", position, word.size()));
    }
    const auto order = sweep_order(word);
    rank_t north = 0;
    rank_t east = 0;
    for (std::size_t i = 0; i + 1 < position; ++i) {
        if (word.at(order[i]) == Step::North) {
            ++north;
        } else {
            ++east;
        }
    }
    const auto& p = word.params();
    return north * p.m() - east * p.n();
}

rank_t green_line_rank(const StepWord& word, std::size_t column) {
    require_dyck(word);
    const auto& p = word.params();
    const PathDiagram diagram(word);
    const auto& ref = diagram.arrow(column);
    const GreenLine line(ref.start_rank, column);
    const SweepKey ref_key{ref.start_rank, column};

    // Red arrows swept before the reference contribute their segments above
    // the line; blue arrows from the reference onward (the reference itself
    // included) contribute their segments below it.
    rank_t total = 0;
    for (const auto& a : diagram.arrows()) {
        const bool before = SweepKey{a.start_rank, a.column} < ref_key;
        if (a.column != column) {
            const auto x0 = static_cast<rank_t>(a.column) - 1;
            const bool below = line.strictly_below(a.start_rank, {x0, 1});
            const bool above = line.strictly_above(a.start_rank, {x0, 1});
            if (below != before || below == above) {
                throw std::logic_error(fmt::format("green line and sweep order disagree on column {} of {}",
                                                   a.column, word.str()));
            }
        }
        if (a.color == Color::Red && before) {
            for (rank_t j = a.row_lo(p); j < a.row_hi(p); ++j) {
                if (line.row_above(j)) ++total;
            }
        } else if (a.color == Color::Blue && !before) {
            for (rank_t j = a.row_lo(p); j < a.row_hi(p); ++j) {
                if (line.row_below(j)) ++total;
            }
        }
    }
    return total;
}

namespace {

using PreimageTable = std::map<std::string, StepWord>;

std::shared_ptr<const PreimageTable> preimage_table(const Params& params, std::size_t limit) {
    static std::mutex mutex;
    static std::map<Params, std::shared_ptr<const PreimageTable>> cache;

    if (static_cast<std::size_t>(params.length()) > limit) {
        throw Error(ErrorCode::LimitExceeded,
                    fmt::format("dm+dn = {} exceeds the enumeration limit {}",
                                params.length(), limit));
    }
    std::lock_guard lock(mutex);
    if (auto it = cache.find(params); it != cache.end()) return it->second;

    auto table = std::make_shared<PreimageTable>();
    for_each_dyck(
        params,
        [&](const StepWord& w) {
            auto [it, inserted] = table->emplace(sweep(w).str(), w);
            if (!inserted) {
                throw Error(ErrorCode::NotInImage,
                            fmt::format("sweep sends both {} and {} to {}", it->second.str(),
                                        w.str(), it->first));
            }
        },
        limit);
    cache.emplace(params, table);
    return table;
}

}  // namespace

StepWord unsweep(const StepWord& image, std::size_t limit) {
    require_dyck(image);
    const auto table = preimage_table(image.params(), limit);
    auto it = table->find(image.str());
    if (it == table->end()) {
        throw Error(ErrorCode::NotInImage,
                    fmt::format("{} has no Dyck preimage under sweep", image.str()));
    }
    return it->second;
}

}  // namespace sweeplab
