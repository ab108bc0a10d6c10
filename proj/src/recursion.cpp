#include "sweeplab/recursion.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "sweeplab/error.hpp"
#include "sweeplab/statistics.hpp"
#include "sweeplab/sweep.hpp"

namespace sweeplab {

std::vector<RemovalMove> valid_moves(const StepWord& word) {
    require_dyck(word);
    const auto ranks = start_ranks(word);
    const rank_t n = word.params().n();
    std::vector<RemovalMove> out;
    for (std::size_t p = 1; p < word.size(); ++p) {
        if (word.at(p) == Step::North && word.at(p + 1) == Step::East && ranks.at(p) >= n) {
            out.push_back({p, ranks.at(p)});
        }
    }
    return out;
}

void require_valid(const StepWord& word, const RemovalMove& move) {
    const std::size_t p = move.column;
    const bool shape_ok = p >= 1 && p < word.size() && word.at(p) == Step::North &&
                          word.at(p + 1) == Step::East;
    if (!shape_ok || start_ranks(word).at(p) != move.level || move.level < word.params().n()) {
        throw Error(ErrorCode::InvalidMove,
                    fmt::format("no area cell removable at column {} (level {}) of {}", p,
                                move.level, word.str()));
    }
}

RemovalMove move_at(const StepWord& word, std::size_t column) {
    if (column < 1 || column >= word.size()) {
        throw Error(ErrorCode::InvalidMove,
                    fmt::format("column {} has no right neighbour in {}", column, word.str()));
    }
    const RemovalMove move{column, start_ranks(word).at(column)};
    require_valid(word, move);
    return move;
}

StepWord apply_move(const StepWord& word, const RemovalMove& move) {
    require_valid(word, move);
    return word.with_swapped(move.column);
}

RegionCounts region_counts(const StepWord& word, const RemovalMove& move) {
    require_valid(word, move);
    const auto& p = word.params();
    const rank_t m = p.m();
    const rank_t n = p.n();
    const rank_t k = move.level;
    const auto ranks = start_ranks(word);

    RegionCounts out;
    for (std::size_t c = 1; c <= word.size(); ++c) {
        const rank_t r = ranks.at(c);
        const bool red = word.at(c) == Step::North;
        if (c < move.column) {
            if (red && k <= r && r < k + m) ++out.red_t1;
            if (!red && k + m <= r && r < k + m + n) ++out.blue_t1;
            if (!red && k - n <= r && r < k) ++out.blue_b1;
        } else if (c > move.column + 1) {
            if (red && k < r && r <= k + m) ++out.red_t2;
            if (!red && k - n < r && r <= k) ++out.blue_b2;
            if (red && k - n - m < r && r <= k - n) ++out.red_b2;
        }
    }
    return out;
}

rank_t area_recursion_delta(const StepWord& word, const RemovalMove& move) {
    const auto c = region_counts(word, move);
    return c.red_t1 + c.red_t2 - c.blue_b1 - c.blue_b2;
}

rank_t dinv_recursion_delta(const StepWord& word, const RemovalMove& move) {
    const auto c = region_counts(word, move);
    return c.blue_t1 + c.red_t2 - c.blue_b1 - c.red_b2 - 1;
}

namespace {

rank_t image_rank_of_column(const StepWord& word, std::size_t column) {
    const auto order = sweep_order(word);
    const auto pos = std::find(order.begin(), order.end(), column) - order.begin();
    return image_start_rank(word, static_cast<std::size_t>(pos) + 1);
}

}  // namespace

bool rank_drop_identity_holds(const StepWord& word, const RemovalMove& move) {
    const auto swapped = apply_move(word, move);
    const auto& p = word.params();
    const std::size_t col = move.column;
    const rank_t k = move.level;

    const rank_t before = image_rank_of_column(word, col);
    const rank_t after = image_rank_of_column(swapped, col + 1);

    const SweepKey lower{k - p.n(), col + 1};
    const SweepKey upper{k, col};
    const auto ranks = start_ranks(word);
    rank_t red = 0;
    rank_t blue = 0;
    for (std::size_t c = 1; c <= word.size(); ++c) {
        if (c == col || c == col + 1) continue;
        const SweepKey key{ranks.at(c), c};
        if (!(lower < key && key < upper)) continue;
        if (word.at(c) == Step::North) {
            ++red;
        } else {
            ++blue;
        }
    }
    return before - after == p.m() * red - p.n() * blue;
}

std::vector<RemovalMove> reduce_to_base(const StepWord& word, ReductionStrategy strategy) {
    std::vector<RemovalMove> chain;
    StepWord current = word;
    const rank_t m = word.params().m();
    for (;;) {
        const auto moves = valid_moves(current);
        if (moves.empty()) break;
        RemovalMove chosen = moves.front();
        if (strategy == ReductionStrategy::MaxSweepEast) {
            // The East step of a move at p starts at (k+m, p+1).
            chosen = *std::max_element(moves.begin(), moves.end(),
                                       [m](const RemovalMove& a, const RemovalMove& b) {
                                           return SweepKey{a.level + m, a.column + 1} <
                                                  SweepKey{b.level + m, b.column + 1};
                                       });
        }
        chain.push_back(chosen);
        current = apply_move(current, chosen);
    }
    if (area_cells(current) != 0) {
        throw Error(ErrorCode::NoMoveAvailable,
                    fmt::format("{} has positive area but no removable cell", current.str()));
    }
    return chain;
}

}  // namespace sweeplab
