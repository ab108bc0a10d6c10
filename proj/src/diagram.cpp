#include "sweeplab/diagram.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "sweeplab/error.hpp"

namespace sweeplab {

PathDiagram::PathDiagram(const StepWord& word) : params_(word.params()) {
    const auto ranks = start_ranks(word);
    arrows_.reserve(word.size());
    rank_t lo = 0;
    rank_t hi = params_.height();
    for (std::size_t c = 1; c <= word.size(); ++c) {
        const Color color = word.at(c) == Step::North ? Color::Red : Color::Blue;
        const Arrow arrow{c, color, ranks.at(c)};
        lo = std::min(lo, arrow.row_lo(params_));
        hi = std::max(hi, arrow.row_hi(params_));
        arrows_.push_back(arrow);
    }
    row_begin_ = lo;
    row_end_ = hi;
}

void PathDiagram::require_row(rank_t row) const {
    if (row < row_begin_ || row >= row_end_) {
        throw Error(ErrorCode::RowOutOfRange,
                    fmt::format("row {} outside {}..{}", row, row_begin_, row_end_ - 1));
    }
}

std::vector<Segment> PathDiagram::segments_in_row(rank_t row) const {
    require_row(row);
    std::vector<Segment> out;
    for (const auto& a : arrows_) {
        if (a.crosses_row(params_, row)) out.push_back({a.column, a.color});
    }
    return out;
}

RowCounts PathDiagram::row_counts(rank_t row) const {
    require_row(row);
    RowCounts counts{row, 0, 0};
    for (const auto& a : arrows_) {
        if (!a.crosses_row(params_, row)) continue;
        if (a.color == Color::Red) {
            ++counts.red;
        } else {
            ++counts.blue;
        }
    }
    return counts;
}

bool PathDiagram::check_row_structure() const {
    // Sweep the rows once, tracking the color of the last segment seen per row.
    const auto rows = static_cast<std::size_t>(row_end_ - row_begin_);
    std::vector<signed char> last(rows, -1);  // -1 empty, 0 red, 1 blue
    for (const auto& a : arrows_) {
        const signed char color = a.color == Color::Red ? 0 : 1;
        for (rank_t j = a.row_lo(params_); j < a.row_hi(params_); ++j) {
            auto& prev = last[static_cast<std::size_t>(j - row_begin_)];
            const signed char expected = prev == 0 ? 1 : 0;
            if (color != expected) return false;
            prev = color;
        }
    }
    return std::all_of(last.begin(), last.end(), [](signed char c) { return c != 0; });
}

PathDiagram build_diagram(const StepWord& word) { return PathDiagram(word); }

}  // namespace sweeplab
