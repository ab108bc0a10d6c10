#ifndef SWEEPLAB_DIAGRAM_HPP
#define SWEEPLAB_DIAGRAM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sweeplab/params.hpp"
#include "sweeplab/word.hpp"

namespace sweeplab {

enum class Color : unsigned char { Red, Blue };

/// One step drawn in its own column: red is the up vector (1,m) from
/// start_rank, blue the down vector (1,-n).
struct Arrow {
    std::size_t column;
    Color color;
    rank_t start_rank;

    rank_t end_rank(const Params& p) const noexcept {
        return color == Color::Red ? start_rank + p.m() : start_rank - p.n();
    }
    /// Lowest row the arrow crosses.
    rank_t row_lo(const Params& p) const noexcept {
        return color == Color::Red ? start_rank : start_rank - p.n();
    }
    /// One past the highest row the arrow crosses.
    rank_t row_hi(const Params& p) const noexcept {
        return color == Color::Red ? start_rank + p.m() : start_rank;
    }
    bool crosses_row(const Params& p, rank_t row) const noexcept {
        return row_lo(p) <= row && row < row_hi(p);
    }

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Segment {
    std::size_t column;
    Color color;

    friend bool operator==(const Segment&, const Segment&) = default;
};

struct RowCounts {
    rank_t row;
    rank_t red;
    rank_t blue;

    rank_t balance() const noexcept { return red - blue; }

    friend bool operator==(const RowCounts&, const RowCounts&) = default;
};

/// The stretched picture of a word on the (dm+dn) x dmn rectangle.
///
/// Rows are named by the level of their bottom line. For Dyck words the
/// rows are 0..dmn-1; otherwise the range widens to cover every attained
/// rank.
class PathDiagram {
public:
    explicit PathDiagram(const StepWord& word);

    const Params& params() const noexcept { return params_; }
    std::span<const Arrow> arrows() const noexcept { return arrows_; }
    const Arrow& arrow(std::size_t column) const { return arrows_.at(column - 1); }

    rank_t height() const noexcept { return params_.height(); }
    rank_t row_begin() const noexcept { return row_begin_; }
    rank_t row_end() const noexcept { return row_end_; }

    /// Segments crossing `row`, in increasing column order.
    std::vector<Segment> segments_in_row(rank_t row) const;
    RowCounts row_counts(rank_t row) const;

    /// True iff every nonempty row reads (red, blue) repeated.
    bool check_row_structure() const;

private:
    void require_row(rank_t row) const;

    Params params_;
    std::vector<Arrow> arrows_;
    rank_t row_begin_ = 0;
    rank_t row_end_ = 0;
};

PathDiagram build_diagram(const StepWord& word);

}  // namespace sweeplab

#endif  // SWEEPLAB_DIAGRAM_HPP
