#ifndef SWEEPLAB_SWEEP_HPP
#define SWEEPLAB_SWEEP_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "sweeplab/enumerate.hpp"
#include "sweeplab/params.hpp"
#include "sweeplab/word.hpp"

namespace sweeplab {

/// Position of a step start in the sweep: lower rank first, and within a
/// rank the rightmost column first.
struct SweepKey {
    rank_t rank;
    std::size_t column;

    friend bool operator==(const SweepKey&, const SweepKey&) = default;
    friend std::strong_ordering operator<=>(const SweepKey& a, const SweepKey& b) {
        if (auto c = a.rank <=> b.rank; c != 0) return c;
        return b.column <=> a.column;
    }
};

/// Exact x-coordinate num/den on the diagram, den > 0.
struct Abscissa {
    rank_t num;
    rank_t den;
};

/// The slope-epsilon line through the start of a reference step, with
/// epsilon kept symbolic: height decides first, then x against the pivot.
class GreenLine {
public:
    GreenLine(rank_t level, std::size_t ref_column)
        : level_(level), pivot_x_(static_cast<rank_t>(ref_column) - 1) {}

    rank_t level() const noexcept { return level_; }

    bool strictly_above(rank_t height, Abscissa x) const noexcept;
    bool strictly_below(rank_t height, Abscissa x) const noexcept;

    /// Whether the piece of an arrow inside `row` lies above the line. The
    /// line leaves the level only by an infinitesimal, so a row band is
    /// above it exactly when the band's interior is.
    bool row_above(rank_t row) const noexcept { return row >= level_; }
    bool row_below(rank_t row) const noexcept { return row < level_; }

private:
    rank_t level_;
    rank_t pivot_x_;
};

/// Step columns (1-indexed) in sweep order.
std::vector<std::size_t> sweep_order(const StepWord& word);

StepWord sweep(const StepWord& word);

/// Start rank of the step at `position` (1-indexed) of the sweep image,
/// counted from the steps swept before it.
rank_t image_start_rank(const StepWord& word, std::size_t position);

/// Image start rank of the step at `column`, recovered from segment counts
/// around the green line through that step's start.
rank_t green_line_rank(const StepWord& word, std::size_t column);

/// The Dyck preimage of `image`, looked up in a per-params bijection table
/// built once by enumeration.
StepWord unsweep(const StepWord& image,
                 std::size_t limit = default_enumeration_limit());

}  // namespace sweeplab

#endif  // SWEEPLAB_SWEEP_HPP
