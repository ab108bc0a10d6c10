#ifndef SWEEPLAB_RECURSION_HPP
#define SWEEPLAB_RECURSION_HPP

#include <cstddef>
#include <vector>

#include "sweeplab/params.hpp"
#include "sweeplab/word.hpp"

namespace sweeplab {

/// Swap of an adjacent North-East pair at columns p, p+1 into East-North,
/// which removes one area cell. `level` is the start rank k of the North
/// step; the move is valid iff k >= n.
struct RemovalMove {
    std::size_t column;
    rank_t level;

    friend bool operator==(const RemovalMove&, const RemovalMove&) = default;
};

/// Segment counts of the arrows other than the two moved ones, in the four
/// single-row bands flanking the move.
///
///   T1: row k+m-1, columns < p      T2: row k+m,   columns > p+1
///   B1: row k-n-1, columns < p      B2: row k-n,   columns > p+1
struct RegionCounts {
    rank_t red_t1 = 0;
    rank_t blue_t1 = 0;
    rank_t red_t2 = 0;
    rank_t blue_b1 = 0;
    rank_t blue_b2 = 0;
    rank_t red_b2 = 0;

    friend bool operator==(const RegionCounts&, const RegionCounts&) = default;
};

enum class ReductionStrategy { FirstValid, MaxSweepEast };

std::vector<RemovalMove> valid_moves(const StepWord& word);

/// Throws InvalidMove unless `move` is a valid move of `word`.
void require_valid(const StepWord& word, const RemovalMove& move);

/// Looks up the move at `column`; throws InvalidMove if there is none.
RemovalMove move_at(const StepWord& word, std::size_t column);

StepWord apply_move(const StepWord& word, const RemovalMove& move);

RegionCounts region_counts(const StepWord& word, const RemovalMove& move);

/// Predicted area(sweep(word)) - area(sweep(apply_move(word, move))).
rank_t area_recursion_delta(const StepWord& word, const RemovalMove& move);

/// Predicted dinv(word) - dinv(apply_move(word, move)).
rank_t dinv_recursion_delta(const StepWord& word, const RemovalMove& move);

/// Checks that the image rank of the moved North step drops by
/// m*A - n*B, with A, B the other red and blue arrows swept strictly
/// between its two positions.
bool rank_drop_identity_holds(const StepWord& word, const RemovalMove& move);

/// A chain of valid moves from `word` down to the base path.
std::vector<RemovalMove> reduce_to_base(const StepWord& word, ReductionStrategy strategy);

}  // namespace sweeplab

#endif  // SWEEPLAB_RECURSION_HPP
