#ifndef SWEEPLAB_STATISTICS_HPP
#define SWEEPLAB_STATISTICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sweeplab/enumerate.hpp"
#include "sweeplab/params.hpp"
#include "sweeplab/word.hpp"

namespace sweeplab {

/// A unit cell of the dm x dn grid by its south-west corner.
struct Cell {
    rank_t x;
    rank_t y;
};

bool cell_above_path(const StepWord& word, Cell c);
/// Weakly above the diagonal: the south-east corner has rank >= 0.
bool cell_weakly_above_diagonal(const Params& p, Cell c);

/// Cells below the path and weakly above the diagonal.
rank_t area_cells(const StepWord& word);

/// Area from the North-step start ranks. Throws NonIntegral if the rank
/// sum is not divisible as required.
rank_t area_rank_formula(const StepWord& word);

/// Least nonnegative cell rank in grid row j, i.e. (m j) mod n.
rank_t lpr(rank_t row, const Params& params);

/// (East, later North) pairs with start ranks a, b and 0 <= a-b < m+n.
rank_t dinv_pairs(const StepWord& word);

/// Cells above the path that contribute to dinv, by column then row.
std::vector<Cell> dinv_cell_list(const StepWord& word);

/// The same count as dinv_pairs, taken over the cells above the path.
rank_t dinv_cells(const StepWord& word);

/// ((dm-1)(dn-1)+d-1)/2: the dinv of the base path and the area of the
/// corner path.
rank_t max_stat(const Params& params);

/// Joint counts of (area, dinv) over all Dyck paths of one shape.
class StatTable {
public:
    using Key = std::pair<rank_t, rank_t>;  // (area, dinv)

    explicit StatTable(Params params) : params_(params) {}

    void add(rank_t area, rank_t dinv, std::uint64_t count = 1);
    void merge(const StatTable& other);

    const Params& params() const noexcept { return params_; }
    const std::map<Key, std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t total() const noexcept;

    std::map<rank_t, std::uint64_t> area_marginal() const;
    std::map<rank_t, std::uint64_t> dinv_marginal() const;
    bool marginals_equal() const { return area_marginal() == dinv_marginal(); }

    /// "area,dinv,count" rows ordered by dinv, then area.
    std::string to_csv() const;
    /// Area rows by dinv columns, 0..max_stat on both axes.
    std::string to_matrix() const;

private:
    Params params_;
    std::map<Key, std::uint64_t> counts_;
};

/// Table of (area_cells, dinv_pairs) over the whole enumeration.
StatTable joint_distribution(const Params& params,
                             std::size_t limit = default_enumeration_limit(),
                             unsigned jobs = 1);

}  // namespace sweeplab

#endif  // SWEEPLAB_STATISTICS_HPP
