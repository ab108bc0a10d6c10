#ifndef SWEEPLAB_WORD_HPP
#define SWEEPLAB_WORD_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sweeplab/params.hpp"

namespace sweeplab {

enum class Step : unsigned char { North, East };

char to_char(Step s) noexcept;

/// A complete lattice word of dn North and dm East steps.
///
/// Columns are 1-indexed: at(1) is the first step. The letter counts are
/// validated on construction, so every StepWord ends on rank 0.
class StepWord {
public:
    StepWord(Params params, std::vector<Step> steps);

    const Params& params() const noexcept { return params_; }
    std::size_t size() const noexcept { return steps_.size(); }
    std::span<const Step> steps() const noexcept { return steps_; }

    Step at(std::size_t column) const;

    /// The same word with the letters at columns p and p+1 exchanged.
    StepWord with_swapped(std::size_t column) const;

    std::string str() const;

    friend bool operator==(const StepWord& a, const StepWord& b) {
        return a.params_ == b.params_ && a.steps_ == b.steps_;
    }
    friend bool operator<(const StepWord& a, const StepWord& b) {
        return a.steps_ < b.steps_;
    }

private:
    Params params_;
    std::vector<Step> steps_;
};

/// Parses a word over {N,E}; S and W are accepted for N and E.
StepWord parse_word(std::string_view text, const Params& params);

/// Starting ranks r_1..r_L of the steps, 0-based storage of 1-based columns.
class RankSequence {
public:
    explicit RankSequence(std::vector<rank_t> ranks) : ranks_(std::move(ranks)) {}

    std::size_t size() const noexcept { return ranks_.size(); }
    /// Rank of the start of step `column` (1-indexed).
    rank_t at(std::size_t column) const { return ranks_.at(column - 1); }
    std::span<const rank_t> values() const noexcept { return ranks_; }
    /// Rank of the final vertex; zero for every complete word.
    rank_t final_rank() const noexcept { return final_; }

private:
    friend RankSequence start_ranks(const StepWord& word);
    std::vector<rank_t> ranks_;
    rank_t final_ = 0;
};

RankSequence start_ranks(const StepWord& word);

bool is_dyck(const StepWord& word);

/// Throws NotDyck unless the word is a Dyck path.
void require_dyck(const StepWord& word);

/// The area-0 path, built greedily from rank 0.
StepWord base_path(const Params& params);

/// N^{dn} E^{dm}, the path of maximum area.
StepWord corner_path(const Params& params);

/// Ranks of the North-step starts in path order.
std::vector<rank_t> south_end_ranks(const StepWord& word);

}  // namespace sweeplab

#endif  // SWEEPLAB_WORD_HPP
