#ifndef SWEEPLAB_VERIFY_HPP
#define SWEEPLAB_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sweeplab/enumerate.hpp"
#include "sweeplab/params.hpp"
#include "sweeplab/word.hpp"

namespace sweeplab {

/// The two statistics the verifier treats as under test. Swapping in a
/// broken one must make the run fail.
struct StatisticSet {
    std::function<rank_t(const StepWord&)> area;
    std::function<rank_t(const StepWord&)> dinv;
};

StatisticSet reference_statistics();

/// Deliberately broken statistic sets, for mutation testing the verifier.
std::optional<StatisticSet> faulty_statistics(std::string_view name);
std::vector<std::string_view> fault_names();

struct VerifyOptions {
    std::size_t limit = default_enumeration_limit();
    unsigned jobs = 1;
    StatisticSet stats = reference_statistics();
};

struct CheckResult {
    std::string name;
    std::uint64_t evaluations = 0;
    std::optional<std::string> counterexample;
    std::string detail;

    bool passed() const noexcept { return !counterexample; }
};

struct VerifyReport {
    Params params;
    std::size_t paths = 0;
    std::vector<CheckResult> checks;
    // Moves chosen by the max-sweep-east rule whose T1 and T2 bands are
    // both empty, out of all such moves. Informational only.
    std::uint64_t quiet_top_moves = 0;
    std::uint64_t chosen_moves = 0;

    bool passed() const noexcept;
    const CheckResult* first_failure() const noexcept;
};

/// Names of the checks, in report order.
std::vector<std::string_view> check_names();

/// Runs every check over the full enumeration of `params`.
/// Results do not depend on `options.jobs`.
VerifyReport verify_all(const Params& params, const VerifyOptions& options = {});

}  // namespace sweeplab

#endif  // SWEEPLAB_VERIFY_HPP
