#include "sweeplab/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "sweeplab/diagram.hpp"
#include "sweeplab/error.hpp"
#include "sweeplab/recursion.hpp"
#include "sweeplab/statistics.hpp"
#include "sweeplab/sweep.hpp"

namespace sweeplab {

namespace {

enum Check : std::size_t {
    ImageIsDyck,
    Bijectivity,
    AreaRankFormula,
    DinvCellsVsPairs,
    GreenLineRank,
    RowStructure,
    RankDropIdentity,
    AreaRecursion,
    DinvRecursion,
    CrossIdentities,
    MoveExistence,
    BaseCase,
    DinvSweepsToArea,
    CheckCount,
};

constexpr std::array<std::string_view, CheckCount> kCheckNames = {
    "image-is-dyck",     "bijectivity",      "area-rank-formula", "dinv-cells-vs-pairs",
    "green-line-rank",   "row-structure",    "rank-drop-identity", "area-recursion",
    "dinv-recursion",    "cross-identities", "move-existence",    "base-case",
    "dinv-sweeps-to-area",
};

struct Failure {
    std::size_t index;
    std::string detail;
};

struct PartialResult {
    std::array<std::uint64_t, CheckCount> evaluations{};
    std::array<std::optional<Failure>, CheckCount> failures{};
    std::uint64_t quiet_top_moves = 0;
    std::uint64_t chosen_moves = 0;

    void fail(Check check, std::size_t index, std::string detail) {
        auto& slot = failures[check];
        if (!slot || index < slot->index) slot = Failure{index, std::move(detail)};
    }
};

// Dinv that forgets the East-before-North requirement.
rank_t unordered_dinv(const StepWord& word) {
    require_dyck(word);
    const auto& p = word.params();
    const auto ranks = start_ranks(word);
    rank_t dinv = 0;
    for (std::size_t i = 1; i <= word.size(); ++i) {
        if (word.at(i) != Step::East) continue;
        for (std::size_t j = 1; j <= word.size(); ++j) {
            if (word.at(j) != Step::North) continue;
            const rank_t diff = ranks.at(i) - ranks.at(j);
            if (0 <= diff && diff < p.m() + p.n()) ++dinv;
        }
    }
    return dinv;
}

// Area that drops cells whose south-east corner lies on the diagonal.
rank_t strict_diagonal_area(const StepWord& word) {
    require_dyck(word);
    const auto& p = word.params();
    rank_t area = 0;
    for (rank_t x = 0; x < p.east_count(); ++x) {
        for (rank_t y = 0; y < p.north_count(); ++y) {
            if (!cell_above_path(word, {x, y}) && p.m() * y - p.n() * (x + 1) > 0) ++area;
        }
    }
    return area;
}

void check_path(const StepWord& w, std::size_t index, const StepWord& base,
                const StatisticSet& stats, PartialResult& out) {
    const auto& p = w.params();
    const auto image = sweep(w);
    const auto order = sweep_order(w);
    const auto image_ranks = start_ranks(image);

    out.evaluations[ImageIsDyck]++;
    if (!is_dyck(image)) {
        out.fail(ImageIsDyck, index, fmt::format("image {} is not Dyck", image.str()));
    }

    const rank_t area = stats.area(w);
    const rank_t dinv = stats.dinv(w);

    out.evaluations[AreaRankFormula]++;
    try {
        const rank_t formula = area_rank_formula(w);
        if (formula != area) {
            out.fail(AreaRankFormula, index,
                     fmt::format("area={} but rank formula gives {}", area, formula));
        }
    } catch (const Error& e) {
        out.fail(AreaRankFormula, index, e.what());
    }

    out.evaluations[DinvCellsVsPairs]++;
    if (const rank_t cells = dinv_cells(w); cells != dinv) {
        out.fail(DinvCellsVsPairs, index, fmt::format("dinv={} but cell count gives {}", dinv, cells));
    }

    out.evaluations[GreenLineRank]++;
    for (std::size_t pos = 1; pos <= w.size(); ++pos) {
        const rank_t expected = image_ranks.at(pos);
        const rank_t counted = green_line_rank(w, order[pos - 1]);
        if (counted != expected || counted < 0) {
            out.fail(GreenLineRank, index,
                     fmt::format("step {}: segment count {} vs image rank {}", order[pos - 1],
                                 counted, expected));
            break;
        }
    }

    out.evaluations[RowStructure]++;
    {
        const PathDiagram diagram(w);
        bool ok = diagram.check_row_structure();
        for (rank_t j = 0; ok && j < diagram.height(); ++j) {
            ok = diagram.row_counts(j).balance() == 0;
        }
        if (!ok) out.fail(RowStructure, index, "a row breaks the (red, blue)* pattern");
    }

    const auto moves = valid_moves(w);
    out.evaluations[RankDropIdentity]++;
    out.evaluations[AreaRecursion]++;
    out.evaluations[DinvRecursion]++;
    out.evaluations[CrossIdentities]++;
    const rank_t image_area = stats.area(image);
    for (const auto& mv : moves) {
        const auto reduced = apply_move(w, mv);
        const auto rc = region_counts(w, mv);
        if (!rank_drop_identity_holds(w, mv)) {
            out.fail(RankDropIdentity, index, fmt::format("move at column {}", mv.column));
        }
        const rank_t area_diff = image_area - stats.area(sweep(reduced));
        if (const rank_t predicted = area_recursion_delta(w, mv); predicted != area_diff) {
            out.fail(AreaRecursion, index,
                     fmt::format("move at column {}: predicted {} vs image area difference {}",
                                 mv.column, predicted, area_diff));
        }
        const rank_t dinv_diff = dinv - stats.dinv(reduced);
        if (const rank_t predicted = dinv_recursion_delta(w, mv); predicted != dinv_diff) {
            out.fail(DinvRecursion, index,
                     fmt::format("move at column {}: predicted {} vs dinv difference {}",
                                 mv.column, predicted, dinv_diff));
        }
        if (rc.red_t1 != rc.blue_t1 || rc.blue_b2 != rc.red_b2 + 1) {
            out.fail(CrossIdentities, index,
                     fmt::format("move at column {}: T1 red/blue {}/{}, B2 red/blue {}/{}",
                                 mv.column, rc.red_t1, rc.blue_t1, rc.red_b2, rc.blue_b2));
        }
    }

    out.evaluations[MoveExistence]++;
    if (area > 0 && moves.empty()) {
        out.fail(MoveExistence, index, fmt::format("area={} but no removable cell", area));
    }
    if (!moves.empty()) {
        const rank_t m = p.m();
        const auto chosen = *std::max_element(
            moves.begin(), moves.end(), [m](const RemovalMove& a, const RemovalMove& b) {
                return SweepKey{a.level + m, a.column + 1} < SweepKey{b.level + m, b.column + 1};
            });
        const auto rc = region_counts(w, chosen);
        out.chosen_moves++;
        if (rc.red_t1 + rc.blue_t1 + rc.red_t2 == 0) out.quiet_top_moves++;
    }

    out.evaluations[BaseCase]++;
    if ((area == 0) != (w == base)) {
        out.fail(BaseCase, index,
                 fmt::format("area={} but the word {} the base path", area,
                             w == base ? "is" : "is not"));
    }

    out.evaluations[DinvSweepsToArea]++;
    if (dinv != image_area) {
        out.fail(DinvSweepsToArea, index,
                 fmt::format("dinv={} but image {} has area {}", dinv, image.str(), image_area));
    }
}

}  // namespace

StatisticSet reference_statistics() {
    return {[](const StepWord& w) { return area_cells(w); },
            [](const StepWord& w) { return dinv_pairs(w); }};
}

std::optional<StatisticSet> faulty_statistics(std::string_view name) {
    if (name == "dinv-unordered") {
        auto s = reference_statistics();
        s.dinv = unordered_dinv;
        return s;
    }
    if (name == "area-strict-diagonal") {
        auto s = reference_statistics();
        s.area = strict_diagonal_area;
        return s;
    }
    return std::nullopt;
}

std::vector<std::string_view> fault_names() { return {"dinv-unordered", "area-strict-diagonal"}; }

std::vector<std::string_view> check_names() {
    return {kCheckNames.begin(), kCheckNames.end()};
}

bool VerifyReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

const CheckResult* VerifyReport::first_failure() const noexcept {
    for (const auto& c : checks) {
        if (!c.passed()) return &c;
    }
    return nullptr;
}

VerifyReport verify_all(const Params& params, const VerifyOptions& options) {
    const auto paths = enumerate_dyck(params, options.limit);
    const auto base = base_path(params);

    const unsigned jobs =
        std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(paths.size())));
    std::vector<PartialResult> partial(jobs);
    auto work = [&](unsigned part) {
        const std::size_t begin = paths.size() * part / jobs;
        const std::size_t end = paths.size() * (part + 1) / jobs;
        for (std::size_t i = begin; i < end; ++i) {
            check_path(paths[i], i, base, options.stats, partial[part]);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned part = 0; part < jobs; ++part) workers.emplace_back(work, part);
    }

    PartialResult merged;
    for (const auto& part : partial) {
        for (std::size_t c = 0; c < CheckCount; ++c) {
            merged.evaluations[c] += part.evaluations[c];
            if (part.failures[c]) {
                merged.fail(static_cast<Check>(c), part.failures[c]->index,
                            part.failures[c]->detail);
            }
        }
        merged.quiet_top_moves += part.quiet_top_moves;
        merged.chosen_moves += part.chosen_moves;
    }

    // Sweep must permute the Dyck set.
    {
        std::map<std::string, std::size_t> domain;
        for (std::size_t i = 0; i < paths.size(); ++i) domain.emplace(paths[i].str(), i);
        std::set<std::string> seen;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            merged.evaluations[Bijectivity]++;
            const auto image = sweep(paths[i]).str();
            if (!domain.contains(image)) {
                merged.fail(Bijectivity, i, fmt::format("image {} is not in the Dyck set", image));
            } else if (!seen.insert(image).second) {
                merged.fail(Bijectivity, i, fmt::format("image {} is hit twice", image));
            }
        }
    }

    // Base-case facts that do not belong to a single enumerated path.
    {
        const auto base_index = static_cast<std::size_t>(
            std::find(paths.begin(), paths.end(), base) - paths.begin());
        const rank_t top = max_stat(params);
        const auto image = sweep(base);
        std::string problem;
        if (base_index == paths.size()) {
            problem = "base path missing from the enumeration";
        } else if (options.stats.dinv(base) != top) {
            problem = fmt::format("dinv={} but max_stat={}", options.stats.dinv(base), top);
        } else if (!(image == corner_path(params))) {
            problem = fmt::format("image {} is not the corner path", image.str());
        } else if (options.stats.area(image) != top) {
            problem = fmt::format("corner path area={} but max_stat={}",
                                  options.stats.area(image), top);
        }
        if (!problem.empty()) merged.fail(BaseCase, std::min(base_index, paths.size()), problem);
    }

    VerifyReport report{params, 0, {}, 0, 0};
    report.paths = paths.size();
    report.quiet_top_moves = merged.quiet_top_moves;
    report.chosen_moves = merged.chosen_moves;
    for (std::size_t c = 0; c < CheckCount; ++c) {
        CheckResult result{std::string(kCheckNames[c]), merged.evaluations[c], std::nullopt, {}};
        if (const auto& f = merged.failures[c]) {
            result.counterexample =
                f->index < paths.size() ? paths[f->index].str() : base.str();
            result.detail = f->detail;
        }
        report.checks.push_back(std::move(result));
    }
    return report;
}

}  // namespace sweeplab
