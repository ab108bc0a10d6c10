#include "sweeplab/statistics.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "sweeplab/error.hpp"

namespace sweeplab {

namespace {

// Column of the k-th (1-based) occurrence of `letter`, 1-based.
std::vector<std::size_t> positions_of(const StepWord& word, Step letter) {
    std::vector<std::size_t> out;
    for (std::size_t c = 1; c <= word.size(); ++c) {
        if (word.at(c) == letter) out.push_back(c);
    }
    return out;
}

// For each East step x (0-based), the number of North steps before it.
std::vector<rank_t> heights_before_east(const StepWord& word) {
    std::vector<rank_t> out;
    rank_t north = 0;
    for (auto s : word.steps()) {
        if (s == Step::North) {
            ++north;
        } else {
            out.push_back(north);
        }
    }
    return out;
}

// For each North step y (0-based), the number of East steps before it.
std::vector<rank_t> widths_before_north(const StepWord& word) {
    std::vector<rank_t> out;
    rank_t east = 0;
    for (auto s : word.steps()) {
        if (s == Step::East) {
            ++east;
        } else {
            out.push_back(east);
        }
    }
    return out;
}

}  // namespace

bool cell_above_path(const StepWord& word, Cell c) {
    const auto east = positions_of(word, Step::East);
    const auto north = positions_of(word, Step::North);
    return east.at(static_cast<std::size_t>(c.x)) < north.at(static_cast<std::size_t>(c.y));
}

bool cell_weakly_above_diagonal(const Params& p, Cell c) {
    return p.m() * c.y - p.n() * (c.x + 1) >= 0;
}

rank_t area_cells(const StepWord& word) {
    require_dyck(word);
    const auto& p = word.params();
    const auto east = positions_of(word, Step::East);
    const auto north = positions_of(word, Step::North);
    rank_t area = 0;
    for (rank_t x = 0; x < p.east_count(); ++x) {
        for (rank_t y = 0; y < p.north_count(); ++y) {
            const bool above = east[static_cast<std::size_t>(x)] < north[static_cast<std::size_t>(y)];
            if (!above && cell_weakly_above_diagonal(p, {x, y})) ++area;
        }
    }
    return area;
}

rank_t area_rank_formula(const StepWord& word) {
    const auto& p = word.params();
    rank_t sum = 0;
    for (auto r : south_end_ranks(word)) sum += r;
    const rank_t numerator = sum - p.d() * p.n() * (p.n() - 1) / 2;
    if (numerator % p.n() != 0) {
        throw Error(ErrorCode::NonIntegral,
                    fmt::format("south-end rank sum {} of {} gives a non-integral area", sum,
                                word.str()));
    }
    return numerator / p.n();
}

rank_t lpr(rank_t row, const Params& params) {
    if (row < 0 || row >= params.north_count()) {
        throw Error(ErrorCode::RowOutOfRange,
                    fmt::format("grid row {} outside 0..{}", row, params.north_count() - 1));
    }
    return params.m() * row % params.n();
}

rank_t dinv_pairs(const StepWord& word) {
    require_dyck(word);
    const auto& p = word.params();
    const auto ranks = start_ranks(word);
    rank_t dinv = 0;
    for (std::size_t i = 1; i <= word.size(); ++i) {
        if (word.at(i) != Step::East) continue;
        const rank_t a = ranks.at(i);
        for (std::size_t j = i + 1; j <= word.size(); ++j) {
            if (word.at(j) != Step::North) continue;
            const rank_t diff = a - ranks.at(j);
            if (0 <= diff && diff < p.m() + p.n()) ++dinv;
        }
    }
    return dinv;
}

std::vector<Cell> dinv_cell_list(const StepWord& word) {
    require_dyck(word);
    const auto& p = word.params();
    const auto east = positions_of(word, Step::East);
    const auto north = positions_of(word, Step::North);
    const auto h = heights_before_east(word);
    const auto v = widths_before_north(word);
    std::vector<Cell> cells;
    for (rank_t x = 0; x < p.east_count(); ++x) {
        const auto xi = static_cast<std::size_t>(x);
        for (rank_t y = 0; y < p.north_count(); ++y) {
            const auto yi = static_cast<std::size_t>(y);
            if (east[xi] > north[yi]) continue;
            // West end of the East step under the cell is (x, h[x]); south
            // end of the North step right of it is (v[y], y).
            const rank_t a = p.m() * h[xi] - p.n() * x;
            const rank_t b = p.m() * y - p.n() * v[yi];
            if (0 <= a - b && a - b < p.m() + p.n()) cells.push_back({x, y});
        }
    }
    return cells;
}

rank_t dinv_cells(const StepWord& word) {
    return static_cast<rank_t>(dinv_cell_list(word).size());
}

rank_t max_stat(const Params& params) {
    const rank_t dm = params.east_count();
    const rank_t dn = params.north_count();
    return ((dm - 1) * (dn - 1) + params.d() - 1) / 2;
}

void StatTable::add(rank_t area, rank_t dinv, std::uint64_t count) {
    counts_[{area, dinv}] += count;
}

void StatTable::merge(const StatTable& other) {
    for (const auto& [key, count] : other.counts_) counts_[key] += count;
}

std::uint64_t StatTable::total() const noexcept {
    std::uint64_t sum = 0;
    for (const auto& [key, count] : counts_) sum += count;
    return sum;
}

std::map<rank_t, std::uint64_t> StatTable::area_marginal() const {
    std::map<rank_t, std::uint64_t> out;
    for (const auto& [key, count] : counts_) out[key.first] += count;
    return out;
}

std::map<rank_t, std::uint64_t> StatTable::dinv_marginal() const {
    std::map<rank_t, std::uint64_t> out;
    for (const auto& [key, count] : counts_) out[key.second] += count;
    return out;
}

std::string StatTable::to_csv() const {
    std::vector<std::pair<Key, std::uint64_t>> rows(counts_.begin(), counts_.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
    });
    std::string out = "area,dinv,count\n";
    for (const auto& [key, count] : rows) {
        out += fmt::format("{},{},{}\n", key.first, key.second, count);
    }
    return out;
}

std::string StatTable::to_matrix() const {
    const rank_t top = max_stat(params_);
    std::string out = "area\\dinv";
    for (rank_t d = 0; d <= top; ++d) out += fmt::format(" {}", d);
    out += '\n';
    for (rank_t a = 0; a <= top; ++a) {
        out += fmt::format("{}", a);
        for (rank_t d = 0; d <= top; ++d) {
            auto it = counts_.find({a, d});
            out += fmt::format(" {}", it == counts_.end() ? 0 : it->second);
        }
        out += '\n';
    }
    return out;
}

StatTable joint_distribution(const Params& params, std::size_t limit, unsigned jobs) {
    const auto paths = enumerate_dyck(params, limit);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(paths.size())));
    std::vector<StatTable> partial(jobs, StatTable(params));
    auto work = [&](unsigned part) {
        const std::size_t begin = paths.size() * part / jobs;
        const std::size_t end = paths.size() * (part + 1) / jobs;
        for (std::size_t i = begin; i < end; ++i) {
            partial[part].add(area_cells(paths[i]), dinv_pairs(paths[i]));
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned part = 0; part < jobs; ++part) workers.emplace_back(work, part);
    }
    StatTable table(params);
    for (const auto& t : partial) table.merge(t);
    return table;
}

}  // namespace sweeplab
