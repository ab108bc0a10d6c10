// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
// usage: acceptance <path-to-sweeplab-cli> <golden-dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "sweeplab/diagram.hpp"
#include "sweeplab/enumerate.hpp"
#include "sweeplab/error.hpp"
#include "sweeplab/recursion.hpp"
#include "sweeplab/statistics.hpp"
#include "sweeplab/sweep.hpp"
#include "sweeplab/verify.hpp"

using namespace sweeplab;

namespace {

const std::vector<std::tuple<rank_t, rank_t, rank_t>> kSets = {
    {3, 2, 1}, {5, 2, 1}, {5, 3, 1}, {7, 4, 1}, {7, 5, 1},
    {8, 5, 1}, {1, 1, 2}, {2, 1, 2}, {3, 2, 2}, {2, 1, 3},
};

constexpr double kMainTheoremBudgetSeconds = 10.0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(std::string why) {
        if (pass) detail = std::move(why);
        pass = false;
    }
};

struct Corpus {
    Params params;
    std::vector<StepWord> paths;
};

std::vector<Corpus> load_corpus() {
    std::vector<Corpus> out;
    for (auto [m, n, d] : kSets) {
        const auto p = make_params(m, n, d);
        out.push_back({p, enumerate_dyck(p)});
    }
    return out;
}

std::string where(const Params& p, const StepWord& w) {
    return fmt::format("{} at {}", w.str(), p.to_string());
}

Outcome main_theorem(const std::vector<Corpus>& corpus) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    for (const auto& c : corpus) {
        for (const auto& w : c.paths) {
            ++checked;
            if (dinv_pairs(w) != area_cells(sweep(w))) o.fail(where(c.params, w));
        }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed.count() >= kMainTheoremBudgetSeconds) {
        o.fail(fmt::format("took {:.3f}s", elapsed.count()));
    }
    if (o.pass) o.detail = fmt::format("{} paths in {:.3f}s", checked, elapsed.count());
    return o;
}

Outcome bijectivity(const std::vector<Corpus>& corpus) {
    Outcome o;
    for (const auto& c : corpus) {
        std::multiset<std::string> image;
        std::set<std::string> domain;
        for (const auto& w : c.paths) {
            domain.insert(w.str());
            image.insert(sweep(w).str());
        }
        if (std::multiset<std::string>(domain.begin(), domain.end()) != image) {
            o.fail(fmt::format("image multiset differs from the Dyck set at {}", c.params.to_string()));
        }
    }
    return o;
}

Outcome area_formula(const std::vector<Corpus>& corpus) {
    Outcome o;
    for (const auto& c : corpus) {
        for (const auto& w : c.paths) {
            try {
                if (area_cells(w) != area_rank_formula(w)) o.fail(where(c.params, w));
            } catch (const Error& e) {
                o.fail(fmt::format("{}: {}", where(c.params, w), e.what()));
            }
        }
    }
    return o;
}

Outcome dinv_two_ways(const std::vector<Corpus>& corpus) {
    Outcome o;
    for (const auto& c : corpus) {
        for (const auto& w : c.paths) {
            if (dinv_cells(w) != dinv_pairs(w)) o.fail(where(c.params, w));
        }
    }
    return o;
}

Outcome green_line(const std::vector<Corpus>& corpus) {
    Outcome o;
    for (const auto& c : corpus) {
        for (const auto& w : c.paths) {
            const auto order = sweep_order(w);
            for (std::size_t pos = 1; pos <= w.size(); ++pos) {
                const rank_t image = image_start_rank(w, pos);
                if (green_line_rank(w, order[pos - 1]) != image) {
                    o.fail(fmt::format("{} step {}", where(c.params, w), order[pos - 1]));
                }
                if (image < 0) o.fail(fmt::format("{}: negative image rank", where(c.params, w)));
            }
        }
    }
    return o;
}

Outcome diagram_structure(const std::vector<Corpus>& corpus) {
    Outcome o;
    for (const auto& c : corpus) {
        for (const auto& w : c.paths) {
            const PathDiagram d(w);
            bool ok = d.check_row_structure();
            for (rank_t j = 0; j < d.height(); ++j) ok = ok && d.row_counts(j).balance() == 0;
            if (!ok) o.fail(where(c.params, w));
        }
    }
    return o;
}

Outcome recursions(const std::vector<Corpus>& corpus) {
    Outcome o;
    std::size_t moves = 0;
    for (const auto& c : corpus) {
        for (const auto& w : c.paths) {
            for (const auto& mv : valid_moves(w)) {
                ++moves;
                const auto reduced = apply_move(w, mv);
                const auto rc = region_counts(w, mv);
                const auto tag = fmt::format("{} move {}", where(c.params, w), mv.column);
                if (area_recursion_delta(w, mv) != area_cells(sweep(w)) - area_cells(sweep(reduced))) {
                    o.fail(tag + ": area recursion");
                }
                if (dinv_recursion_delta(w, mv) != dinv_pairs(w) - dinv_pairs(reduced)) {
                    o.fail(tag + ": dinv recursion");
                }
                if (!rank_drop_identity_holds(w, mv)) o.fail(tag + ": rank drop identity");
                if (rc.red_t1 != rc.blue_t1 || rc.blue_b2 != rc.red_b2 + 1) {
                    o.fail(tag + ": cross identities");
                }
            }
        }
    }
    if (o.pass) o.detail = fmt::format("{} moves", moves);
    return o;
}

Outcome base_case(const std::vector<Corpus>& corpus) {
    Outcome o;
    for (const auto& c : corpus) {
        const auto base = base_path(c.params);
        const auto top = max_stat(c.params);
        const auto dm = c.params.east_count();
        const auto dn = c.params.north_count();
        if (top * 2 != (dm - 1) * (dn - 1) + c.params.d() - 1) o.fail("max_stat not integral");
        std::size_t flat = 0;
        for (const auto& w : c.paths) {
            if (area_cells(w) == 0) {
                ++flat;
                if (!(w == base)) o.fail(where(c.params, w) + ": unexpected area-0 path");
            }
        }
        if (flat != 1) o.fail(fmt::format("{} area-0 paths at {}", flat, c.params.to_string()));
        if (dinv_pairs(base) != top) o.fail(where(c.params, base) + ": dinv");
        if (!(sweep(base) == corner_path(c.params))) o.fail(where(c.params, base) + ": image");
        if (area_cells(corner_path(c.params)) != top) o.fail("corner path area");
    }
    if (max_stat(make_params(3, 2, 1)) != 1 || max_stat(make_params(7, 5, 1)) != 12 ||
        max_stat(make_params(1, 1, 2)) != 1) {
        o.fail("spot values");
    }
    return o;
}

Outcome counting(const std::vector<Corpus>& corpus) {
    Outcome o;
    for (const auto& c : corpus) {
        if (count_dyck(c.params) != c.paths.size()) {
            o.fail(fmt::format("count {} vs {} enumerated at {}", count_dyck(c.params).str(),
                               c.paths.size(), c.params.to_string()));
        }
    }
    if (count_dyck(make_params(3, 2, 1)) != 2 || count_dyck(make_params(5, 2, 1)) != 3 ||
        count_dyck(make_params(7, 5, 1)) != 66) {
        o.fail("spot values");
    }
    return o;
}

Outcome reduction_chains(const std::vector<Corpus>& corpus) {
    Outcome o;
    for (const auto& c : corpus) {
        for (const auto& w : c.paths) {
            for (auto strategy : {ReductionStrategy::FirstValid, ReductionStrategy::MaxSweepEast}) {
                try {
                    const auto chain = reduce_to_base(w, strategy);
                    if (chain.size() != static_cast<std::size_t>(area_cells(w))) {
                        o.fail(where(c.params, w) + ": chain length");
                    }
                    auto current = w;
                    for (const auto& mv : chain) {
                        const auto next = apply_move(current, mv);
                        if (area_cells(current) - area_cells(next) != 1) {
                            o.fail(where(c.params, w) + ": step size");
                        }
                        current = next;
                    }
                    if (!(current == base_path(c.params))) o.fail(where(c.params, w) + ": end");
                } catch (const Error& e) {
                    o.fail(fmt::format("{}: {}", where(c.params, w), e.what()));
                }
            }
        }
    }
    return o;
}

Outcome distribution(const std::vector<Corpus>& corpus) {
    Outcome o;
    for (const auto& c : corpus) {
        if (!joint_distribution(c.params).marginals_equal()) {
            o.fail(fmt::format("marginals differ at {}", c.params.to_string()));
        }
    }
    const std::map<StatTable::Key, std::uint64_t> expected{{{1, 0}, 1}, {{0, 1}, 1}};
    if (joint_distribution(make_params(3, 2, 1)).counts() != expected) o.fail("(3,2,1) table");
    return o;
}

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& command) {
    Run r{-1, {}};
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli(const std::string& exe, const std::filesystem::path& golden) {
    Outcome o;
    const std::string base = exe + " ";
    const std::vector<std::pair<std::string, std::string>> goldens = {
        {"stats --m 3 --n 2 --d 1 NENEE", "stats_NENEE.txt"},
        {"stats --m 3 --n 2 --d 1 NNEEE", "stats_NNEEE.txt"},
        {"enumerate --m 3 --n 2 --d 1", "enumerate_3_2_1.txt"},
        {"enumerate --m 3 --n 2 --d 1 --format jsonl", "enumerate_3_2_1.jsonl"},
        {"enumerate --m 3 --n 2 --d 1 --format csv", "enumerate_3_2_1.csv"},
        {"table --m 3 --n 2 --d 1", "table_3_2_1.txt"},
        {"table --m 3 --n 2 --d 1 --format csv", "table_3_2_1.csv"},
        {"render --m 3 --n 2 --d 1 --style grid NENEE", "render_grid_NENEE.svg"},
        {"render --m 3 --n 2 --d 1 --style diagram --highlight 3 NENEE",
         "render_diagram_NENEE_h3.svg"},
        {"render --m 3 --n 2 --d 1 --style diagram NNEEE", "render_diagram_NNEEE.svg"},
    };
    for (const auto& [args, file] : goldens) {
        const auto r = run(base + args);
        if (r.status != 0) o.fail(fmt::format("'{}' exited {}", args, r.status));
        else if (r.out != slurp(golden / file)) o.fail(fmt::format("'{}' differs from {}", args, file));
    }
    for (auto [m, n, d] : kSets) {
        const auto args = fmt::format("verify --m {} --n {} --d {}", m, n, d);
        if (const auto r = run(base + args); r.status != 0) {
            o.fail(fmt::format("'{}' exited {}", args, r.status));
        }
    }
    {
        const auto r = run(base + "verify --m 3 --n 2 --d 1 --jobs 2");
        if (r.out.find("13 checks × 2 paths: PASS") == std::string::npos) o.fail("verify summary line");
    }
    for (auto fault : fault_names()) {
        const auto args = fmt::format("verify --m 3 --n 2 --d 2 --fault {}", fault);
        const auto r = run(base + args);
        if (r.status != 1 || r.out.find("FAIL (first counterexample ") == std::string::npos) {
            o.fail(fmt::format("'{}' exited {} without naming a counterexample", args, r.status));
        }
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <sweeplab-cli> <golden-dir>\n";
        return 2;
    }
    const auto corpus = load_corpus();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1  dinv sweeps to area", [&] { return main_theorem(corpus); }},
        {"AC2  sweep is a bijection", [&] { return bijectivity(corpus); }},
        {"AC3  area from south-end ranks", [&] { return area_formula(corpus); }},
        {"AC4  dinv by cells = dinv by pairs", [&] { return dinv_two_ways(corpus); }},
        {"AC5  green-line segment count rank", [&] { return green_line(corpus); }},
        {"AC6  zero row count and alternation", [&] { return diagram_structure(corpus); }},
        {"AC7  area/dinv recursions and cross identities", [&] { return recursions(corpus); }},
        {"AC8  base case", [&] { return base_case(corpus); }},
        {"AC9  counting", [&] { return counting(corpus); }},
        {"AC10 reduction chains", [&] { return reduction_chains(corpus); }},
        {"AC11 joint distribution marginals", [&] { return distribution(corpus); }},
        {"AC12 CLI goldens, verify exit codes, mutation", [&] { return cli(argv[1], argv[2]); }},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const auto o = check();
        failures += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name
                  << (o.detail.empty() ? "" : "  (" + o.detail + ")") << "\n";
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
