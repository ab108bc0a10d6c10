// sweeplab: command-line front end for the rational Dyck path library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "sweeplab/enumerate.hpp"
#include "sweeplab/error.hpp"
#include "sweeplab/render.hpp"
#include "sweeplab/statistics.hpp"
#include "sweeplab/sweep.hpp"
#include "sweeplab/verify.hpp"
#include "sweeplab/word.hpp"

namespace {

using namespace sweeplab;

enum Exit : int {
    kPass = 0,
    kCounterexample = 1,
    kInputError = 2,
    kResourceLimit = 3,
    kFlagMisuse = 4,
};

struct RunConfig {
    rank_t m = 0;
    rank_t n = 0;
    rank_t d = 1;
    std::string word;
    std::string format = "text";
    std::size_t limit = default_enumeration_limit();
    unsigned jobs = 1;
    std::string out;
    std::string style = "grid";
    std::optional<std::size_t> highlight;
    std::string fault;
};

struct FlagMisuse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Record {
    std::string word;
    rank_t area;
    rank_t dinv;
    std::string image;
};

Record make_record(const StepWord& w) {
    return {w.str(), area_cells(w), dinv_pairs(w), sweep(w).str()};
}

std::string record_jsonl(const Record& r, const Params& p) {
    nlohmann::ordered_json j;
    j["word"] = r.word;
    j["m"] = p.m();
    j["n"] = p.n();
    j["d"] = p.d();
    j["area"] = r.area;
    j["dinv"] = r.dinv;
    j["sweep"] = r.image;
    return j.dump() + "\n";
}

void require_format(const RunConfig& cfg, std::initializer_list<std::string_view> allowed,
                    std::string_view command) {
    for (auto f : allowed) {
        if (cfg.format == f) return;
    }
    throw FlagMisuse(fmt::format("--format {} is not available for {}", cfg.format, command));
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw FlagMisuse(fmt::format("cannot write {}", cfg.out));
    file << text;
}

Params params_of(const RunConfig& cfg) { return make_params(cfg.m, cfg.n, cfg.d); }

StepWord dyck_word_of(const RunConfig& cfg) {
    auto w = parse_word(cfg.word, params_of(cfg));
    require_dyck(w);
    return w;
}

int cmd_stats(const RunConfig& cfg) {
    require_format(cfg, {"text", "jsonl"}, "stats");
    const auto w = dyck_word_of(cfg);
    const auto rec = make_record(w);
    if (cfg.format == "jsonl") {
        emit(cfg, record_jsonl(rec, w.params()));
        return kPass;
    }
    const auto ranks = start_ranks(w);
    std::string ranks_text;
    for (auto r : ranks.values()) {
        ranks_text += fmt::format("{}{}", ranks_text.empty() ? "" : ",", r);
    }
    const auto image = sweep(w);
    std::string text;
    text += fmt::format("word={}\n", rec.word);
    text += fmt::format("params={}\n", w.params().to_string());
    text += fmt::format("ranks={}\n", ranks_text);
    text += fmt::format("area={}\n", rec.area);
    text += fmt::format("area_formula={}\n", area_rank_formula(w));
    text += fmt::format("dinv={}\n", rec.dinv);
    text += fmt::format("dinv_cells={}\n", dinv_cells(w));
    text += fmt::format("image={}\n", rec.image);
    text += fmt::format("image_area={}\n", area_cells(image));
    emit(cfg, text);
    return kPass;
}

std::vector<Record> records_for(const std::vector<StepWord>& paths, unsigned jobs) {
    std::vector<Record> records(paths.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(paths.size())));
    auto work = [&](unsigned part) {
        for (std::size_t i = paths.size() * part / jobs; i < paths.size() * (part + 1) / jobs; ++i) {
            records[i] = make_record(paths[i]);
        }
    };
    std::vector<std::jthread> workers;
    for (unsigned part = 1; part < jobs; ++part) workers.emplace_back(work, part);
    work(0);
    return records;
}

int cmd_enumerate(const RunConfig& cfg) {
    require_format(cfg, {"text", "csv", "jsonl"}, "enumerate");
    const auto p = params_of(cfg);
    const auto records = records_for(enumerate_dyck(p, cfg.limit), cfg.jobs);
    std::string text;
    if (cfg.format == "csv") text += "word,area,dinv,sweep\n";
    for (const auto& r : records) {
        if (cfg.format == "jsonl") {
            text += record_jsonl(r, p);
        } else if (cfg.format == "csv") {
            text += fmt::format("{},{},{},{}\n", r.word, r.area, r.dinv, r.image);
        } else {
            text += fmt::format("{} area={} dinv={} sweep={}\n", r.word, r.area, r.dinv, r.image);
        }
    }
    emit(cfg, text);
    return kPass;
}

int cmd_verify(const RunConfig& cfg) {
    require_format(cfg, {"text"}, "verify");
    const auto p = params_of(cfg);
    VerifyOptions options;
    options.limit = cfg.limit;
    options.jobs = cfg.jobs;
    if (!cfg.fault.empty()) {
        auto broken = faulty_statistics(cfg.fault);
        if (!broken) throw FlagMisuse(fmt::format("unknown fault '{}'", cfg.fault));
        options.stats = std::move(*broken);
    }
    const auto report = verify_all(p, options);

    std::string text = fmt::format("verify {}: {} paths\n", p.to_string(), report.paths);
    for (const auto& c : report.checks) {
        if (c.passed()) {
            text += fmt::format("  {:<22}PASS ({})\n", c.name, c.evaluations);
        } else {
            text += fmt::format("  {:<22}FAIL at {}: {}\n", c.name, *c.counterexample, c.detail);
        }
    }
    text += fmt::format("note: max-sweep-east moves with empty T1/T2 bands: {} of {}\n",
                        report.quiet_top_moves, report.chosen_moves);
    if (const auto* f = report.first_failure()) {
        text += fmt::format("{} checks × {} paths: FAIL (first counterexample {} in {})\n",
                            report.checks.size(), report.paths, *f->counterexample, f->name);
        emit(cfg, text);
        return kCounterexample;
    }
    text += fmt::format("{} checks × {} paths: PASS\n", report.checks.size(), report.paths);
    emit(cfg, text);
    return kPass;
}

int cmd_table(const RunConfig& cfg) {
    require_format(cfg, {"text", "csv"}, "table");
    const auto table = joint_distribution(params_of(cfg), cfg.limit, cfg.jobs);
    const char* verdict = table.marginals_equal() ? "EQUAL" : "NOT EQUAL";
    if (cfg.format == "csv") {
        emit(cfg, table.to_csv());
        std::cerr << "marginals: " << verdict << "\n";
    } else {
        emit(cfg, table.to_matrix() + fmt::format("marginals: {}\n", verdict));
    }
    return table.marginals_equal() ? kPass : kCounterexample;
}

int cmd_render(const RunConfig& cfg) {
    if (cfg.format != "text") require_format(cfg, {"svg"}, "render");
    const auto w = dyck_word_of(cfg);
    if (cfg.style == "grid") {
        if (cfg.highlight) throw FlagMisuse("--highlight needs --style diagram");
        emit(cfg, render_grid_svg(w));
        return kPass;
    }
    if (cfg.highlight && (*cfg.highlight < 1 || *cfg.highlight > w.size())) {
        throw FlagMisuse(fmt::format("--highlight {} outside 1..{}", *cfg.highlight, w.size()));
    }
    emit(cfg, render_diagram_svg(w, cfg.highlight));
    return kPass;
}

int cmd_sweep(const RunConfig& cfg) {
    require_format(cfg, {"text"}, "sweep");
    emit(cfg, sweep(dyck_word_of(cfg)).str() + "\n");
    return kPass;
}

int cmd_unsweep(const RunConfig& cfg) {
    require_format(cfg, {"text"}, "unsweep");
    emit(cfg, unsweep(dyck_word_of(cfg), cfg.limit).str() + "\n");
    return kPass;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::LimitExceeded: return kResourceLimit;
        case ErrorCode::IndexOutOfRange: return kFlagMisuse;
        case ErrorCode::NotInImage:
        case ErrorCode::NonIntegral:
        case ErrorCode::NoMoveAvailable: return kCounterexample;
        default: return kInputError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational Dyck paths: sweep map, area and dinv"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_word) {
        sub->add_option("--m", cfg.m, "North-step rank gain")->required();
        sub->add_option("--n", cfg.n, "East-step rank drop")->required();
        sub->add_option("--d", cfg.d, "dilation factor")->capture_default_str();
        sub->add_option("--format", cfg.format, "text | csv | jsonl | svg")
            ->check(CLI::IsMember({"text", "csv", "jsonl", "svg"}));
        sub->add_option("--limit", cfg.limit, "enumeration cap on dm+dn (env SWEEPLAB_LIMIT)")
            ->capture_default_str();
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out, "write output to a file");
        if (needs_word) sub->add_option("word", cfg.word, "path word over {N,E}")->required();
    };

    auto* stats = app.add_subcommand("stats", "ranks, area, dinv and sweep image of one path");
    add_common(stats, true);
    auto* enumerate = app.add_subcommand("enumerate", "list every Dyck path with its statistics");
    add_common(enumerate, false);
    auto* verify = app.add_subcommand("verify", "check every identity over the full enumeration");
    add_common(verify, false);
    verify->add_option("--fault", cfg.fault)->group("");
    auto* table = app.add_subcommand("table", "joint (area, dinv) distribution");
    add_common(table, false);
    auto* render = app.add_subcommand("render", "SVG picture of a path");
    add_common(render, true);
    render->add_option("--style", cfg.style, "grid | diagram")
        ->check(CLI::IsMember({"grid", "diagram"}));
    render->add_option("--highlight", cfg.highlight, "step whose sweep line is drawn");
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep image of a path");
    add_common(sweep_cmd, true);
    auto* unsweep_cmd = app.add_subcommand("unsweep", "Dyck preimage of a path under sweep");
    add_common(unsweep_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kFlagMisuse;
    }

    try {
        if (*stats) return cmd_stats(cfg);
        if (*enumerate) return cmd_enumerate(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*table) return cmd_table(cfg);
        if (*render) return cmd_render(cfg);
        if (*sweep_cmd) return cmd_sweep(cfg);
        if (*unsweep_cmd) return cmd_unsweep(cfg);
    } catch (const FlagMisuse& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFlagMisuse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kFlagMisuse;
}
