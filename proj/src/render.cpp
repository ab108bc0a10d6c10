#include "sweeplab/render.hpp"

#include <fmt/format.h>

#include "sweeplab/diagram.hpp"
#include "sweeplab/error.hpp"
#include "sweeplab/statistics.hpp"

namespace sweeplab {

namespace {

constexpr rank_t kCell = 40;       // grid cell edge, px
constexpr rank_t kColumn = 40;     // diagram column width, px
constexpr rank_t kRow = 16;        // diagram row height, px
constexpr rank_t kMargin = 20;
constexpr rank_t kLabelGutter = 40;  // room for level labels left of the diagram
constexpr rank_t kLetterBand = 24;   // room for step letters under the diagram
constexpr rank_t kLineRise = 2;      // px per column for the slope-epsilon line

constexpr const char* kRed = "#d62728";
constexpr const char* kBlue = "#1f77b4";
constexpr const char* kGreen = "#2ca02c";

std::string open_svg(rank_t width, rank_t height) {
    return fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\">\n"
        "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n",
        width, height);
}

std::string arrow_markers() {
    return fmt::format(
        "<defs>\n"
        "<marker id=\"head-red\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" "
        "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"{0}\"/></marker>\n"
        "<marker id=\"head-blue\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" "
        "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"{1}\"/></marker>\n"
        "</defs>\n",
        kRed, kBlue);
}

}  // namespace

std::string render_grid_svg(const StepWord& word) {
    require_dyck(word);
    const auto& p = word.params();
    const rank_t cols = p.east_count();
    const rank_t rows = p.north_count();
    const rank_t width = cols * kCell + 2 * kMargin;
    const rank_t height = rows * kCell + 2 * kMargin;
    auto px = [&](rank_t x) { return kMargin + x * kCell; };
    auto py = [&](rank_t y) { return kMargin + (rows - y) * kCell; };

    std::string out = open_svg(width, height);
    out += fmt::format("<!-- {} {} area={} dinv={} -->\n", word.str(), p.to_string(),
                       area_cells(word), dinv_pairs(word));

    for (const auto& c : dinv_cell_list(word)) {
        out += fmt::format(
            "<rect class=\"dinv-cell\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" "
            "fill=\"{}\" fill-opacity=\"0.45\"/>\n",
            px(c.x), py(c.y + 1), kCell, kCell, kGreen);
        out += fmt::format(
            "<text x=\"{}\" y=\"{}\" font-size=\"16\" text-anchor=\"middle\">*</text>\n",
            px(c.x) + kCell / 2, py(c.y) - kCell / 2 + 6);
    }

    out += "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    for (rank_t x = 0; x <= cols; ++x) {
        out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n", px(x), py(0),
                           py(rows));
    }
    for (rank_t y = 0; y <= rows; ++y) {
        out += fmt::format("<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\"/>\n", py(y), px(0),
                           px(cols));
    }
    out += "</g>\n";
    out += fmt::format(
        "<line class=\"diagonal\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#777777\" "
        "stroke-dasharray=\"6,4\"/>\n",
        px(0), py(0), px(cols), py(rows));

    out += "<polyline class=\"path\" fill=\"none\" stroke=\"black\" stroke-width=\"3\" points=\"";
    rank_t x = 0;
    rank_t y = 0;
    out += fmt::format("{},{}", px(x), py(y));
    for (auto s : word.steps()) {
        if (s == Step::North) {
            ++y;
        } else {
            ++x;
        }
        out += fmt::format(" {},{}", px(x), py(y));
    }
    out += "\"/>\n</svg>\n";
    return out;
}

std::string render_diagram_svg(const StepWord& word, std::optional<std::size_t> highlight) {
    require_dyck(word);
    if (highlight && (*highlight < 1 || *highlight > word.size())) {
        throw Error(ErrorCode::IndexOutOfRange,
                    fmt::format("highlight step {} outside 1..{}", *highlight, word.size()));
    }
    const auto& p = word.params();
    const PathDiagram diagram(word);
    const auto cols = static_cast<rank_t>(word.size());
    const rank_t levels = diagram.height();
    const rank_t left = kMargin + kLabelGutter;
    const rank_t width = left + cols * kColumn + kMargin;
    const rank_t height = kMargin + levels * kRow + kLetterBand + kMargin;
    auto px = [&](rank_t x) { return left + x * kColumn; };
    auto py = [&](rank_t level) { return kMargin + (levels - level) * kRow; };

    std::string out = open_svg(width, height);
    out += fmt::format("<!-- {} {} diagram -->\n", word.str(), p.to_string());
    out += arrow_markers();

    out += "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (rank_t level = 0; level <= levels; ++level) {
        out += fmt::format("<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\"/>\n", py(level),
                           px(0), px(cols));
    }
    for (rank_t x = 0; x <= cols; ++x) {
        out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n", px(x),
                           py(0), py(levels));
    }
    out += "</g>\n";
    out += "<g font-size=\"10\" text-anchor=\"end\">\n";
    for (rank_t level = 0; level <= levels; ++level) {
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", left - 6, py(level) + 3, level);
    }
    out += "</g>\n";

    for (const auto& a : diagram.arrows()) {
        const bool red = a.color == Color::Red;
        const auto x0 = static_cast<rank_t>(a.column) - 1;
        out += fmt::format(
            "<line class=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" "
            "stroke-width=\"2\" marker-end=\"url(#head-{})\"/>\n",
            red ? "arrow-up" : "arrow-down", px(x0), py(a.start_rank), px(x0 + 1),
            py(a.end_rank(p)), red ? kRed : kBlue, red ? "red" : "blue");
        out += fmt::format(
            "<circle class=\"start\" cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"none\" stroke=\"black\"/>\n",
            px(x0), py(a.start_rank));
        out += fmt::format(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
            px(x0) + kColumn / 2 + (red ? -8 : 8),
            (py(a.start_rank) + py(a.end_rank(p))) / 2, red ? "+" : "-");
        out += fmt::format(
            "<text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
            px(x0) + kColumn / 2, py(0) + kLetterBand - 6, red ? 'N' : 'E');
    }

    if (highlight) {
        const rank_t level = diagram.arrow(*highlight).start_rank;
        const auto pivot = static_cast<rank_t>(*highlight) - 1;
        const rank_t y_left = py(level) + kLineRise * pivot;
        const rank_t y_right = py(level) - kLineRise * (cols - pivot);
        out += fmt::format(
            "<line class=\"sweep-line\" data-level=\"{}\" data-column=\"{}\" x1=\"{}\" y1=\"{}\" "
            "x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"3\"/>\n",
            level, *highlight, px(0), y_left, px(cols), y_right, kGreen);
    }
    out += "</svg>\n";
    return out;
}

}  // namespace sweeplab
