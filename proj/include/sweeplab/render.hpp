#ifndef SWEEPLAB_RENDER_HPP
#define SWEEPLAB_RENDER_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "sweeplab/word.hpp"

namespace sweeplab {

enum class RenderStyle { Grid, Diagram };

/// Lattice view: grid, diagonal, the path, and its dinv cells marked.
std::string render_grid_svg(const StepWord& word);

/// Stretched view: one arrow per column with circled start levels. With
/// `highlight`, the sweep line through that step's start is drawn.
std::string render_diagram_svg(const StepWord& word,
                               std::optional<std::size_t> highlight = std::nullopt);

}  // namespace sweeplab

#endif  // SWEEPLAB_RENDER_HPP
