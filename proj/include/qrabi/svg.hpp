// svg.hpp — static heatmap rendering of a swept grid
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qrabi/sweep.hpp"

namespace qrabi {

// Self-contained SVG heatmap: delta on the vertical axis, g on the horizontal,
// linear color map with a min/max legend. Output is deterministic for
// identical input. Failed grid points render as gray cells.
std::string render_heatmap(const std::vector<SweepRecord>& records,
                           std::string_view field);

}  // namespace qrabi
