#pragma once

#include <string>

#include "hawkes/verify.hpp"

namespace hawkes::cli {

// Self-contained SVG (no external assets): log of the empirical MGF with its
// confidence band against the log of the theoretical bound, over the u grid.
std::string render_bound_svg(const BoundReport& report);

}  // namespace hawkes::cli
