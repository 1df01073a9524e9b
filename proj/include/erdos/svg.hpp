#pragma once

#include <string>

#include "erdos/bush.hpp"

namespace erdos {

// Static diagram of the bush L_Y(G) against the target rectangle: strips per
// (pattern point, base interval), base intervals on the a-axis, uncovered
// cells highlighted. Byte-deterministic for fixed inputs.
void render_svg(const Pattern& pattern, const IntervalSet& set, const Rect& rect,
                const CoverageReport* report, const std::string& path);

}  // namespace erdos
