#pragma once
// CR diagram rendering: human axis vertical, autonomous axis horizontal,
// requirement line and capability spaces marked, chosen point as a filled
// dot. ASCII uses one character cell per grid point; SVG is a single-root
// well-formed document.

#include <optional>
#include <string>

#include "capdelta/cr_solver.hpp"

namespace capdelta {

enum class DiagramFormat { Ascii, Svg };

std::string render_cr_diagram(int requirement, AggregationKind kind, int cap_auto, int cap_human,
                              std::optional<ControlDistribution> chosen, DiagramFormat format,
                              QuantScale scale = {});

} // namespace capdelta
