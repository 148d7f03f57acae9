#pragma once

#include <string>

#include "cutlocus/scheme.hpp"

namespace cutlocus {

enum class RenderFormat { Text, Dot, Svg };

// Graph drawing of a scheme: vertex disks on a circle in id order, each edge
// labelled "x" when switched and "=" otherwise. Crossings are not avoided.
std::string render(const Scheme& s, RenderFormat format, const std::string& name = "");

}  // namespace cutlocus
