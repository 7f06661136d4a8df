#pragma once
// Deterministic SVG 1.1 snapshot of a fiber arrangement: net lines in grey,
// the diagonal dashed, the divided-difference curve in red via marching
// squares. Byte-identical output for identical input.

#include <string>

#include "morsekit/fiber.hpp"

namespace morsekit {

std::string render_arrangement_svg(const FiberArrangement& arr,
                                   int curve_resolution = 256);

}  // namespace morsekit
