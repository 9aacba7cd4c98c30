#pragma once

#include <string>

#include "dehn/seminorm.hpp"

namespace dehn {

// Draws the fundamental ball into a square viewport of +/-`viewport` lattice
// units (bands are clipped to it).
std::string ball_to_svg(const BallGeometry& ball, double viewport = 10.0);

}  // namespace dehn
