#pragma once

#include <string>

#include "tt/coords_oracle.hpp"
#include "tt/generator.hpp"

namespace tt {

// Standalone SVG (1000x600 viewBox) of the scene: both circles, the common
// tangent T1T2, the line of centers out to K, and the labeled points. When a
// fully integral configuration is given its integer lengths are annotated.
std::string render_svg(const Scene& scene, const FullConfig* config = nullptr);

}  // namespace tt
