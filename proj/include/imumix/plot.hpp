#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "imumix/dro.hpp"

namespace imumix {

// Renders the per-step mixture weights as a line chart. Self-contained SVG,
// deterministic output; long trajectories are downsampled for plotting only.
void write_trajectory_svg(const std::filesystem::path& path, const WeightTrajectory& traj,
                          const std::vector<std::string>& domain_names);

}  // namespace imumix
