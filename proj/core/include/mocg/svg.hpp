// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "mocg/scenario.hpp"
#include "mocg/trajectory.hpp"

namespace mocg {

// One frame: arena, obstacles, goal, live players, trails up to this frame, and the toggled overlays.
std::string render_svg(const Scenario& s, const TrajectoryLog& log, std::size_t frame_index);

}  // namespace mocg
