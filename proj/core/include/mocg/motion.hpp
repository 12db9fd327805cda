// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "mocg/esp.hpp"
#include "mocg/evaders.hpp"
#include "mocg/onsite.hpp"

namespace mocg {

// Moves from `from` toward `to`, stopping at the first obstacle or arena edge and sliding along it.
// `from` must be in free space; the result is too.
Vec2 clip_motion(const World& w, Vec2 from, Vec2 to, bool* clipped = nullptr);

// Position after advancing `budget` along the polyline pts[next..]; `next` is advanced past reached points.
Vec2 follow_path(const std::vector<Vec2>& pts, std::size_t& next, Vec2 P, double budget);

inline Vec2 apply_control(Vec2 P, const Control& c, double step_len) {
  return P + std::min(step_len, c.max_travel) * c.u;
}

// Heading toward the safe-distance witness, restricted to the goal-covering polygon at P.
// Throws InvalidInput when P is not goal-visible.
Control goalvis_member_control(const World& w, Vec2 P, Vec2 x_I);

}  // namespace mocg
