// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mocg/esp.hpp"
#include "mocg/geometry.hpp"

namespace mocg::testing {

inline Polygon rect(double x0, double y0, double x1, double y1) {
  return make_polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

inline Polygon arena10() { return rect(0, 0, 10, 10); }
inline Polygon goal_sq() { return rect(4, 4, 6, 6); }
inline Polygon o1() { return rect(2, 2, 3, 3); }
inline Polygon o2() { return rect(4, 6.5, 6, 7.5); }

inline World open_world() { return World{arena10(), {}, goal_sq()}; }
inline World world_o1() { return World{arena10(), {o1()}, goal_sq()}; }
inline World world_f2() { return World{arena10(), {o2()}, goal_sq()}; }
inline World world_both() { return World{arena10(), {o1(), o2()}, goal_sq()}; }

}  // namespace mocg::testing
