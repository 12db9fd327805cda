// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "mocg/scenario.hpp"

namespace mocg {

// Parses and validates a YAML scenario document. Throws ScenarioError carrying the source line.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

// YAML text that parses back to an equal Scenario.
std::string dump_scenario(const Scenario& s);

}  // namespace mocg
