// Copyright 2026 The mocg Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mocg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coincident points, zero-length directions and similar.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class Unreachable : public Error {
 public:
  using Error::Error;
};

class SolverFailure : public Error {
 public:
  using Error::Error;
};

// Pursuer sits inside its own expanded Apollonius disk.
class RegionDegenerate : public Error {
 public:
  using Error::Error;
};

class SimulationFault : public Error {
 public:
  using Error::Error;
};

// Scenario parse/validation failure, carries the 1-based source line (0 = unknown).
class ScenarioError : public Error {
 public:
  ScenarioError(const std::string& msg, int line) : Error(msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace mocg
