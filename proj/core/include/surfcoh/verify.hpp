#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surfcoh/conv.hpp"

namespace surfcoh {

// One-command consistency suite: every cross-check tying the engine to its
// reference values and to itself.  Failures are data, not exceptions.

struct CheckReport {
  std::string name;
  bool passed = false;
  std::string detail;  // first mismatching degree/value on failure
};

enum class Selection { All, Rep, Stack, K0 };

inline constexpr std::uint64_t kDefaultSeed = 42;

struct SuiteOptions {
  Selection selection = Selection::All;
  std::uint64_t seed = kDefaultSeed;
  // Reference tables by default; tests inject corrupted tables here to
  // demonstrate that the suite catches them.
  FunctorTables tables;
};

// Runs the selected checks in a fixed order and returns one report per
// check.  Deterministic for a fixed seed.
std::vector<CheckReport> run_suite(const SuiteOptions& options = {});

bool all_passed(const std::vector<CheckReport>& reports);

std::string selection_name(Selection s);

}  // namespace surfcoh
