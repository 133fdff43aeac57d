#pragma once

#include <string>
#include <vector>

#include "atxxz/sweep.hpp"

namespace atxxz {

struct FigurePreset {
  std::string name;
  std::string description;
  std::vector<SweepSpec> specs;
};

std::vector<std::string> figure_names();

/// Frozen sweep definitions behind each figure. Default sizes stay at or
/// below 16 spins; full=true raises the largest chain to 20 spins.
/// Throws ArgumentError for an unknown name.
FigurePreset figure_preset(const std::string& name, bool full = false);

/// Same preset on a 3-point grid with chains capped at 8 spins, for
/// golden-file tests.
FigurePreset reduced_preset(const FigurePreset& preset);

SweepResult run_figure(const FigurePreset& preset, int threads = 1);

}  // namespace atxxz
