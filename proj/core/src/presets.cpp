#include "atxxz/presets.hpp"

#include <algorithm>

#include "atxxz/errors.hpp"

namespace atxxz {

namespace {

constexpr double kStep = 0.025;

// Half-open sweep ranges: stop sits one step past the last sample.
SweepSpec at_sweep(int spins, SweepAxis axis, double first, double last, double fixed,
                   std::vector<std::string> quantities, std::string block) {
  SweepSpec s;
  s.params = ModelParams{Model::AshkinTeller, spins / 2, 1.0, 1.0, 1.0};
  s.axis = axis;
  if (axis == SweepAxis::Delta) {
    s.params.beta = fixed;
  } else {
    s.params.delta = fixed;
  }
  s.start = first;
  s.stop = last + kStep;
  s.step = kStep;
  s.quantities = std::move(quantities);
  s.block = std::move(block);
  return s;
}

const std::vector<double> kStaggerings{0.5, 0.75, 1.0, 1.25, 1.75};

}  // namespace

std::vector<std::string> figure_names() {
  return {"fig3", "fig4", "fig6", "fig7", "fig8", "fig9", "fig10"};
}

FigurePreset figure_preset(const std::string& name, bool full) {
  const int big = full ? 20 : 16;
  FigurePreset f;
  f.name = name;
  if (name == "fig3") {
    f.description = "AT pair negativity and DSB vs delta at beta=1";
    for (const char* block : {"sigma-sigma-pair", "sigma-tau-cross-pair", "frontal-pair"}) {
      f.specs.push_back(at_sweep(big, SweepAxis::Delta, 0.0, 2.0, 1.0, {"negativity", "dsb"}, block));
    }
  } else if (name == "fig4") {
    f.description = "AT frontal-pair negativity, DSB and analytic DSB vs delta at beta=1";
    for (int spins : {6, 8, big}) {
      f.specs.push_back(at_sweep(spins, SweepAxis::Delta, 0.0, 2.0, 1.0, {"negativity", "dsb", "dsb_analytic"},
                                 "frontal-pair"));
    }
  } else if (name == "fig6") {
    f.description = "AT frontal-pair entropy vs delta at beta=1 for several chain lengths";
    std::vector<int> sizes{6, 8, 10, 12, 14, 16};
    if (full) sizes.push_back(20);
    for (int spins : sizes) {
      f.specs.push_back(at_sweep(spins, SweepAxis::Delta, 0.5, 1.5, 1.0, {"entropy", "d_entropy"}, "frontal-pair"));
    }
  } else if (name == "fig7") {
    // Representative four-site sublattices: adjacent frontal pairs,
    // separated frontal pairs, and alternating sigma/tau sites.
    f.description = "AT four-site block entropy vs delta at beta=1 for three sublattices";
    for (const char* block : {"sublattice-a", "sublattice-b", "sublattice-c"}) {
      f.specs.push_back(at_sweep(big, SweepAxis::Delta, 0.5, 1.5, 1.0, {"entropy", "d_entropy"}, block));
    }
  } else if (name == "fig8" || name == "fig9") {
    const bool quartet = name == "fig9";
    f.description = std::string("AT ") + (quartet ? "quartet" : "frontal-pair") +
                    " entropy vs delta for several staggering values";
    const int spins = full ? 20 : 12;
    for (double beta : kStaggerings) {
      f.specs.push_back(at_sweep(spins, SweepAxis::Delta, -0.5, 2.5, beta, {"entropy", "d_entropy"},
                                 quartet ? "quartet" : "frontal-pair"));
    }
  } else if (name == "fig10") {
    f.description = "AT quartet entropy vs beta at delta=5";
    for (int spins : {8, big}) {
      f.specs.push_back(at_sweep(spins, SweepAxis::Beta, 0.1, 3.0, 5.0, {"entropy", "d_entropy"}, "quartet"));
    }
  } else {
    throw ArgumentError("unknown figure '" + name + "'");
  }
  return f;
}

FigurePreset reduced_preset(const FigurePreset& preset) {
  FigurePreset out{preset.name, preset.description + " (reduced)", {}};
  for (SweepSpec s : preset.specs) {
    s.params.m_sites = std::min(s.params.m_sites, 4);
    s.stop = s.start + 3.0 * s.step;
    const bool duplicate = std::any_of(out.specs.begin(), out.specs.end(), [&](const SweepSpec& o) {
      return o.params.m_sites == s.params.m_sites && o.params.delta == s.params.delta &&
             o.params.beta == s.params.beta && o.block == s.block && o.axis == s.axis && o.start == s.start &&
             o.quantities == s.quantities;
    });
    if (!duplicate) out.specs.push_back(std::move(s));
  }
  return out;
}

SweepResult run_figure(const FigurePreset& preset, int threads) {
  for (const auto& s : preset.specs) s.validate();
  SweepResult out;
  for (const auto& s : preset.specs) out.append(run_sweep(s, threads));
  return out;
}

}  // namespace atxxz
