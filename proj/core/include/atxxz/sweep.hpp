#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "atxxz/eigensolve.hpp"
#include "atxxz/models.hpp"

namespace atxxz {

enum class SweepAxis { Delta, Beta };

std::string axis_name(SweepAxis axis);
SweepAxis parse_axis(const std::string& name);

/// One parameter sweep. The grid is the half-open range [start, stop) in
/// steps of `step`, like a Python range.
///
/// Quantities: energy, entropy, negativity, dsb, m, G, dsb_analytic, and
/// d_<q> / d2_<q> for first and second derivatives along the swept axis.
/// The block is a comma-separated list of 0-based bits or a preset name
/// (see resolve_block).
struct SweepSpec {
  ModelParams params;
  SweepAxis axis = SweepAxis::Delta;
  double start = 0.0;
  double stop = 1.0;
  double step = 0.025;
  std::vector<std::string> quantities{"entropy"};
  std::string block = "frontal-pair";
  LanczosOptions solver;

  std::vector<double> grid() const;
  /// Throws ArgumentError for a bad range, unknown quantity, invalid block
  /// or model/quantity mismatch, and CapacityError when the memory estimate
  /// exceeds kMemoryCapBytes.
  void validate() const;
};

struct SweepRow {
  std::string model;
  int chain_spins = 0;
  double delta = 0.0;
  double beta = 0.0;
  std::string block;
  std::string quantity;
  double value = 0.0;
  bool converged = true;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;

  std::size_t failed_rows() const;
  void append(const SweepResult& other);
};

inline constexpr std::size_t kMemoryCapBytes = std::size_t{8} << 30;

/// Rough peak memory of one ground-state solve: basis, CSR matrix and the
/// Krylov vectors.
std::size_t estimate_memory_bytes(const ModelParams& p, const LanczosOptions& opts);

/// Named blocks:
///   frontal-pair          AT {sigma_1, tau_1};  XXZ spins {1, 2}
///   quartet               AT two frontal pairs; XXZ spins {1..4}
///   nn-pair               XXZ spins {1, 2};     AT {sigma_1, sigma_2}
///   sigma-sigma-pair      AT {sigma_1, sigma_2}
///   sigma-tau-cross-pair  AT {sigma_1, tau_2}
///   sublattice-a          AT frontal pairs 1, 2
///   sublattice-b          AT frontal pairs 1, 3
///   sublattice-c          AT {sigma_1, tau_2, sigma_3, tau_4}
/// Anything else is parsed as a comma-separated list of 0-based bits.
std::vector<int> resolve_block(const std::string& block, const ModelParams& p);

/// Subsystem A for negativity/DSB: the first half (rounded up) of the block.
std::vector<int> default_split(const std::vector<int>& block);

/// Rounds to the 12 significant digits written to CSV.
double quantize(double value);

/// One ground-state solve per grid point on up to `threads` workers. Rows
/// come out in grid order, then quantity order. A solver failure at a point
/// flags that point's rows (value NaN, converged false) and the sweep
/// continues.
SweepResult run_sweep(const SweepSpec& spec, int threads = 1);

}  // namespace atxxz
