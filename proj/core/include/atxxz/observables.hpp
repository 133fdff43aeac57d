#pragma once

#include <string>
#include <vector>

#include "atxxz/models.hpp"
#include "atxxz/state.hpp"

namespace atxxz {

/// Per-site x-axis expectations of an Ashkin-Teller state.
struct XProfile {
  std::vector<double> sigma;  // <sigma^x_j>
  std::vector<double> tau;    // <tau^x_j>
  std::vector<double> frontal;  // <sigma^x_j tau^x_j>
};

XProfile x_profile(const QuantumState& psi, const ModelParams& p);

/// Site-averaged <sigma^x>. Throws SymmetryViolation when the sigma and tau
/// averages differ by more than 1e-9, ArgumentError for a non-AT model.
double magnetization_x(const QuantumState& psi, const ModelParams& p);

/// Site-averaged <sigma^x tau^x>.
double correlator_x(const QuantumState& psi, const ModelParams& p);

/// Samples of a quantity on a uniform, strictly increasing grid.
struct Series {
  std::string parameter;  // "delta" or "beta"
  std::vector<double> grid;
  std::vector<double> values;
  std::string descriptor;

  /// Throws ArgumentError on length mismatch or a non-increasing grid.
  void validate() const;
};

/// start, start + step, ..., stop (stop included when it lands on the grid
/// to within 1e-9 step).
std::vector<double> uniform_grid(double start, double stop, double step);

/// Central differences inside, second-order one-sided differences at the
/// ends. order 2 at the ends uses the three nearest points. Throws
/// ArgumentError for fewer than 3 points or a non-uniform grid.
Series finite_difference(const Series& series, int order);

enum class ExtremeKind { Max, Min };

struct Extreme {
  double parameter = 0.0;
  ExtremeKind kind = ExtremeKind::Max;
  double value = 0.0;
  std::size_t index = 0;
};

/// Interior grid points where the sign of the first difference changes.
/// A plateau reports its smallest parameter.
std::vector<Extreme> locate_extremes(const Series& series);

}  // namespace atxxz
