#include "atxxz/observables.hpp"

#include <cmath>
#include <numeric>

#include "atxxz/errors.hpp"

namespace atxxz {

namespace {

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

void require_at(const ModelParams& p) {
  if (p.model != Model::AshkinTeller) {
    throw ArgumentError("x magnetization and correlator are defined for the Ashkin-Teller chain");
  }
}

}  // namespace

XProfile x_profile(const QuantumState& psi, const ModelParams& p) {
  require_at(p);
  XProfile out;
  for (int j = 1; j <= p.m_sites; ++j) {
    const int s = sigma_bit(j, p.m_sites), t = tau_bit(j, p.m_sites);
    out.sigma.push_back(expectation(psi, PauliString::single(s, Axis::X)));
    out.tau.push_back(expectation(psi, PauliString::single(t, Axis::X)));
    out.frontal.push_back(expectation(psi, PauliString::pair(s, Axis::X, t, Axis::X)));
  }
  return out;
}

double magnetization_x(const QuantumState& psi, const ModelParams& p) {
  const XProfile prof = x_profile(psi, p);
  const double ms = mean(prof.sigma);
  const double mt = mean(prof.tau);
  if (std::abs(ms - mt) > 1e-9) {
    throw SymmetryViolation("<sigma^x> = " + std::to_string(ms) + " differs from <tau^x> = " +
                            std::to_string(mt));
  }
  return 0.5 * (ms + mt);
}

double correlator_x(const QuantumState& psi, const ModelParams& p) {
  return mean(x_profile(psi, p).frontal);
}

void Series::validate() const {
  if (grid.size() != values.size()) throw ArgumentError("series grid and values differ in length");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw ArgumentError("series grid must be strictly increasing");
  }
}

std::vector<double> uniform_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw ArgumentError("grid step must be positive");
  if (!(stop >= start)) throw ArgumentError("grid stop precedes start");
  const auto intervals = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
  std::vector<double> grid(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) grid[i] = start + static_cast<double>(i) * step;
  return grid;
}

Series finite_difference(const Series& series, int order) {
  series.validate();
  if (order != 1 && order != 2) throw ArgumentError("finite_difference supports order 1 or 2");
  const std::size_t n = series.grid.size();
  if (n < 3) throw ArgumentError("finite_difference needs at least 3 points");
  const double h = series.grid[1] - series.grid[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double hi = series.grid[i] - series.grid[i - 1];
    if (std::abs(hi - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw ArgumentError("finite_difference needs a uniform grid");
    }
  }
  const auto& f = series.values;
  Series out{series.parameter, series.grid, std::vector<double>(n), series.descriptor};
  out.descriptor = (order == 1 ? "d/d" : "d2/d") + series.parameter + "(" + series.descriptor + ")";
  if (order == 1) {
    out.values[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) out.values[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    out.values[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  } else {
    const double h2 = h * h;
    out.values[0] = (f[0] - 2.0 * f[1] + f[2]) / h2;
    for (std::size_t i = 1; i + 1 < n; ++i) out.values[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
    out.values[n - 1] = (f[n - 1] - 2.0 * f[n - 2] + f[n - 3]) / h2;
  }
  return out;
}

std::vector<Extreme> locate_extremes(const Series& series) {
  series.validate();
  std::vector<Extreme> out;
  const auto& v = series.values;
  if (v.size() < 3) return out;
  int previous_sign = 0;
  std::size_t plateau_start = 0;  // first point after the last nonzero step
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double d = v[i + 1] - v[i];
    const int sign = (d > 0.0) - (d < 0.0);
    if (sign == 0) continue;
    if (previous_sign != 0 && sign != previous_sign) {
      out.push_back({series.grid[plateau_start], previous_sign > 0 ? ExtremeKind::Max : ExtremeKind::Min,
                     v[plateau_start], plateau_start});
    }
    previous_sign = sign;
    plateau_start = i + 1;
  }
  return out;
}

}  // namespace atxxz
