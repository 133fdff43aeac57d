#include "atxxz/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "atxxz/entanglement.hpp"
#include "atxxz/errors.hpp"
#include "atxxz/observables.hpp"

namespace atxxz {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string>& base_quantities() {
  static const std::vector<std::string> names{"energy", "entropy", "negativity", "dsb", "m", "G", "dsb_analytic"};
  return names;
}

bool is_base(const std::string& q) {
  const auto& b = base_quantities();
  return std::find(b.begin(), b.end(), q) != b.end();
}

bool at_only(const std::string& q) { return q == "m" || q == "G" || q == "dsb_analytic"; }

struct ParsedQuantity {
  std::string base;
  int derivative = 0;
};

ParsedQuantity parse_quantity(const std::string& q) {
  ParsedQuantity p{q, 0};
  if (q.rfind("d2_", 0) == 0) {
    p = {q.substr(3), 2};
  } else if (q.rfind("d_", 0) == 0) {
    p = {q.substr(2), 1};
  }
  if (!is_base(p.base)) throw ArgumentError("unknown quantity '" + q + "'");
  return p;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ModelParams at_point(const SweepSpec& spec, double x) {
  ModelParams p = spec.params;
  (spec.axis == SweepAxis::Delta ? p.delta : p.beta) = x;
  return p;
}

}  // namespace

std::string axis_name(SweepAxis axis) { return axis == SweepAxis::Delta ? "delta" : "beta"; }

SweepAxis parse_axis(const std::string& name) {
  if (name == "delta") return SweepAxis::Delta;
  if (name == "beta") return SweepAxis::Beta;
  throw ArgumentError("unknown sweep axis '" + name + "' (expected delta or beta)");
}

std::vector<double> SweepSpec::grid() const {
  if (!(step > 0.0)) throw ArgumentError("sweep step must be positive");
  if (!(start < stop)) throw ArgumentError("sweep start must be below stop");
  std::vector<double> g;
  for (std::size_t i = 0;; ++i) {
    const double x = start + static_cast<double>(i) * step;
    if (x >= stop - 1e-9 * step) break;
    g.push_back(x);
  }
  return g;
}

void SweepSpec::validate() const {
  params.validate();
  const auto g = grid();
  if (quantities.empty()) throw ArgumentError("sweep needs at least one quantity");
  for (const auto& q : quantities) {
    const auto pq = parse_quantity(q);
    if (at_only(pq.base) && params.model != Model::AshkinTeller) {
      throw ArgumentError("quantity '" + q + "' is only defined for the Ashkin-Teller chain");
    }
    if (pq.derivative > 0 && g.size() < 3) {
      throw ArgumentError("derivative quantity '" + q + "' needs at least 3 grid points");
    }
  }
  const auto sites = resolve_block(block, params);
  const bool pairwise = std::any_of(quantities.begin(), quantities.end(), [](const std::string& q) {
    const auto b = parse_quantity(q).base;
    return b == "negativity" || b == "dsb";
  });
  if (pairwise && sites.size() < 2) throw ArgumentError("negativity/dsb need a block of at least two sites");
  if (estimate_memory_bytes(params, solver) > kMemoryCapBytes) {
    throw CapacityError("sweep point needs more than the " + std::to_string(kMemoryCapBytes >> 30) +
                        " GiB memory cap");
  }
}

std::size_t SweepResult::failed_rows() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.converged; }));
}

void SweepResult::append(const SweepResult& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

std::size_t estimate_memory_bytes(const ModelParams& p, const LanczosOptions& opts) {
  const int n = p.n_spins();
  const double dim = p.model == Model::AshkinTeller ? std::ldexp(1.0, n - 2) : binomial(n, p.m_sites);
  const double terms = 6.0 * p.m_sites;  // both chains carry six strings per site
  double bytes = dim * 8.0;                                  // labels
  if (n <= 24) bytes += std::ldexp(4.0, n);                  // dense lookup
  bytes += dim * (terms + 1.0) * 12.0;                       // CSR
  bytes += dim * 8.0 * (opts.max_krylov + 4.0);              // Krylov vectors
  bytes += dim * 16.0 * 2.0;                                 // complex state + reduction buffer
  return static_cast<std::size_t>(bytes);
}

std::vector<int> resolve_block(const std::string& block, const ModelParams& p) {
  const int M = p.m_sites;
  const bool at = p.model == Model::AshkinTeller;
  auto need_sites = [&](int m) {
    if (M < m) throw ArgumentError("block '" + block + "' needs at least " + std::to_string(m) + " sites");
  };
  auto need_at = [&] {
    if (!at) throw ArgumentError("block '" + block + "' is defined for the Ashkin-Teller chain");
  };
  std::vector<int> sites;
  if (block == "frontal-pair") {
    sites = at ? std::vector<int>{sigma_bit(1, M), tau_bit(1, M)} : std::vector<int>{xxz_bit(1, M), xxz_bit(2, M)};
  } else if (block == "quartet") {
    need_sites(2);
    sites = at ? std::vector<int>{sigma_bit(1, M), tau_bit(1, M), sigma_bit(2, M), tau_bit(2, M)}
               : std::vector<int>{xxz_bit(1, M), xxz_bit(2, M), xxz_bit(3, M), xxz_bit(4, M)};
  } else if (block == "nn-pair") {
    sites = at ? std::vector<int>{sigma_bit(1, M), sigma_bit(2, M)} : std::vector<int>{xxz_bit(1, M), xxz_bit(2, M)};
  } else if (block == "sigma-sigma-pair") {
    need_at();
    sites = {sigma_bit(1, M), sigma_bit(2, M)};
  } else if (block == "sigma-tau-cross-pair") {
    need_at();
    sites = {sigma_bit(1, M), tau_bit(2, M)};
  } else if (block == "sublattice-a") {
    need_at();
    sites = {sigma_bit(1, M), tau_bit(1, M), sigma_bit(2, M), tau_bit(2, M)};
  } else if (block == "sublattice-b") {
    need_at();
    need_sites(3);
    sites = {sigma_bit(1, M), tau_bit(1, M), sigma_bit(3, M), tau_bit(3, M)};
  } else if (block == "sublattice-c") {
    need_at();
    need_sites(4);
    sites = {sigma_bit(1, M), tau_bit(2, M), sigma_bit(3, M), tau_bit(4, M)};
  } else {
    std::stringstream ss(block);
    std::string item;
    while (std::getline(ss, item, ',')) {
      char* end = nullptr;
      const long v = std::strtol(item.c_str(), &end, 10);
      if (item.empty() || end == item.c_str() || *end != '\0') {
        throw ArgumentError("block '" + block + "' is neither a preset nor a list of sites");
      }
      sites.push_back(static_cast<int>(v));
    }
  }
  if (sites.empty()) throw ArgumentError("empty block");
  std::vector<int> sorted = sites;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("block '" + block + "' repeats a site");
  }
  if (sorted.front() < 0 || sorted.back() >= p.n_spins()) {
    throw ArgumentError("block '" + block + "' has sites outside a " + std::to_string(p.n_spins()) + "-spin chain");
  }
  if (static_cast<int>(sites.size()) > kMaxReducedSites) {
    throw CapacityError("block of " + std::to_string(sites.size()) + " sites exceeds the reduction cap");
  }
  return sites;
}

std::vector<int> default_split(const std::vector<int>& block) {
  return {block.begin(), block.begin() + static_cast<std::ptrdiff_t>((block.size() + 1) / 2)};
}

double quantize(double value) {
  if (!std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

SweepResult run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  const auto grid = spec.grid();
  const auto block = resolve_block(spec.block, spec.params);
  const auto split = default_split(block);

  std::vector<std::string> bases;
  for (const auto& q : spec.quantities) {
    const auto b = parse_quantity(q).base;
    if (std::find(bases.begin(), bases.end(), b) == bases.end()) bases.push_back(b);
  }

  // values[base][point]
  std::map<std::string, std::vector<double>> values;
  for (const auto& b : bases) values[b].assign(grid.size(), kNaN);
  std::vector<bool> ok(grid.size(), false);
  std::mutex values_mutex;

  auto solve_point = [&](std::size_t i) {
    const ModelParams p = at_point(spec, grid[i]);
    std::map<std::string, double> local;
    try {
      const EigenResult g = solve_ground_sector(p, spec.solver);
      const QuantumState& psi = g.states.front();
      std::optional<DensityMatrix> rho;
      auto reduced = [&]() -> const DensityMatrix& {
        if (!rho) rho = reduce(psi, block);
        return *rho;
      };
      double m = kNaN, gx = kNaN;
      for (const auto& b : bases) {
        double v = kNaN;
        if (b == "energy") {
          v = g.energies.front();
        } else if (b == "entropy") {
          v = von_neumann(reduced());
        } else if (b == "negativity") {
          v = negativity(reduced(), split);
        } else if (b == "dsb") {
          v = dsb(reduced(), split);
        } else {
          if (std::isnan(m)) {
            m = magnetization_x(psi, p);
            gx = correlator_x(psi, p);
          }
          v = b == "m" ? m : b == "G" ? gx : lambda_analytic(m, gx, p.delta);
        }
        local[b] = v;
      }
    } catch (const ConvergenceError&) {
      return;
    } catch (const InvalidStateError&) {
      return;
    } catch (const SymmetryViolation&) {
      return;
    }
    std::lock_guard lock(values_mutex);
    for (const auto& [b, v] : local) values[b][i] = v;
    ok[i] = true;
  };

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(grid.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) solve_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < grid.size(); i = next++) solve_point(i);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Derivatives need the point and its stencil neighbours to have converged.
  std::map<std::string, std::vector<double>> derived;
  std::map<std::string, std::vector<bool>> derived_ok;
  for (const auto& q : spec.quantities) {
    const auto pq = parse_quantity(q);
    if (pq.derivative == 0) continue;
    Series s{axis_name(spec.axis), grid, values[pq.base], pq.base};
    const Series d = finite_difference(s, pq.derivative);
    derived[q] = d.values;
    auto& flags = derived_ok[q];
    flags.assign(grid.size(), true);
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t lo = i == 0 ? 0 : (i + 1 == n ? n - 3 : i - 1);
      const std::size_t hi = i == 0 ? 2 : (i + 1 == n ? n - 1 : i + 1);
      for (std::size_t k = lo; k <= hi; ++k) flags[i] = flags[i] && ok[k];
    }
  }

  SweepResult out;
  const std::string model = model_name(spec.params.model);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ModelParams p = at_point(spec, grid[i]);
    for (const auto& q : spec.quantities) {
      const auto pq = parse_quantity(q);
      SweepRow row{model, p.n_spins(), quantize(p.delta), quantize(p.beta), spec.block, q, kNaN, false};
      if (pq.derivative == 0) {
        row.converged = ok[i];
        row.value = ok[i] ? quantize(values[pq.base][i]) : kNaN;
      } else {
        row.converged = derived_ok[q][i];
        row.value = row.converged ? quantize(derived[q][i]) : kNaN;
      }
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace atxxz
