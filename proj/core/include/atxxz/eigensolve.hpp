#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "atxxz/models.hpp"
#include "atxxz/state.hpp"

namespace atxxz {

/// Eigenpairs sorted by energy. `vectors` always holds the real
/// eigenvectors; `states` is filled when the solve had a basis to attach.
struct EigenResult {
  std::vector<double> energies;
  std::vector<std::vector<double>> vectors;
  std::vector<QuantumState> states;
  std::vector<bool> converged;
  std::vector<double> residuals;
  std::optional<double> gap;
  bool degenerate = false;
  int iterations = 0;  // matrix-vector products
};

inline constexpr std::size_t kDenseMaxDim = 4096;

/// Full eigendecomposition. Throws CapacityError above kDenseMaxDim.
EigenResult dense_spectrum(const CsrMatrix& m);
EigenResult dense_spectrum(const SparseHamiltonian& h);

struct LanczosOptions {
  int k = 1;  // 1 or 2
  double tol = 1e-10;
  int max_iter = 1000;
  std::uint64_t seed = 20240611;
  // Krylov vectors kept before an explicit restart from the Ritz vector.
  int max_krylov = 160;
  // Two lowest levels closer than gap_rel_tol * |E0| are flagged degenerate.
  double gap_rel_tol = 1e-8;
};

using MatVec = std::function<void(std::span<const double>, std::span<double>)>;

/// Lowest k eigenpairs of a real symmetric operator by Lanczos with full
/// reorthogonalization. The second pair is found by a deflated run against
/// the first. Throws ConvergenceError (with the best residual) when
/// max_iter matrix-vector products do not reach tol, ArgumentError when
/// dim < k or options are invalid.
EigenResult lanczos_ground(const MatVec& op, std::size_t dim, const LanczosOptions& opts = {});
EigenResult lanczos_ground(const CsrMatrix& m, const LanczosOptions& opts = {});
EigenResult lanczos_ground(const SparseHamiltonian& h, const LanczosOptions& opts = {});

/// Attaches QuantumStates on h's basis to a result computed from h.matrix.
void attach_states(EigenResult& result, const SparseHamiltonian& h);

/// Ground state of a model in its ground sector (Q=0 / n=0).
EigenResult solve_ground_sector(const ModelParams& p, const LanczosOptions& opts = {});

}  // namespace atxxz
