#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atxxz/eigensolve.hpp"
#include "atxxz/models.hpp"
#include "atxxz/state.hpp"

namespace atxxz {

/// Outcome of one executable equivalence check. Failures are reported here
/// rather than thrown; solver errors still propagate.
struct VerificationReport {
  std::string check;
  int chain_spins = 0;
  std::string parameters;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool inconclusive = false;
  std::string notes;
  std::vector<std::pair<std::string, double>> metrics;

  /// pass <=> max_deviation <= tolerance and the check was conclusive.
  void finalize();
  std::string summary() const;
};

/// Squares, commutators and anticommutators of a set of link variables as
/// exhaustive operator identities on the full 2^n_spins space. Link sets
/// are indexed 1..2M in order.
VerificationReport check_link_algebra(const std::vector<LinkVariable>& etas,
                                      const std::vector<LinkVariable>& gammas, int n_spins,
                                      const std::string& label);

/// Builds the model's link variables and checks them. Requires M <= 4 and
/// M >= 2.
VerificationReport check_link_algebra(Model model, int m_sites);

/// Periodic-boundary constraints and parity-sector conditions applied to a
/// given state: reports max ||(O - 1) psi||.
VerificationReport check_constraints(const QuantumState& psi, const ModelParams& p);

/// Same, on the ground state of p (k=2 solve; a degenerate ground state
/// makes the report inconclusive). Requires M <= 6.
VerificationReport check_constraints_on_ground_state(const ModelParams& p,
                                                     const LanczosOptions& opts = {});

/// |E0 of the AT chain (M sites, Q=0) - E0 of the XXZ chain (2M spins, n=0)|,
/// tolerance 1e-8. Requires M <= 7.
VerificationReport check_energy_equivalence(double delta, double beta, int m_sites,
                                            const LanczosOptions& opts = {});

/// Frontal pair (sigma_j, tau_j) of the AT ground state against the
/// intra-dimer pair (2j-1, 2j) of the XXZ ground state: sorted eigenvalue
/// difference, with |u - p|, |v + q| and the entropy difference as metrics.
/// Requires M <= 6.
VerificationReport check_pair_density_equality(double delta, double beta, int m_sites,
                                                   int site = 1, const LanczosOptions& opts = {});

/// Every Q=0 level of the AT chain appears, with multiplicity, in the XXZ
/// spectrum; also reports the Q=1 / Q=3 spectral difference. Requires M <= 3.
VerificationReport check_spectral_inclusion(double delta, double beta, int m_sites);

}  // namespace atxxz
