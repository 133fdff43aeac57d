#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "atxxz/pauli.hpp"
#include "atxxz/state.hpp"

namespace atxxz {

inline constexpr int kMaxReducedSites = 14;

/// Reduced density matrix over an ordered list of retained sites.
///
/// Local index convention: sites[i] occupies bit i of the row/column index,
/// so sites[0] is the least significant. The frame is inherited from the
/// state it was traced from.
struct DensityMatrix {
  std::vector<int> sites;
  Eigen::MatrixXcd matrix;
  Frame frame = Frame::Z;

  int n_sites() const noexcept { return static_cast<int>(sites.size()); }
};

/// Throws InvalidStateError when trace, hermiticity (1e-12) or positivity
/// (-1e-10) fail.
void validate(const DensityMatrix& rho);

/// Partial trace over every site not in `keep`. keep may be non-contiguous
/// and in any order. Throws ArgumentError on empty, repeated or
/// out-of-range sites, CapacityError above kMaxReducedSites.
DensityMatrix reduce(const QuantumState& psi, std::span<const int> keep);

/// <a b|rho^{T_A}|c d> = <c b|rho|a d> with A given as a proper nonempty
/// subset of rho.sites. Throws ArgumentError otherwise.
Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho, std::span<const int> subsystem_a);

double min_pt_eigenvalue(const DensityMatrix& rho, std::span<const int> subsystem_a);

/// 2 max(0, -lambda_min) of the partial transpose.
double negativity(const DensityMatrix& rho, std::span<const int> subsystem_a);

/// Distance from the separability boundary, -2 lambda_min: the negativity
/// before the max(0, .) floor.
double dsb(const DensityMatrix& rho, std::span<const int> subsystem_a);

/// Base-2 von Neumann entropy. Eigenvalues in [-1e-10, 0) are clipped;
/// anything below, or a trace off by more than 1e-8, throws
/// InvalidStateError.
double von_neumann(const DensityMatrix& rho);

struct EntanglementReport {
  double negativity = 0.0;
  double dsb = 0.0;
  double entropy = 0.0;
  double min_pt_eigenvalue = 0.0;
};

EntanglementReport entanglement_report(const DensityMatrix& rho, std::span<const int> subsystem_a);

/// Frontal-pair density matrix diag(u, v, v, w) in the x frame, from the
/// magnetization m = <sigma^x> = <tau^x> and correlator g = <sigma^x tau^x>.
/// Throws InconsistentInputs when an entry leaves [-1e-10, 1 + 1e-10].
DensityMatrix frontal_pair_analytic(double m, double g);

/// Piecewise DSB of the frontal pair: -1/2 + m - g/2 for delta <= 1,
/// -1/2 + g/2 above.
double lambda_analytic(double m, double g, double delta);

}  // namespace atxxz
