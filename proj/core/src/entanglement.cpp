#include "atxxz/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "atxxz/errors.hpp"

namespace atxxz {

namespace {

constexpr double kPsdClip = 1e-10;

std::size_t local_mask(const DensityMatrix& rho, std::span<const int> subset) {
  if (subset.empty() || subset.size() >= rho.sites.size()) {
    throw ArgumentError("partial transpose needs a proper nonempty subsystem");
  }
  std::size_t mask = 0;
  for (int s : subset) {
    const auto it = std::find(rho.sites.begin(), rho.sites.end(), s);
    if (it == rho.sites.end()) {
      throw ArgumentError("site " + std::to_string(s) + " not retained in the density matrix");
    }
    const auto bit = std::size_t{1} << (it - rho.sites.begin());
    if (mask & bit) throw ArgumentError("subsystem repeats site " + std::to_string(s));
    mask |= bit;
  }
  return mask;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

void validate(const DensityMatrix& rho) {
  const auto dim = rho.matrix.rows();
  if (rho.matrix.cols() != dim || dim != (Eigen::Index{1} << rho.sites.size())) {
    throw InvalidStateError("density matrix shape does not match its site list");
  }
  const Complex tr = rho.matrix.trace();
  if (std::abs(tr - Complex{1.0}) > 1e-12) {
    throw InvalidStateError("density matrix trace " + std::to_string(tr.real()) + " != 1");
  }
  if ((rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidStateError("density matrix is not Hermitian");
  }
  if (hermitian_eigenvalues(rho.matrix).minCoeff() < -kPsdClip) {
    throw InvalidStateError("density matrix has a negative eigenvalue");
  }
}

DensityMatrix reduce(const QuantumState& psi, std::span<const int> keep) {
  const int n = psi.basis->n_spins();
  if (keep.empty()) throw ArgumentError("reduce needs at least one retained site");
  if (static_cast<int>(keep.size()) > kMaxReducedSites) {
    throw CapacityError("reduced density matrix over " + std::to_string(keep.size()) +
                        " sites exceeds cap of " + std::to_string(kMaxReducedSites));
  }
  Label keep_mask = 0;
  for (int s : keep) {
    if (s < 0 || s >= n) throw ArgumentError("site " + std::to_string(s) + " outside the chain");
    const Label bit = Label{1} << s;
    if (keep_mask & bit) throw ArgumentError("retained site " + std::to_string(s) + " repeated");
    keep_mask |= bit;
  }

  // Gather the retained bits into a local index and the rest into a label
  // identifying the environment configuration.
  const auto states = psi.basis->states();
  const std::size_t count = states.size();
  std::vector<std::size_t> local(count);
  std::vector<Label> env(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Label s = states[i];
    std::size_t a = 0;
    for (std::size_t k = 0; k < keep.size(); ++k) a |= static_cast<std::size_t>((s >> keep[k]) & 1U) << k;
    local[i] = a;
    env[i] = s & ~keep_mask;
  }
  std::vector<Label> env_labels(env);
  std::sort(env_labels.begin(), env_labels.end());
  env_labels.erase(std::unique(env_labels.begin(), env_labels.end()), env_labels.end());

  const auto dim = Eigen::Index{1} << keep.size();
  Eigen::MatrixXcd amps = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(env_labels.size()), dim);
  for (std::size_t i = 0; i < count; ++i) {
    const auto row = std::lower_bound(env_labels.begin(), env_labels.end(), env[i]) - env_labels.begin();
    amps(row, static_cast<Eigen::Index>(local[i])) = psi.amplitudes[i];
  }

  DensityMatrix rho;
  rho.sites.assign(keep.begin(), keep.end());
  rho.frame = psi.frame;
  // rho_ab = sum_env psi(a, env) conj(psi(b, env))
  rho.matrix = amps.transpose() * amps.conjugate();
  return rho;
}

Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho, std::span<const int> subsystem_a) {
  const std::size_t mask = local_mask(rho, subsystem_a);
  const auto dim = rho.matrix.rows();
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      const auto src_row = static_cast<Eigen::Index>((ui & ~mask) | (uj & mask));
      const auto src_col = static_cast<Eigen::Index>((uj & ~mask) | (ui & mask));
      out(i, j) = rho.matrix(src_row, src_col);
    }
  }
  return out;
}

double min_pt_eigenvalue(const DensityMatrix& rho, std::span<const int> subsystem_a) {
  return hermitian_eigenvalues(partial_transpose(rho, subsystem_a)).minCoeff();
}

double negativity(const DensityMatrix& rho, std::span<const int> subsystem_a) {
  return 2.0 * std::max(0.0, -min_pt_eigenvalue(rho, subsystem_a));
}

double dsb(const DensityMatrix& rho, std::span<const int> subsystem_a) {
  return -2.0 * min_pt_eigenvalue(rho, subsystem_a);
}

double von_neumann(const DensityMatrix& rho) {
  const double tr = rho.matrix.trace().real();
  if (std::abs(tr - 1.0) > 1e-8) {
    throw InvalidStateError("entropy of a density matrix with trace " + std::to_string(tr));
  }
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho.matrix);
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double p = ev(i);
    if (p < -kPsdClip) {
      throw InvalidStateError("density matrix eigenvalue " + std::to_string(p) + " below clip window");
    }
    p = std::clamp(p, 0.0, 1.0);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

EntanglementReport entanglement_report(const DensityMatrix& rho, std::span<const int> subsystem_a) {
  EntanglementReport r;
  r.min_pt_eigenvalue = min_pt_eigenvalue(rho, subsystem_a);
  r.dsb = -2.0 * r.min_pt_eigenvalue;
  r.negativity = std::max(0.0, r.dsb);
  r.entropy = von_neumann(rho);
  return r;
}

DensityMatrix frontal_pair_analytic(double m, double g) {
  if (!(std::abs(m) <= 1.0 && std::abs(g) <= 1.0)) {
    throw InconsistentInputs("frontal pair inputs must lie in [-1, 1]");
  }
  const double u = 0.25 + 0.5 * m + 0.25 * g;
  const double v = 0.25 - 0.25 * g;
  const double w = 0.25 - 0.5 * m + 0.25 * g;
  for (double e : {u, v, w}) {
    if (!(e >= -kPsdClip && e <= 1.0 + kPsdClip)) {
      throw InconsistentInputs("frontal pair (m=" + std::to_string(m) + ", G=" + std::to_string(g) +
                               ") gives diagonal entry " + std::to_string(e));
    }
  }
  DensityMatrix rho;
  rho.sites = {0, 1};
  rho.frame = Frame::X;
  rho.matrix = Eigen::MatrixXcd::Zero(4, 4);
  rho.matrix(0, 0) = u;
  rho.matrix(1, 1) = v;
  rho.matrix(2, 2) = v;
  rho.matrix(3, 3) = w;
  return rho;
}

double lambda_analytic(double m, double g, double delta) {
  if (delta <= 1.0) return -0.5 + m - 0.5 * g;
  return -0.5 + 0.5 * g;
}

}  // namespace atxxz
