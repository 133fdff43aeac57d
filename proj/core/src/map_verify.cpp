#include "atxxz/map_verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "atxxz/entanglement.hpp"
#include "atxxz/errors.hpp"
#include "atxxz/observables.hpp"

namespace atxxz {

namespace {

std::string point(double delta, double beta) {
  std::ostringstream os;
  os << "delta=" << delta << " beta=" << beta;
  return os.str();
}

// Operator norm of A*B - sign*B*A for Pauli strings. Both products are
// monomial matrices with the same permutation, so the norm is the largest
// per-column amplitude difference.
double commutator_norm(const PauliString& a, const PauliString& b, double sign, int n_spins) {
  const PauliString ab = a * b;
  const PauliString ba = b * a;
  double worst = 0.0;
  const Label dim = Label{1} << n_spins;
  for (Label s = 0; s < dim; ++s) {
    const auto [t1, x1] = ab.act(s, Frame::Z);
    const auto [t2, x2] = ba.act(s, Frame::Z);
    if (t1 != t2) {
      worst = std::max(worst, std::abs(x1) + std::abs(x2));
    } else {
      worst = std::max(worst, std::abs(x1 - sign * x2));
    }
  }
  return worst;
}

double identity_deviation(const PauliString& op, int n_spins) {
  double worst = 0.0;
  const Label dim = Label{1} << n_spins;
  for (Label s = 0; s < dim; ++s) {
    const auto [t, x] = op.act(s, Frame::Z);
    worst = std::max(worst, t == s ? std::abs(x - Complex{1.0}) : std::abs(x) + 1.0);
  }
  return worst;
}

double state_deviation(const PauliString& op, const QuantumState& psi) {
  const QuantumState out = apply_pauli_string(op, psi);
  double acc = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) acc += std::norm(out.amplitudes[i] - psi.amplitudes[i]);
  return std::sqrt(acc);
}

PauliString product(const std::vector<PauliString>& ops) {
  PauliString acc;
  for (const auto& o : ops) acc = acc * o;
  return acc;
}

double ground_energy(const ModelParams& p, const LanczosOptions& opts) {
  const auto h = build_hamiltonian(p, ground_sector(p));
  if (h.dim() <= 256) return dense_spectrum(h.matrix).energies.front();
  return lanczos_ground(h.matrix, opts).energies.front();
}

}  // namespace

void VerificationReport::finalize() {
  pass = !inconclusive && max_deviation <= tolerance;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (inconclusive ? "INCONCLUSIVE" : (pass ? "PASS" : "FAIL")) << "  " << check << "  spins=" << chain_spins;
  if (!parameters.empty()) os << "  " << parameters;
  os << "  max_dev=" << max_deviation << " (tol " << tolerance << ")";
  if (!notes.empty()) os << "  " << notes;
  return os.str();
}

VerificationReport check_link_algebra(const std::vector<LinkVariable>& etas,
                                      const std::vector<LinkVariable>& gammas, int n_spins,
                                      const std::string& label) {
  VerificationReport r;
  r.check = "link-algebra";
  r.chain_spins = n_spins;
  r.parameters = label;
  r.tolerance = 1e-12;
  const int count = static_cast<int>(etas.size());
  if (gammas.size() != etas.size() || count < 2) {
    throw ArgumentError("link algebra needs equal-length eta and gamma sets of at least 2");
  }

  std::string worst_case;
  auto record = [&](double dev, const std::string& what) {
    if (dev > r.max_deviation || worst_case.empty()) {
      if (dev > r.max_deviation) r.max_deviation = dev;
      worst_case = what;
    }
  };

  for (const auto* set : {&etas, &gammas}) {
    for (const auto& lv : *set) {
      record(identity_deviation(lv.realization * lv.realization, n_spins),
             link_name(lv.kind, lv.index) + "^2");
    }
  }
  auto neighbours = [count](int j, int k) {
    return std::abs(j - k) == 1 || (j == 1 && k == count) || (j == count && k == 1);
  };
  for (int j = 1; j <= count; ++j) {
    for (int k = 1; k <= count; ++k) {
      const auto& ej = etas[static_cast<std::size_t>(j - 1)];
      const auto& gj = gammas[static_cast<std::size_t>(j - 1)];
      const auto& ek = etas[static_cast<std::size_t>(k - 1)];
      const auto& gk = gammas[static_cast<std::size_t>(k - 1)];
      const double same_family = neighbours(j, k) ? -1.0 : 1.0;  // anticommute on neighbours
      record(commutator_norm(ej.realization, gk.realization, 1.0, n_spins),
             "[" + link_name(ej.kind, j) + "," + link_name(gk.kind, k) + "]");
      const std::string bracket = same_family < 0 ? "{" : "[";
      const std::string close = same_family < 0 ? "}" : "]";
      record(commutator_norm(ej.realization, ek.realization, same_family, n_spins),
             bracket + link_name(ej.kind, j) + "," + link_name(ek.kind, k) + close);
      record(commutator_norm(gj.realization, gk.realization, same_family, n_spins),
             bracket + link_name(gj.kind, j) + "," + link_name(gk.kind, k) + close);
    }
  }
  r.notes = "worst: " + worst_case;
  r.finalize();
  return r;
}

VerificationReport check_link_algebra(Model model, int m_sites) {
  if (m_sites < 2 || m_sites > 4) throw ArgumentError("link algebra check supports 2 <= M <= 4");
  ModelParams p;
  p.model = model;
  p.m_sites = m_sites;
  std::vector<LinkVariable> etas, gammas;
  for (int j = 1; j <= 2 * m_sites; ++j) {
    etas.push_back(link_variable(LinkKind::Eta, j, p));
    gammas.push_back(link_variable(LinkKind::Gamma, j, p));
  }
  return check_link_algebra(etas, gammas, p.n_spins(), "model=" + model_name(model));
}

VerificationReport check_constraints(const QuantumState& psi, const ModelParams& p) {
  VerificationReport r;
  r.check = "constraints";
  r.chain_spins = p.n_spins();
  r.parameters = "model=" + model_name(p.model) + " " + point(p.delta, p.beta);
  r.tolerance = 1e-9;
  const int M = p.m_sites;
  auto link = [&p](LinkKind k, int i) { return link_variable(k, i, p).realization; };

  std::vector<std::pair<std::string, PauliString>> ops;
  if (p.model == Model::AshkinTeller) {
    std::vector<PauliString> even_eta, even_gamma, p1, p2;
    for (int j = 1; j <= M; ++j) {
      even_eta.push_back(link(LinkKind::Eta, 2 * j));
      even_gamma.push_back(link(LinkKind::Gamma, 2 * j));
      p1.push_back(PauliString::single(sigma_bit(j, M), Axis::X));
      p2.push_back(PauliString::single(tau_bit(j, M), Axis::X));
    }
    ops = {{"prod eta_2j", product(even_eta)},
           {"prod gamma_2j", product(even_gamma)},
           {"P1", product(p1)},
           {"P2", product(p2)}};
  } else {
    std::vector<PauliString> first, second, qx, qy;
    for (int j = 1; j <= M; ++j) {
      first.push_back(link(LinkKind::Eta, 2 * j - 1) * link(LinkKind::Gamma, 2 * j));
      second.push_back(link(LinkKind::Gamma, 2 * j - 1) * link(LinkKind::Eta, 2 * j));
    }
    for (int i = 1; i <= 2 * M; ++i) {
      qx.push_back(PauliString::single(xxz_bit(i, M), Axis::X));
      qy.push_back(PauliString::single(xxz_bit(i, M), Axis::Y));
    }
    ops = {{"prod eta_2j-1 gamma_2j", product(first)},
           {"prod gamma_2j-1 eta_2j", product(second)},
           {"Q_x", product(qx)},
           {"Q_y", product(qy)}};
  }

  std::ostringstream notes;
  for (const auto& [name, op] : ops) {
    const double dev = state_deviation(op, psi);
    r.metrics.emplace_back(name, dev);
    r.max_deviation = std::max(r.max_deviation, dev);
    notes << name << "=" << dev << " ";
  }
  r.notes = notes.str();
  r.finalize();
  return r;
}

VerificationReport check_constraints_on_ground_state(const ModelParams& p, const LanczosOptions& opts) {
  if (p.m_sites > 6) throw ArgumentError("constraint check supports M <= 6");
  LanczosOptions two = opts;
  two.k = 2;
  const auto h = build_hamiltonian(p, ground_sector(p));
  const EigenResult g = lanczos_ground(h, two);
  VerificationReport r = check_constraints(g.states.front(), p);
  if (g.degenerate) {
    r.inconclusive = true;
    r.notes += "degenerate ground state";
    r.finalize();
  }
  return r;
}

VerificationReport check_energy_equivalence(double delta, double beta, int m_sites, const LanczosOptions& opts) {
  if (m_sites > 7) throw ArgumentError("energy equivalence check supports M <= 7");
  ModelParams at{Model::AshkinTeller, m_sites, 1.0, delta, beta};
  ModelParams xxz{Model::StaggeredXXZ, m_sites, 1.0, delta, beta};
  const double e_at = ground_energy(at, opts);
  const double e_xxz = ground_energy(xxz, opts);
  VerificationReport r;
  r.check = "energy";
  r.chain_spins = 2 * m_sites;
  r.parameters = point(delta, beta);
  r.tolerance = 1e-8;
  r.max_deviation = std::abs(e_at - e_xxz);
  r.metrics = {{"E0_at", e_at}, {"E0_xxz", e_xxz}};
  std::ostringstream os;
  os.precision(12);
  os << "E0_at=" << e_at << " E0_xxz=" << e_xxz;
  r.notes = os.str();
  r.finalize();
  return r;
}

VerificationReport check_pair_density_equality(double delta, double beta, int m_sites, int site,
                                                   const LanczosOptions& opts) {
  if (m_sites > 6) throw ArgumentError("pair density check supports M <= 6");
  ModelParams at{Model::AshkinTeller, m_sites, 1.0, delta, beta};
  ModelParams xxz{Model::StaggeredXXZ, m_sites, 1.0, delta, beta};
  LanczosOptions two = opts;
  two.k = 2;
  const EigenResult g_at = lanczos_ground(build_hamiltonian(at, ground_sector(at)), two);
  const EigenResult g_xxz = lanczos_ground(build_hamiltonian(xxz, ground_sector(xxz)), two);
  const QuantumState& psi_at = g_at.states.front();
  const QuantumState& psi_xxz = g_xxz.states.front();

  const int s = sigma_bit(site, m_sites), t = tau_bit(site, m_sites);
  const int a = xxz_bit(2 * site - 1, m_sites), b = xxz_bit(2 * site, m_sites);
  const std::vector<int> frontal{s, t};
  const std::vector<int> dimer{a, b};
  const DensityMatrix rho_at = reduce(psi_at, frontal);
  const DensityMatrix rho_xxz = reduce(psi_xxz, dimer);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> e1(rho_at.matrix, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> e2(rho_xxz.matrix, Eigen::EigenvaluesOnly);
  const double eig_dev = (e1.eigenvalues() - e2.eigenvalues()).cwiseAbs().maxCoeff();

  const double u = expectation(psi_at, PauliString::single(s, Axis::X));
  const double v = expectation(psi_at, PauliString::pair(s, Axis::X, t, Axis::X));
  const double pxx = expectation(psi_xxz, PauliString::pair(a, Axis::X, b, Axis::X));
  const double pyy = expectation(psi_xxz, PauliString::pair(a, Axis::Y, b, Axis::Y));
  const double q = expectation(psi_xxz, PauliString::pair(a, Axis::Z, b, Axis::Z));
  const double s_at = von_neumann(rho_at);
  const double s_xxz = von_neumann(rho_xxz);

  VerificationReport r;
  r.check = "pair-density";
  r.chain_spins = 2 * m_sites;
  r.parameters = point(delta, beta);
  r.tolerance = 1e-8;
  r.max_deviation = eig_dev;
  r.metrics = {{"eigenvalue_dev", eig_dev},     {"u_minus_p", std::abs(u - pxx)},
               {"pxx_minus_pyy", std::abs(pxx - pyy)}, {"v_plus_q", std::abs(v + q)},
               {"entropy_dev", std::abs(s_at - s_xxz)}, {"entropy", s_at}};
  std::ostringstream os;
  os << "|u-p|=" << std::abs(u - pxx) << " |v+q|=" << std::abs(v + q) << " |dS|=" << std::abs(s_at - s_xxz);
  r.notes = os.str();
  r.inconclusive = g_at.degenerate || g_xxz.degenerate;
  if (r.inconclusive) r.notes += " degenerate ground state";
  r.finalize();
  return r;
}

VerificationReport check_spectral_inclusion(double delta, double beta, int m_sites) {
  if (m_sites < 2 || m_sites > 3) throw ArgumentError("spectral inclusion check supports 2 <= M <= 3");
  ModelParams at{Model::AshkinTeller, m_sites, 1.0, delta, beta};
  ModelParams xxz{Model::StaggeredXXZ, m_sites, 1.0, delta, beta};
  const auto e_q0 = dense_spectrum(build_hamiltonian(at, parity_sector(0)).matrix).energies;
  const auto e_q1 = dense_spectrum(build_hamiltonian(at, parity_sector(1)).matrix).energies;
  const auto e_q3 = dense_spectrum(build_hamiltonian(at, parity_sector(3)).matrix).energies;
  auto pool = dense_spectrum(build_hamiltonian(xxz, FullSector{}).matrix).energies;

  // Greedy nearest-level matching against the remaining XXZ levels.
  double worst = 0.0;
  for (double e : e_q0) {
    const auto it = std::min_element(pool.begin(), pool.end(),
                                      [e](double l, double r) { return std::abs(l - e) < std::abs(r - e); });
    worst = std::max(worst, std::abs(*it - e));
    pool.erase(it);
  }
  double q13 = 0.0;
  for (std::size_t i = 0; i < e_q1.size(); ++i) q13 = std::max(q13, std::abs(e_q1[i] - e_q3[i]));

  VerificationReport r;
  r.check = "spectral-inclusion";
  r.chain_spins = 2 * m_sites;
  r.parameters = point(delta, beta);
  r.tolerance = 1e-8;
  r.max_deviation = std::max(worst, q13);
  r.metrics = {{"inclusion_dev", worst}, {"q1_q3_dev", q13}};
  std::ostringstream os;
  os << "Q0-in-XXZ dev=" << worst << " Q1/Q3 dev=" << q13;
  r.notes = os.str();
  r.finalize();
  return r;
}

}  // namespace atxxz
