#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "atxxz/eigensolve.hpp"
#include "atxxz/errors.hpp"
#include "atxxz/models.hpp"
#include "helpers.hpp"

using namespace atxxz;
using testing_helpers::to_dense;

namespace {

Eigen::VectorXd sorted_eigs(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Eigen::VectorXd sector_union(const ModelParams& p, const std::vector<Sector>& sectors) {
  std::vector<double> all;
  for (const auto& s : sectors) {
    const auto e = sorted_eigs(to_dense(build_hamiltonian(p, s).matrix));
    all.insert(all.end(), e.data(), e.data() + e.size());
  }
  std::sort(all.begin(), all.end());
  return Eigen::Map<Eigen::VectorXd>(all.data(), static_cast<Eigen::Index>(all.size()));
}

std::vector<Sector> at_sectors() {
  return {parity_sector(0), parity_sector(1), parity_sector(2), parity_sector(3)};
}

std::vector<Sector> xxz_sectors(int m) {
  std::vector<Sector> s;
  for (int up = 0; up <= 2 * m; ++up) s.push_back(SzSector{up});
  return s;
}

struct Point {
  double delta, beta;
};
const Point kPoints[] = {{1.0, 1.0}, {0.3, 1.7}, {-0.5, 0.5}, {2.0, 0.8}};

}  // namespace

TEST(Models, DimerPairGroundEnergyMinusSix) {
  ModelParams p{Model::StaggeredXXZ, 1, 1.0, 1.0, 1.0};
  const auto h = build_hamiltonian(p, FullSector{});
  EXPECT_EQ(h.dim(), 4u);
  EXPECT_NEAR(sorted_eigs(to_dense(h.matrix))(0), -6.0, 1e-12);
}

TEST(Models, FullSpectraMatchKroneckerOracle) {
  for (int m : {2, 3}) {
    for (const auto& pt : kPoints) {
      ModelParams at{Model::AshkinTeller, m, 1.0, pt.delta, pt.beta};
      ModelParams xxz{Model::StaggeredXXZ, m, 1.0, pt.delta, pt.beta};
      const auto e_at = sorted_eigs(to_dense(build_hamiltonian(at, FullSector{}).matrix));
      const auto e_xxz = sorted_eigs(to_dense(build_hamiltonian(xxz, FullSector{}).matrix));
      EXPECT_LT((e_at - oracle::spectrum(oracle::ashkin_teller(m, pt.delta, pt.beta))).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_LT((e_xxz - oracle::spectrum(oracle::staggered_xxz(m, pt.delta, pt.beta))).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(Models, MatrixElementsMatchOracle) {
  // XXZ is built in the physical basis, so elements compare one to one.
  const int m = 2;
  ModelParams xxz{Model::StaggeredXXZ, m, 1.0, 0.7, 1.3};
  const Eigen::MatrixXd lib = to_dense(build_hamiltonian(xxz, FullSector{}).matrix);
  const oracle::Matrix ref = oracle::staggered_xxz(m, 0.7, 1.3);
  EXPECT_LT((lib.cast<std::complex<double>>() - ref).cwiseAbs().maxCoeff(), 1e-13);
  // AT is built in the x frame: compare against the Hadamard-rotated oracle.
  ModelParams at{Model::AshkinTeller, m, 1.0, 0.7, 1.3};
  const Eigen::MatrixXd lib_at = to_dense(build_hamiltonian(at, FullSector{}).matrix);
  const oracle::Matrix h = oracle::hadamard_all(2 * m);
  const oracle::Matrix ref_at = h * oracle::ashkin_teller(m, 0.7, 1.3) * h;
  EXPECT_LT((lib_at.cast<std::complex<double>>() - ref_at).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Models, SectorsPartitionFullSpectrum) {
  for (int m : {2, 3, 4}) {
    const Point pt = kPoints[m % 4];
    ModelParams at{Model::AshkinTeller, m, 1.0, pt.delta, pt.beta};
    ModelParams xxz{Model::StaggeredXXZ, m, 1.0, pt.delta, pt.beta};
    const auto full_at = sorted_eigs(to_dense(build_hamiltonian(at, FullSector{}).matrix));
    const auto full_xxz = sorted_eigs(to_dense(build_hamiltonian(xxz, FullSector{}).matrix));
    EXPECT_LT((full_at - sector_union(at, at_sectors())).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((full_xxz - sector_union(xxz, xxz_sectors(m))).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Models, HermitianAndSymmetricUnderProbes) {
  std::mt19937_64 rng(3);
  for (Model model : {Model::AshkinTeller, Model::StaggeredXXZ}) {
    ModelParams p{model, 4, 1.0, 0.8, 1.4};
    const auto h = build_hamiltonian(p, FullSector{});
    const Eigen::MatrixXd d = to_dense(h.matrix);
    EXPECT_EQ((d - d.transpose()).cwiseAbs().maxCoeff(), 0.0);
    for (int probe = 0; probe < 5; ++probe) {
      const auto x = testing_helpers::random_real(h.dim(), rng);
      const auto y = testing_helpers::random_real(h.dim(), rng);
      std::vector<double> hx(h.dim()), hy(h.dim());
      h.matrix.multiply(x, hx);
      h.matrix.multiply(y, hy);
      double yhx = 0, xhy = 0;
      for (std::size_t i = 0; i < h.dim(); ++i) {
        yhx += y[i] * hx[i];
        xhy += x[i] * hy[i];
      }
      EXPECT_NEAR(yhx, xhy, 1e-10 * std::abs(yhx) + 1e-12);
    }
  }
}

TEST(Models, CommutesWithConservedCharges) {
  std::mt19937_64 rng(5);
  const int m = 4, n = 8;
  // Conserved charges are diagonal in the working frame: total S^z for XXZ,
  // sigma and tau x-parities for AT.
  auto commutator_norm = [&](const CsrMatrix& h, auto charge) {
    const auto v = testing_helpers::random_real(h.dim, rng);
    std::vector<double> qv(h.dim), hv(h.dim), hqv(h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) qv[i] = charge(static_cast<Label>(i)) * v[i];
    h.multiply(v, hv);
    h.multiply(qv, hqv);
    double acc = 0, nv = 0;
    for (std::size_t i = 0; i < h.dim; ++i) {
      const double d = hqv[i] - charge(static_cast<Label>(i)) * hv[i];
      acc += d * d;
      nv += v[i] * v[i];
    }
    return std::sqrt(acc / nv);
  };
  const auto hx = build_hamiltonian({Model::StaggeredXXZ, m, 1.0, 0.6, 1.9}, FullSector{});
  EXPECT_LE(commutator_norm(hx.matrix, [&](Label l) { return 0.5 * (n - 2 * std::popcount(l)); }), 1e-12);
  const auto ha = build_hamiltonian({Model::AshkinTeller, m, 1.0, 0.6, 1.9}, FullSector{});
  EXPECT_LE(commutator_norm(ha.matrix, [&](Label l) { return std::popcount(l & even_bits_mask(n)) % 2 ? -1.0 : 1.0; }), 1e-12);
  EXPECT_LE(commutator_norm(ha.matrix, [&](Label l) { return std::popcount(l & odd_bits_mask(n)) % 2 ? -1.0 : 1.0; }), 1e-12);
}

TEST(Models, DecoupledAtDeltaZero) {
  // Delta = 0: sigma and tau chains are independent transverse-field Ising
  // chains, so the spectrum is the sum set of two Ising spectra.
  const int m = 2;
  oracle::Matrix ising = oracle::Matrix::Zero(4, 4);
  for (int k = 0; k < m; ++k) {
    ising -= oracle::product(m, {{k, 'x'}});
    ising -= oracle::product(m, {{k, 'z'}, {(k + 1) % m, 'z'}});
  }
  const auto e = oracle::spectrum(ising);
  std::vector<double> sums;
  for (Eigen::Index a = 0; a < e.size(); ++a) {
    for (Eigen::Index b = 0; b < e.size(); ++b) sums.push_back(e(a) + e(b));
  }
  std::sort(sums.begin(), sums.end());
  const auto lib = sorted_eigs(to_dense(build_hamiltonian({Model::AshkinTeller, m, 1.0, 0.0, 1.0}, FullSector{}).matrix));
  for (std::size_t i = 0; i < sums.size(); ++i) EXPECT_NEAR(lib(static_cast<Eigen::Index>(i)), sums[i], 1e-12);
}

TEST(Models, ClassifySector) {
  ModelParams at{Model::AshkinTeller, 2, 1.0, 1.0, 1.0};
  EXPECT_EQ(classify_sector(0b0000, at), 0);
  EXPECT_EQ(classify_sector(0b0101, at), 0);
  EXPECT_EQ(classify_sector(0b0010, at), 1);
  EXPECT_EQ(classify_sector(0b0011, at), 2);
  EXPECT_EQ(classify_sector(0b0001, at), 3);
  ModelParams xxz{Model::StaggeredXXZ, 2, 1.0, 1.0, 1.0};
  EXPECT_EQ(classify_sector(0b0011, xxz), 0);
  EXPECT_EQ(classify_sector(0b1111, xxz), -2);
  EXPECT_EQ(classify_sector(0b0000, xxz), 2);
  for (int q = 0; q < 4; ++q) {
    SpinBasis b(6, parity_sector(q));
    for (Label l : b.states()) EXPECT_EQ(classify_sector(l, {Model::AshkinTeller, 3, 1.0, 1.0, 1.0}), q);
  }
}

TEST(Models, LinkVariableRealizations) {
  ModelParams at{Model::AshkinTeller, 3, 1.0, 1.0, 1.0};
  ModelParams xxz{Model::StaggeredXXZ, 3, 1.0, 1.0, 1.0};
  EXPECT_EQ(link_variable(LinkKind::Eta, 4, at).realization,
            PauliString::pair(sigma_bit(2, 3), Axis::Z, sigma_bit(3, 3), Axis::Z));
  EXPECT_EQ(link_variable(LinkKind::Eta, 6, at).realization,
            PauliString::pair(sigma_bit(3, 3), Axis::Z, sigma_bit(1, 3), Axis::Z));
  EXPECT_EQ(link_variable(LinkKind::Gamma, 3, at).realization, PauliString::single(tau_bit(2, 3), Axis::X));
  EXPECT_EQ(link_variable(LinkKind::Gamma, 4, xxz).realization, PauliString::pair(3, Axis::X, 4, Axis::X));
  EXPECT_EQ(link_variable(LinkKind::Eta, 1, xxz).realization, PauliString::pair(0, Axis::X, 1, Axis::X));
  EXPECT_EQ(link_variable(LinkKind::Gamma, 1, xxz).realization, PauliString::pair(0, Axis::Y, 1, Axis::Y));
  EXPECT_EQ(link_variable(LinkKind::Gamma, 6, xxz).realization, PauliString::pair(5, Axis::X, 0, Axis::X));
  EXPECT_THROW(link_variable(LinkKind::Eta, 0, at), ArgumentError);
  EXPECT_THROW(link_variable(LinkKind::Eta, 7, at), ArgumentError);
}

TEST(Models, LinkSquaresActAsIdentity) {
  std::mt19937_64 rng(9);
  for (Model model : {Model::AshkinTeller, Model::StaggeredXXZ}) {
    ModelParams p{model, 3, 1.0, 1.0, 1.0};
    auto b = std::make_shared<const SpinBasis>(6, FullSector{});
    const auto psi = testing_helpers::random_state(b, natural_frame(model), rng);
    for (LinkKind k : {LinkKind::Eta, LinkKind::Gamma}) {
      for (int i = 1; i <= 6; ++i) {
        const auto& s = link_variable(k, i, p).realization;
        const auto out = apply_pauli_string(s, apply_pauli_string(s, psi));
        for (std::size_t a = 0; a < psi.size(); ++a) EXPECT_LT(std::abs(out.amplitudes[a] - psi.amplitudes[a]), 1e-14);
      }
    }
  }
}

TEST(Models, ParameterAndSectorErrors) {
  EXPECT_THROW(ModelParams({Model::AshkinTeller, 1, 1.0, 1.0, 1.0}).validate(), ArgumentError);
  EXPECT_THROW(ModelParams({Model::StaggeredXXZ, 0, 1.0, 1.0, 1.0}).validate(), ArgumentError);
  EXPECT_THROW(ModelParams({Model::StaggeredXXZ, 15, 1.0, 1.0, 1.0}).validate(), CapacityError);
  EXPECT_THROW(build_hamiltonian({Model::AshkinTeller, 2, 1.0, 1.0, 1.0}, SzSector{2}), ArgumentError);
  EXPECT_THROW(build_hamiltonian({Model::StaggeredXXZ, 2, 1.0, 1.0, 1.0}, XParitySector{1, 1}), ArgumentError);
  SpinBasis b(4, SzSector{2});
  const std::vector<PauliString> leaking{PauliString::single(0, Axis::X)};
  EXPECT_THROW(assemble(b, Frame::Z, leaking), SectorViolation);
  const std::vector<PauliString> complex_term{PauliString::single(0, Axis::Z, Complex(0.0, 1.0))};
  EXPECT_THROW(assemble(b, Frame::Z, complex_term), InvalidStateError);
}

TEST(Models, ParallelAssemblyMatchesSerial) {
  ModelParams p{Model::AshkinTeller, 7, 1.0, 0.9, 1.1};
  const SpinBasis b(14, ground_sector(p));
  const auto terms = hamiltonian_terms(p);
  const auto serial = assemble(b, Frame::X, terms, 1);
  const auto par = assemble(b, Frame::X, terms, 3);
  EXPECT_EQ(serial.row_ptr, par.row_ptr);
  EXPECT_EQ(serial.cols, par.cols);
  EXPECT_EQ(serial.values, par.values);
}
