#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "atxxz/eigensolve.hpp"
#include "atxxz/errors.hpp"
#include "helpers.hpp"

using namespace atxxz;

TEST(Dense, TrivialMatrices) {
  const std::vector<double> one{3.5};
  EXPECT_DOUBLE_EQ(dense_spectrum(CsrMatrix::from_dense(one, 1)).energies[0], 3.5);
  const std::vector<double> ones(4, 1.0);
  const auto id = dense_spectrum(CsrMatrix::diagonal(ones));
  for (double e : id.energies) EXPECT_DOUBLE_EQ(e, 1.0);
  EXPECT_TRUE(id.degenerate);
}

TEST(Dense, DimerPairAgainstAnalyticBlocks) {
  // In the S^z basis the 4x4 splits into two diagonal entries and a 2x2
  // block [[a, b], [b, a]] with eigenvalues a +- b.
  ModelParams p{Model::StaggeredXXZ, 1, 1.0, 1.0, 1.0};
  const auto h = build_hamiltonian(p, FullSector{});
  const double a = h.matrix.at(1, 1), b = h.matrix.at(1, 2);
  const double lowest = std::min({h.matrix.at(0, 0), h.matrix.at(3, 3), a - std::abs(b), a + std::abs(b)});
  EXPECT_NEAR(dense_spectrum(h).energies[0], lowest, 1e-12);
  EXPECT_NEAR(lowest, -6.0, 1e-12);
}

TEST(Dense, CapacityLimit) {
  CsrMatrix big;
  big.dim = kDenseMaxDim + 1;
  big.row_ptr.assign(big.dim + 1, 0);
  EXPECT_THROW(dense_spectrum(big), CapacityError);
}

TEST(Lanczos, DiagonalOperator) {
  std::vector<double> d(200);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<double>(i);
  const auto r = lanczos_ground(CsrMatrix::diagonal(d));
  EXPECT_NEAR(r.energies[0], 0.0, 1e-10);
  EXPECT_NEAR(std::abs(r.vectors[0][0]), 1.0, 1e-9);
  EXPECT_TRUE(r.converged[0]);
}

TEST(Lanczos, MatchesDenseAndOracle) {
  for (Model model : {Model::AshkinTeller, Model::StaggeredXXZ}) {
    for (int m : {2, 3, 4, 5}) {
      ModelParams p{model, m, 1.0, 0.4 + 0.2 * m, 0.7 + 0.1 * m};
      const auto h = build_hamiltonian(p, FullSector{});
      const double dense = dense_spectrum(h.matrix).energies[0];
      const auto lz = lanczos_ground(h);
      EXPECT_NEAR(lz.energies[0], dense, 1e-9) << model_name(model) << " M=" << m;
      EXPECT_GE(lz.energies[0], dense - 1e-10);
      EXPECT_LE(lz.residuals[0], 1e-10);
      if (m <= 4) {
        const auto ref = model == Model::AshkinTeller ? oracle::ashkin_teller(m, p.delta, p.beta)
                                                      : oracle::staggered_xxz(m, p.delta, p.beta);
        EXPECT_NEAR(lz.energies[0], oracle::ground(ref).energy, 1e-9);
      }
    }
  }
}

TEST(Lanczos, SectorGroundEqualsFullGround) {
  for (Model model : {Model::AshkinTeller, Model::StaggeredXXZ}) {
    for (int m : {2, 3, 4, 5, 6}) {
      ModelParams p{model, m, 1.0, 1.1, 0.9};
      const auto full = lanczos_ground(build_hamiltonian(p, FullSector{}));
      const auto sector = solve_ground_sector(p);
      EXPECT_NEAR(full.energies[0], sector.energies[0], 1e-9);
    }
  }
}

TEST(Lanczos, ResidualContractOnReturnedState) {
  ModelParams p{Model::AshkinTeller, 6, 1.0, 0.8, 1.2};
  const auto h = build_hamiltonian(p, ground_sector(p));
  const auto r = lanczos_ground(h);
  std::vector<double> hv(h.dim());
  h.matrix.multiply(r.vectors[0], hv);
  double res = 0, nrm = 0;
  for (std::size_t i = 0; i < hv.size(); ++i) {
    res += std::pow(hv[i] - r.energies[0] * r.vectors[0][i], 2);
    nrm += r.vectors[0][i] * r.vectors[0][i];
  }
  EXPECT_NEAR(nrm, 1.0, 1e-12);
  EXPECT_LE(std::sqrt(res), 1e-10);
  ASSERT_EQ(r.states.size(), 1u);
  EXPECT_EQ(r.states[0].frame, Frame::X);
}

TEST(Lanczos, SecondLevelAndGap) {
  ModelParams p{Model::StaggeredXXZ, 4, 1.0, 0.5, 1.5};
  const auto h = build_hamiltonian(p, ground_sector(p));
  const auto dense = dense_spectrum(h.matrix);
  LanczosOptions o;
  o.k = 2;
  const auto r = lanczos_ground(h, o);
  ASSERT_EQ(r.energies.size(), 2u);
  EXPECT_NEAR(r.energies[1], dense.energies[1], 1e-9);
  ASSERT_TRUE(r.gap.has_value());
  EXPECT_NEAR(*r.gap, dense.energies[1] - dense.energies[0], 1e-9);
  EXPECT_FALSE(r.degenerate);
}

TEST(Lanczos, FlagsDegeneracy) {
  std::vector<double> d{-2.0, -2.0, 0.5, 1.0, 3.0, 4.0, 5.0, 6.0};
  LanczosOptions o;
  o.k = 2;
  const auto r = lanczos_ground(CsrMatrix::diagonal(d), o);
  EXPECT_NEAR(r.energies[0], -2.0, 1e-10);
  EXPECT_NEAR(r.energies[1], -2.0, 1e-10);
  EXPECT_TRUE(r.degenerate);
}

TEST(Lanczos, DeterministicGivenSeed) {
  ModelParams p{Model::AshkinTeller, 5, 1.0, 1.3, 0.6};
  const auto h = build_hamiltonian(p, ground_sector(p));
  const auto a = lanczos_ground(h), b = lanczos_ground(h);
  EXPECT_EQ(a.energies, b.energies);
  EXPECT_EQ(a.vectors, b.vectors);
}

TEST(Lanczos, ConvergenceFailureCarriesResidual) {
  ModelParams p{Model::AshkinTeller, 6, 1.0, 0.8, 1.2};
  const auto h = build_hamiltonian(p, ground_sector(p));
  LanczosOptions o;
  o.max_iter = 3;
  try {
    lanczos_ground(h, o);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.best_residual(), o.tol);
    EXPECT_TRUE(std::isfinite(e.best_residual()));
  }
}

TEST(Lanczos, ArgumentErrors) {
  const std::vector<double> d{1.0};
  LanczosOptions o;
  o.k = 2;
  EXPECT_THROW(lanczos_ground(CsrMatrix::diagonal(d), o), ArgumentError);
  o.k = 3;
  EXPECT_THROW(lanczos_ground(CsrMatrix::diagonal(d), o), ArgumentError);
  o.k = 1;
  o.tol = 0.0;
  EXPECT_THROW(lanczos_ground(CsrMatrix::diagonal(d), o), ArgumentError);
}

TEST(Lanczos, TinyDimensionsExhaustKrylovSpace) {
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = 2.0 - static_cast<double>(i);
    EXPECT_NEAR(lanczos_ground(CsrMatrix::diagonal(d)).energies[0], 3.0 - static_cast<double>(n), 1e-12);
  }
}
