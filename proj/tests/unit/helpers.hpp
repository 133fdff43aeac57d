#pragma once

#include <Eigen/Dense>
#include <random>

#include "atxxz/models.hpp"
#include "atxxz/state.hpp"
#include "dense_oracle.hpp"

namespace testing_helpers {

/// Embeds a sector state into the full 2^n space of its frame.
inline oracle::Vector to_full(const atxxz::QuantumState& psi) {
  const int n = psi.basis->n_spins();
  oracle::Vector v = oracle::Vector::Zero(Eigen::Index{1} << n);
  const auto states = psi.basis->states();
  for (std::size_t i = 0; i < states.size(); ++i) v(static_cast<Eigen::Index>(states[i])) = psi.amplitudes[i];
  return v;
}

/// Library state rewritten in the physical z basis.
inline oracle::Vector to_physical(const atxxz::QuantumState& psi) {
  oracle::Vector v = to_full(psi);
  if (psi.frame == atxxz::Frame::X) v = oracle::hadamard_all(psi.basis->n_spins()) * v;
  return v;
}

inline Eigen::MatrixXd to_dense(const atxxz::CsrMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t r = 0; r < m.dim; ++r) {
    for (std::size_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) d(static_cast<Eigen::Index>(r), m.cols[k]) = m.values[k];
  }
  return d;
}

inline atxxz::QuantumState random_state(atxxz::BasisPtr basis, atxxz::Frame frame, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  atxxz::QuantumState s;
  s.basis = std::move(basis);
  s.frame = frame;
  s.amplitudes.resize(s.basis->size());
  for (auto& a : s.amplitudes) a = {g(rng), g(rng)};
  s.normalize();
  return s;
}

inline std::vector<double> random_real(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  for (auto& x : v) x = g(rng);
  return v;
}

}  // namespace testing_helpers
