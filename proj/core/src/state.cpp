#include "atxxz/state.hpp"

#include <cmath>

#include "atxxz/errors.hpp"

namespace atxxz {

double QuantumState::norm() const {
  double acc = 0.0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return std::sqrt(acc);
}

void QuantumState::normalize() {
  const double n = norm();
  if (n == 0.0) throw InvalidStateError("cannot normalize a zero state");
  for (auto& a : amplitudes) a /= n;
}

QuantumState basis_state(BasisPtr basis, Label label, Frame frame) {
  QuantumState psi;
  psi.frame = frame;
  psi.amplitudes.assign(basis->size(), Complex{});
  psi.amplitudes[basis->index_of(label)] = 1.0;
  psi.basis = std::move(basis);
  return psi;
}

Complex inner(const QuantumState& bra, const QuantumState& ket) {
  if (bra.basis != ket.basis && (bra.basis->n_spins() != ket.basis->n_spins() ||
                                 bra.basis->sector() != ket.basis->sector())) {
    throw ArgumentError("inner product between states on different bases");
  }
  if (bra.frame != ket.frame) throw ArgumentError("inner product between different frames");
  Complex acc{};
  for (std::size_t i = 0; i < bra.size(); ++i) acc += std::conj(bra.amplitudes[i]) * ket.amplitudes[i];
  return acc;
}

QuantumState apply_pauli_string(const PauliString& s, const QuantumState& psi) {
  const SpinBasis& basis = *psi.basis;
  if (s.max_site() >= basis.n_spins()) {
    throw ArgumentError("Pauli string " + s.to_string() + " acts outside a " +
                        std::to_string(basis.n_spins()) + "-spin chain");
  }
  QuantumState out;
  out.basis = psi.basis;
  out.frame = psi.frame;
  out.amplitudes.assign(psi.size(), Complex{});
  const auto states = basis.states();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto [target, amp] = s.act(states[i], psi.frame);
    const auto j = basis.find(target);
    if (!j) {
      throw SectorViolation("Pauli string " + s.to_string() + " leaves sector " +
                            to_string(basis.sector()));
    }
    out.amplitudes[*j] += amp * psi.amplitudes[i];
  }
  return out;
}

double expectation(const QuantumState& psi, const PauliString& s) {
  const SpinBasis& basis = *psi.basis;
  if (s.max_site() >= basis.n_spins()) {
    throw ArgumentError("Pauli string " + s.to_string() + " acts outside a " +
                        std::to_string(basis.n_spins()) + "-spin chain");
  }
  // Components mapped out of the sector are orthogonal to psi.
  Complex value{};
  const auto states = basis.states();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto [target, amp] = s.act(states[i], psi.frame);
    if (const auto j = basis.find(target)) value += std::conj(psi.amplitudes[*j]) * amp * psi.amplitudes[i];
  }
  if (std::abs(value.imag()) > 1e-10) {
    throw InvalidStateError("expectation of " + s.to_string() + " has imaginary part " +
                            std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace atxxz
