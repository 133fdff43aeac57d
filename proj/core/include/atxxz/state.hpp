#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "atxxz/pauli.hpp"
#include "atxxz/spin_basis.hpp"

namespace atxxz {

/// Amplitude vector over a SpinBasis. The frame records which physical
/// Pauli is diagonal in the computational labels.
struct QuantumState {
  BasisPtr basis;
  Frame frame = Frame::Z;
  std::vector<Complex> amplitudes;
  double energy = std::numeric_limits<double>::quiet_NaN();

  std::size_t size() const noexcept { return amplitudes.size(); }
  double norm() const;
  /// Throws InvalidStateError on a zero vector.
  void normalize();
};

QuantumState basis_state(BasisPtr basis, Label label, Frame frame = Frame::Z);

Complex inner(const QuantumState& bra, const QuantumState& ket);

/// Returns s * psi. Throws SectorViolation when the string leaves psi's
/// restricted basis, ArgumentError when a factor lies outside the chain.
QuantumState apply_pauli_string(const PauliString& s, const QuantumState& psi);

/// <psi|s|psi> for normalized psi; terms leaving the sector contribute
/// nothing. An imaginary part above 1e-10 throws
/// InvalidStateError.
double expectation(const QuantumState& psi, const PauliString& s);

}  // namespace atxxz
