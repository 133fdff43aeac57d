#pragma once

// Reference implementation for the tests: Hamiltonians built from explicit
// Kronecker products in the physical sigma^z basis, dense diagonalization,
// and partial traces by index arithmetic. Shares no code with atxxz.

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace oracle {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

Matrix pauli(char axis);  // 'i', 'x', 'y', 'z'

/// Operator on n qubits; ops[q] acts on qubit q, qubit q is bit q of the
/// basis index (qubit 0 least significant).
Matrix product(int n, const std::vector<std::pair<int, char>>& ops);

/// Ashkin-Teller chain of m sites: sigma_j on qubit 2(j-1), tau_j on 2(j-1)+1.
Matrix ashkin_teller(int m, double delta, double beta, double j = 1.0);

/// Staggered XXZ chain of 2m spins, spin i on qubit i-1.
Matrix staggered_xxz(int m, double delta, double beta, double j = 1.0);

struct Ground {
  double energy;
  double gap;
  Vector state;
};

Ground ground(const Matrix& h);
Eigen::VectorXd spectrum(const Matrix& h);

/// rho_A for the listed qubits; keep[i] becomes bit i of the local index.
Matrix partial_trace(const Vector& psi, int n, const std::vector<int>& keep);

/// Partial transpose of a k-qubit rho over the local qubits in `a`.
Matrix partial_transpose(const Matrix& rho, int k, const std::vector<int>& a);

double entropy(const Matrix& rho);  // base 2
double min_eigenvalue(const Matrix& rho);

/// Hadamard on every qubit of a k-qubit operator.
Matrix hadamard_all(int k);

}  // namespace oracle
