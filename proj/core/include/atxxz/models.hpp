#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "atxxz/pauli.hpp"
#include "atxxz/spin_basis.hpp"

namespace atxxz {

enum class Model { AshkinTeller, StaggeredXXZ };

std::string model_name(Model model);  // "at" / "xxz"
Model parse_model(const std::string& name);

/// Couplings of either chain. For the Ashkin-Teller chain m_sites counts
/// sites carrying a (sigma, tau) pair; the staggered XXZ chain then has
/// 2 * m_sites spins. Both use 2 * m_sites physical spins.
struct ModelParams {
  Model model = Model::StaggeredXXZ;
  int m_sites = 2;
  double j_coupling = 1.0;
  double delta = 1.0;
  double beta = 1.0;

  int n_spins() const noexcept { return 2 * m_sites; }
  /// Throws ArgumentError on m_sites or j_coupling out of range.
  void validate() const;
};

// Physical site -> bit maps, 1-based with periodic wrap.
// Ashkin-Teller: sigma_j -> bit 2(j-1), tau_j -> bit 2(j-1)+1.
int sigma_bit(int j, int m_sites);
int tau_bit(int j, int m_sites);
// XXZ: spin i -> bit i-1.
int xxz_bit(int i, int m_sites);

/// Frame each model is assembled in: x for Ashkin-Teller (parities are
/// diagonal), z for XXZ (S^z is diagonal).
Frame natural_frame(Model model);

/// Sector holding the ground state: Q=0 for Ashkin-Teller, n=0 for XXZ.
Sector ground_sector(const ModelParams& p);

/// XParity(p1, p2) for a parity label Q in {0,1,2,3}.
XParitySector parity_sector(int q);

/// Hamiltonian as a list of real-coefficient Pauli strings in physical axes.
std::vector<PauliString> hamiltonian_terms(const ModelParams& p);

/// Real compressed-sparse-row matrix.
struct CsrMatrix {
  std::size_t dim = 0;
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::uint32_t> cols;
  std::vector<double> values;

  std::size_t nnz() const noexcept { return values.size(); }
  void multiply(std::span<const double> x, std::span<double> y) const;
  /// Entry lookup, zero when absent.
  double at(std::size_t row, std::size_t col) const;

  static CsrMatrix diagonal(std::span<const double> diag);
  static CsrMatrix from_dense(std::span<const double> row_major, std::size_t dim);
};

/// Matrix of sum_t term_t over a basis, in the given frame. Duplicate
/// entries are summed, exact cancellations dropped, columns sorted.
/// Throws SectorViolation when a term leaves the basis and
/// InvalidStateError when an element ends up complex.
CsrMatrix assemble(const SpinBasis& basis, Frame frame, std::span<const PauliString> terms,
                   int threads = 1);

struct SparseHamiltonian {
  BasisPtr basis;
  Frame frame = Frame::Z;
  CsrMatrix matrix;
  ModelParams params;

  std::size_t dim() const noexcept { return matrix.dim; }
};

/// Throws ArgumentError when the sector does not match the model's symmetry
/// (SzSector only for XXZ, XParitySector only for Ashkin-Teller).
SparseHamiltonian build_hamiltonian(const ModelParams& p, const Sector& sector,
                                    int threads = 1);

/// Ashkin-Teller: Q in {0,1,2,3} from the x-frame parities of sigma and tau
/// bits. XXZ: magnetization n = M - r with r the number of set bits.
int classify_sector(Label label, const ModelParams& p);

enum class LinkKind { Eta, Gamma };

struct LinkVariable {
  LinkKind kind = LinkKind::Eta;
  int index = 1;  // 1..2M
  PauliString realization;
};

std::string link_name(LinkKind kind, int index);

/// eta_j / gamma_j of either model, with the wrap at index 2M.
/// Throws ArgumentError for index outside [1, 2M].
LinkVariable link_variable(LinkKind kind, int index, const ModelParams& p);

}  // namespace atxxz
