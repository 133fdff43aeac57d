#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "atxxz/spin_basis.hpp"

namespace atxxz {

using Complex = std::complex<double>;

enum class Axis : std::uint8_t { X, Y, Z };

char axis_name(Axis axis);

/// Which single-spin Pauli is diagonal in the computational basis.
/// Z: the usual sigma^z basis. X: the Hadamard-rotated basis, bit 0 is the
/// sigma^x = +1 state.
enum class Frame : std::uint8_t { Z, X };

struct PauliFactor {
  int site = 0;
  Axis axis = Axis::Z;
  friend bool operator==(const PauliFactor&, const PauliFactor&) = default;
};

/// coefficient * prod_k sigma^{axis_k}_{site_k} on distinct sites.
///
/// Factors are always expressed in physical axes. The frame argument of
/// act() tells the string how physical axes map onto computational bits.
class PauliString {
 public:
  /// Identity with unit coefficient.
  PauliString() { rebuild_masks(); }

  /// Throws ArgumentError for negative or repeated sites.
  explicit PauliString(std::vector<PauliFactor> factors, Complex coefficient = 1.0);

  static PauliString single(int site, Axis axis, Complex coefficient = 1.0);
  static PauliString pair(int site_a, Axis axis_a, int site_b, Axis axis_b,
                          Complex coefficient = 1.0);

  const std::vector<PauliFactor>& factors() const noexcept { return factors_; }
  Complex coefficient() const noexcept { return coefficient_; }
  bool is_identity() const noexcept { return factors_.empty(); }

  /// Largest site index, or -1 for the identity.
  int max_site() const noexcept;

  PauliString scaled(Complex factor) const;

  /// Image of one basis label: returns (target label, amplitude) with
  /// string|label> = amplitude |target>.
  std::pair<Label, Complex> act(Label label, Frame frame) const noexcept;

  /// Operator product with the Pauli multiplication table applied site by site.
  friend PauliString operator*(const PauliString& lhs, const PauliString& rhs);

  std::string to_string() const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.factors_ == b.factors_ && a.coefficient_ == b.coefficient_;
  }

 private:
  struct FrameMasks {
    Label flip = 0;
    Label sign = 0;    // bits contributing (-1)^bit
    Complex prefactor = 1.0;
  };

  void rebuild_masks();

  std::vector<PauliFactor> factors_;  // sorted by site
  Complex coefficient_ = 1.0;
  FrameMasks z_masks_;
  FrameMasks x_masks_;
};

}  // namespace atxxz
