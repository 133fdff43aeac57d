#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace atxxz {

/// Computational basis label: spin j lives in bit j, bit value 0 is the
/// +1 eigenstate of the frame's diagonal Pauli.
using Label = std::uint64_t;

inline constexpr int kMaxSpins = 28;

struct FullSector {
  friend bool operator==(const FullSector&, const FullSector&) = default;
};

/// Fixed number of set bits.
struct SzSector {
  int n_up = 0;
  friend bool operator==(const SzSector&, const SzSector&) = default;
};

/// Popcount parities of the even bits (p1) and odd bits (p2), each +1 or -1.
/// In the Hadamard-rotated frame these are the eigenvalues of
/// prod sigma^x and prod tau^x of the Ashkin-Teller chain.
struct XParitySector {
  int p1 = 1;
  int p2 = 1;
  friend bool operator==(const XParitySector&, const XParitySector&) = default;
};

using Sector = std::variant<FullSector, SzSector, XParitySector>;

std::string to_string(const Sector& sector);

/// Bit masks selecting the even (sigma) and odd (tau) positions of an
/// interleaved chain of n_spins bits.
Label even_bits_mask(int n_spins);
Label odd_bits_mask(int n_spins);

class SpinBasis {
 public:
  /// Enumerates the sector in ascending label order.
  /// Throws CapacityError for n_spins outside [1, kMaxSpins] and
  /// ArgumentError for inconsistent sector parameters.
  SpinBasis(int n_spins, Sector sector);

  int n_spins() const noexcept { return n_spins_; }
  const Sector& sector() const noexcept { return sector_; }
  std::size_t size() const noexcept { return states_.size(); }
  bool is_full() const noexcept { return std::holds_alternative<FullSector>(sector_); }

  std::span<const Label> states() const noexcept { return states_; }
  Label state(std::size_t index) const { return states_.at(index); }

  std::optional<std::size_t> find(Label label) const noexcept;
  bool contains(Label label) const noexcept { return find(label).has_value(); }

  /// Throws SectorViolation when the label is not in the basis.
  std::size_t index_of(Label label) const;

 private:
  int n_spins_;
  Sector sector_;
  std::vector<Label> states_;
  // Dense label -> index table, -1 for absent labels. Only built for
  // restricted sectors with n_spins <= kDenseLookupSpins.
  std::vector<std::int32_t> dense_lookup_;

  static constexpr int kDenseLookupSpins = 24;
};

using BasisPtr = std::shared_ptr<const SpinBasis>;

BasisPtr build_basis(int n_spins, Sector sector);

}  // namespace atxxz
