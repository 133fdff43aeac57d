#include "atxxz/spin_basis.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "atxxz/errors.hpp"

namespace atxxz {

namespace {

bool parity_matches(Label bits, int parity) {
  const bool odd = (std::popcount(bits) & 1) != 0;
  return parity == (odd ? -1 : 1);
}

}  // namespace

std::string to_string(const Sector& sector) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FullSector>) {
          os << "full";
        } else if constexpr (std::is_same_v<T, SzSector>) {
          os << "sz(n_up=" << s.n_up << ")";
        } else {
          os << "xparity(" << (s.p1 > 0 ? '+' : '-') << ',' << (s.p2 > 0 ? '+' : '-')
             << ')';
        }
      },
      sector);
  return os.str();
}

Label even_bits_mask(int n_spins) {
  Label mask = 0;
  for (int b = 0; b < n_spins; b += 2) mask |= Label{1} << b;
  return mask;
}

Label odd_bits_mask(int n_spins) {
  Label mask = 0;
  for (int b = 1; b < n_spins; b += 2) mask |= Label{1} << b;
  return mask;
}

SpinBasis::SpinBasis(int n_spins, Sector sector) : n_spins_(n_spins), sector_(sector) {
  if (n_spins < 1 || n_spins > kMaxSpins) {
    throw CapacityError("n_spins=" + std::to_string(n_spins) + " outside supported range [1, " +
                        std::to_string(kMaxSpins) + "]");
  }
  const Label full = Label{1} << n_spins;

  if (std::holds_alternative<FullSector>(sector_)) {
    states_.resize(full);
    for (Label s = 0; s < full; ++s) states_[s] = s;
    return;
  }

  if (const auto* sz = std::get_if<SzSector>(&sector_)) {
    if (sz->n_up < 0 || sz->n_up > n_spins) {
      throw ArgumentError("SzSector n_up=" + std::to_string(sz->n_up) + " outside [0, " +
                          std::to_string(n_spins) + "]");
    }
    if (sz->n_up == 0) {
      states_.push_back(0);
    } else {
      // Gosper's hack walks the fixed-popcount labels in increasing order.
      Label s = (Label{1} << sz->n_up) - 1;
      while (s < full) {
        states_.push_back(s);
        const Label c = s & (~s + 1);
        const Label r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
      }
    }
  } else {
    const auto& xp = std::get<XParitySector>(sector_);
    if ((xp.p1 != 1 && xp.p1 != -1) || (xp.p2 != 1 && xp.p2 != -1)) {
      throw ArgumentError("XParitySector parities must be +1 or -1");
    }
    if (n_spins % 2 != 0) {
      throw ArgumentError("XParitySector needs an even number of interleaved spins");
    }
    const Label even = even_bits_mask(n_spins);
    const Label odd = odd_bits_mask(n_spins);
    states_.reserve(full / 4);
    for (Label s = 0; s < full; ++s) {
      if (parity_matches(s & even, xp.p1) && parity_matches(s & odd, xp.p2)) {
        states_.push_back(s);
      }
    }
  }

  if (!is_full() && n_spins_ <= kDenseLookupSpins) {
    dense_lookup_.assign(full, -1);
    for (std::size_t i = 0; i < states_.size(); ++i) {
      dense_lookup_[states_[i]] = static_cast<std::int32_t>(i);
    }
  }
}

std::optional<std::size_t> SpinBasis::find(Label label) const noexcept {
  if (label >> n_spins_ != 0) return std::nullopt;
  if (is_full()) return static_cast<std::size_t>(label);
  if (!dense_lookup_.empty()) {
    const auto idx = dense_lookup_[label];
    if (idx < 0) return std::nullopt;
    return static_cast<std::size_t>(idx);
  }
  const auto it = std::lower_bound(states_.begin(), states_.end(), label);
  if (it == states_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::size_t SpinBasis::index_of(Label label) const {
  if (auto idx = find(label)) return *idx;
  throw SectorViolation("label " + std::to_string(label) + " is not in basis " +
                        to_string(sector_));
}

BasisPtr build_basis(int n_spins, Sector sector) {
  return std::make_shared<const SpinBasis>(n_spins, sector);
}

}  // namespace atxxz
