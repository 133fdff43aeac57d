#include "atxxz/pauli.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "atxxz/errors.hpp"

namespace atxxz {

namespace {

constexpr Complex kI{0.0, 1.0};

// sigma^a sigma^b = i eps_abc sigma^c for a != b.
std::pair<Axis, Complex> multiply_axes(Axis a, Axis b) {
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const int ic = 3 - ia - ib;
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {static_cast<Axis>(ic), cyclic ? kI : -kI};
}

}  // namespace

char axis_name(Axis axis) {
  switch (axis) {
    case Axis::X:
      return 'x';
    case Axis::Y:
      return 'y';
    case Axis::Z:
      return 'z';
  }
  return '?';
}

PauliString::PauliString(std::vector<PauliFactor> factors, Complex coefficient)
    : factors_(std::move(factors)), coefficient_(coefficient) {
  std::sort(factors_.begin(), factors_.end(),
            [](const PauliFactor& l, const PauliFactor& r) { return l.site < r.site; });
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].site < 0 || factors_[k].site >= 64) {
      throw ArgumentError("Pauli factor site " + std::to_string(factors_[k].site) +
                          " out of range");
    }
    if (k > 0 && factors_[k].site == factors_[k - 1].site) {
      throw ArgumentError("Pauli string repeats site " + std::to_string(factors_[k].site));
    }
  }
  rebuild_masks();
}

PauliString PauliString::single(int site, Axis axis, Complex coefficient) {
  return PauliString({{site, axis}}, coefficient);
}

PauliString PauliString::pair(int site_a, Axis axis_a, int site_b, Axis axis_b,
                              Complex coefficient) {
  return PauliString({{site_a, axis_a}, {site_b, axis_b}}, coefficient);
}

int PauliString::max_site() const noexcept {
  return factors_.empty() ? -1 : factors_.back().site;
}

PauliString PauliString::scaled(Complex factor) const {
  PauliString out = *this;
  out.coefficient_ *= factor;
  out.rebuild_masks();
  return out;
}

void PauliString::rebuild_masks() {
  z_masks_ = FrameMasks{0, 0, coefficient_};
  x_masks_ = FrameMasks{0, 0, coefficient_};
  for (const auto& f : factors_) {
    const Label bit = Label{1} << f.site;
    switch (f.axis) {
      case Axis::X:
        z_masks_.flip |= bit;
        x_masks_.sign |= bit;
        break;
      case Axis::Z:
        z_masks_.sign |= bit;
        x_masks_.flip |= bit;
        break;
      case Axis::Y:
        // sigma^y|b> = i (-1)^b |1-b>; the Hadamard frame sees -sigma^y.
        z_masks_.flip |= bit;
        z_masks_.sign |= bit;
        z_masks_.prefactor *= kI;
        x_masks_.flip |= bit;
        x_masks_.sign |= bit;
        x_masks_.prefactor *= -kI;
        break;
    }
  }
}

std::pair<Label, Complex> PauliString::act(Label label, Frame frame) const noexcept {
  const FrameMasks& m = frame == Frame::Z ? z_masks_ : x_masks_;
  const bool negative = (std::popcount(label & m.sign) & 1) != 0;
  return {label ^ m.flip, negative ? -m.prefactor : m.prefactor};
}

PauliString operator*(const PauliString& lhs, const PauliString& rhs) {
  std::vector<PauliFactor> out;
  Complex phase = lhs.coefficient_ * rhs.coefficient_;
  auto l = lhs.factors_.begin();
  auto r = rhs.factors_.begin();
  while (l != lhs.factors_.end() || r != rhs.factors_.end()) {
    if (r == rhs.factors_.end() || (l != lhs.factors_.end() && l->site < r->site)) {
      out.push_back(*l++);
    } else if (l == lhs.factors_.end() || r->site < l->site) {
      out.push_back(*r++);
    } else {
      if (l->axis != r->axis) {
        const auto [axis, factor] = multiply_axes(l->axis, r->axis);
        out.push_back({l->site, axis});
        phase *= factor;
      }
      ++l;
      ++r;
    }
  }
  return PauliString(std::move(out), phase);
}

std::string PauliString::to_string() const {
  std::ostringstream os;
  os << '(' << coefficient_.real();
  if (coefficient_.imag() != 0.0) os << (coefficient_.imag() < 0 ? "-" : "+") << std::abs(coefficient_.imag()) << 'i';
  os << ')';
  if (factors_.empty()) os << " I";
  for (const auto& f : factors_) os << ' ' << axis_name(f.axis) << f.site;
  return os.str();
}

}  // namespace atxxz
