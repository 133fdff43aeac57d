#include "atxxz/models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "atxxz/errors.hpp"
#include "atxxz/parallel.hpp"

namespace atxxz {

namespace {

int wrap(int one_based, int period) { return ((one_based - 1) % period + period) % period; }

bool even_parity(Label bits) { return (std::popcount(bits) & 1) == 0; }

}  // namespace

std::string model_name(Model model) {
  return model == Model::AshkinTeller ? "at" : "xxz";
}

Model parse_model(const std::string& name) {
  if (name == "at" || name == "ashkin-teller") return Model::AshkinTeller;
  if (name == "xxz" || name == "staggered-xxz") return Model::StaggeredXXZ;
  throw ArgumentError("unknown model '" + name + "' (expected at or xxz)");
}

void ModelParams::validate() const {
  const int min_sites = model == Model::AshkinTeller ? 2 : 1;
  if (m_sites < min_sites) {
    throw ArgumentError("m_sites=" + std::to_string(m_sites) + " below minimum " +
                        std::to_string(min_sites) + " for model " + model_name(model));
  }
  if (n_spins() > kMaxSpins) {
    throw CapacityError("chain of " + std::to_string(n_spins()) + " spins exceeds capacity");
  }
  if (!(j_coupling > 0.0)) throw ArgumentError("j_coupling must be positive");
  if (!std::isfinite(delta) || !std::isfinite(beta)) {
    throw ArgumentError("delta and beta must be finite");
  }
}

int sigma_bit(int j, int m_sites) { return 2 * wrap(j, m_sites); }
int tau_bit(int j, int m_sites) { return 2 * wrap(j, m_sites) + 1; }
int xxz_bit(int i, int m_sites) { return wrap(i, 2 * m_sites); }

Frame natural_frame(Model model) {
  return model == Model::AshkinTeller ? Frame::X : Frame::Z;
}

Sector ground_sector(const ModelParams& p) {
  if (p.model == Model::AshkinTeller) return XParitySector{1, 1};
  return SzSector{p.m_sites};
}

XParitySector parity_sector(int q) {
  switch (q) {
    case 0:
      return {1, 1};
    case 1:
      return {1, -1};
    case 2:
      return {-1, -1};
    case 3:
      return {-1, 1};
    default:
      throw ArgumentError("parity label Q must be in {0,1,2,3}");
  }
}

std::vector<PauliString> hamiltonian_terms(const ModelParams& p) {
  p.validate();
  const double J = p.j_coupling;
  const int M = p.m_sites;
  std::vector<PauliString> terms;

  if (p.model == Model::AshkinTeller) {
    for (int j = 1; j <= M; ++j) {
      const int s = sigma_bit(j, M), t = tau_bit(j, M);
      const int s1 = sigma_bit(j + 1, M), t1 = tau_bit(j + 1, M);
      terms.push_back(PauliString::single(s, Axis::X, -J));
      terms.push_back(PauliString::single(t, Axis::X, -J));
      terms.push_back(PauliString::pair(s, Axis::X, t, Axis::X, -J * p.delta));
      terms.push_back(PauliString::pair(s, Axis::Z, s1, Axis::Z, -J * p.beta));
      terms.push_back(PauliString::pair(t, Axis::Z, t1, Axis::Z, -J * p.beta));
      terms.push_back(PauliString({{s, Axis::Z}, {s1, Axis::Z}, {t, Axis::Z}, {t1, Axis::Z}},
                                  -J * p.beta * p.delta));
    }
    return terms;
  }

  // -J c [x x + y y - delta z z] on the bond (a, b), with c = 1 on the
  // (2j-1, 2j) bonds and c = beta on the (2j, 2j+1) bonds.
  auto bond = [&](int a, int b, double c) {
    terms.push_back(PauliString::pair(a, Axis::X, b, Axis::X, -J * c));
    terms.push_back(PauliString::pair(a, Axis::Y, b, Axis::Y, -J * c));
    terms.push_back(PauliString::pair(a, Axis::Z, b, Axis::Z, J * c * p.delta));
  };
  for (int j = 1; j <= M; ++j) {
    bond(xxz_bit(2 * j - 1, M), xxz_bit(2 * j, M), 1.0);
    bond(xxz_bit(2 * j, M), xxz_bit(2 * j + 1, M), p.beta);
  }
  return terms;
}

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t r = 0; r < dim; ++r) {
    double acc = 0.0;
    for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) acc += values[k] * x[cols[k]];
    y[r] = acc;
  }
}

double CsrMatrix::at(std::size_t row, std::size_t col) const {
  const auto first = cols.begin() + static_cast<std::ptrdiff_t>(row_ptr[row]);
  const auto last = cols.begin() + static_cast<std::ptrdiff_t>(row_ptr[row + 1]);
  const auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(col));
  if (it == last || *it != col) return 0.0;
  return values[static_cast<std::size_t>(it - cols.begin())];
}

CsrMatrix CsrMatrix::diagonal(std::span<const double> diag) {
  CsrMatrix m;
  m.dim = diag.size();
  m.row_ptr.resize(m.dim + 1);
  for (std::size_t i = 0; i < m.dim; ++i) {
    m.row_ptr[i + 1] = i + 1;
    m.cols.push_back(static_cast<std::uint32_t>(i));
    m.values.push_back(diag[i]);
  }
  return m;
}

CsrMatrix CsrMatrix::from_dense(std::span<const double> row_major, std::size_t dim) {
  if (row_major.size() != dim * dim) throw ArgumentError("dense matrix size mismatch");
  CsrMatrix m;
  m.dim = dim;
  m.row_ptr.assign(1, 0);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const double v = row_major[r * dim + c];
      if (v != 0.0) {
        m.cols.push_back(static_cast<std::uint32_t>(c));
        m.values.push_back(v);
      }
    }
    m.row_ptr.push_back(m.values.size());
  }
  return m;
}

CsrMatrix assemble(const SpinBasis& basis, Frame frame, std::span<const PauliString> terms,
                   int threads) {
  for (const auto& t : terms) {
    if (t.max_site() >= basis.n_spins()) {
      throw ArgumentError("term " + t.to_string() + " acts outside the basis");
    }
  }
  const auto states = basis.states();
  const std::size_t dim = states.size();

  struct Chunk {
    std::vector<std::size_t> row_len;
    std::vector<std::uint32_t> cols;
    std::vector<double> values;
  };
  const int workers = dim < 4096 ? 1 : threads;
  std::vector<Chunk> chunks(static_cast<std::size_t>(std::max(workers, 1)));

  parallel_chunks(dim, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    Chunk& out = chunks[w];
    std::vector<std::pair<std::uint32_t, Complex>> row;
    std::vector<std::pair<Label, Complex>> leak;
    for (std::size_t r = begin; r < end; ++r) {
      row.clear();
      leak.clear();
      for (const auto& t : terms) {
        // <target|t|label> = amp, so row r receives conj(amp) at column target.
        const auto [target, amp] = t.act(states[r], frame);
        const auto c = basis.find(target);
        if (!c) {
          leak.emplace_back(target, amp);
          continue;
        }
        row.emplace_back(static_cast<std::uint32_t>(*c), std::conj(amp));
      }
      // Out-of-sector images (single XX or YY strings) must cancel.
      std::sort(leak.begin(), leak.end(),
                [](const auto& l, const auto& r2) { return l.first < r2.first; });
      for (std::size_t k = 0; k < leak.size();) {
        const auto target = leak[k].first;
        Complex sum{};
        for (; k < leak.size() && leak[k].first == target; ++k) sum += leak[k].second;
        if (std::abs(sum) > 1e-12) {
          throw SectorViolation("Hamiltonian leaves sector " + to_string(basis.sector()));
        }
      }
      std::sort(row.begin(), row.end(),
                [](const auto& l, const auto& r2) { return l.first < r2.first; });
      std::size_t len = 0;
      for (std::size_t k = 0; k < row.size();) {
        const auto col = row[k].first;
        Complex sum{};
        for (; k < row.size() && row[k].first == col; ++k) sum += row[k].second;
        if (std::abs(sum.imag()) > 1e-12) {
          throw InvalidStateError("complex matrix element in a real Hamiltonian");
        }
        if (sum.real() == 0.0) continue;
        out.cols.push_back(col);
        out.values.push_back(sum.real());
        ++len;
      }
      out.row_len.push_back(len);
    }
  });

  CsrMatrix m;
  m.dim = dim;
  m.row_ptr.reserve(dim + 1);
  for (const auto& ch : chunks) {
    for (auto len : ch.row_len) m.row_ptr.push_back(m.row_ptr.back() + len);
    m.cols.insert(m.cols.end(), ch.cols.begin(), ch.cols.end());
    m.values.insert(m.values.end(), ch.values.begin(), ch.values.end());
  }
  return m;
}

SparseHamiltonian build_hamiltonian(const ModelParams& p, const Sector& sector, int threads) {
  p.validate();
  if (p.model == Model::AshkinTeller && std::holds_alternative<SzSector>(sector)) {
    throw ArgumentError("Ashkin-Teller chain does not conserve S^z; use a parity sector");
  }
  if (p.model == Model::StaggeredXXZ && std::holds_alternative<XParitySector>(sector)) {
    throw ArgumentError("XXZ chain is built in the z frame; use an S^z sector");
  }
  SparseHamiltonian h;
  h.params = p;
  h.frame = natural_frame(p.model);
  h.basis = build_basis(p.n_spins(), sector);
  const auto terms = hamiltonian_terms(p);
  h.matrix = assemble(*h.basis, h.frame, terms, threads);
  return h;
}

int classify_sector(Label label, const ModelParams& p) {
  const int n = p.n_spins();
  if (p.model == Model::AshkinTeller) {
    const bool p1 = even_parity(label & even_bits_mask(n));
    const bool p2 = even_parity(label & odd_bits_mask(n));
    if (p1 && p2) return 0;
    if (p1) return 1;
    if (!p2) return 2;
    return 3;
  }
  return p.m_sites - std::popcount(label);
}

std::string link_name(LinkKind kind, int index) {
  return std::string(kind == LinkKind::Eta ? "eta" : "gamma") + "_" + std::to_string(index);
}

LinkVariable link_variable(LinkKind kind, int index, const ModelParams& p) {
  const int M = p.m_sites;
  if (index < 1 || index > 2 * M) {
    throw ArgumentError("link index " + std::to_string(index) + " outside [1, " +
                        std::to_string(2 * M) + "]");
  }
  const bool odd = index % 2 == 1;
  const int j = odd ? (index + 1) / 2 : index / 2;
  const bool eta = kind == LinkKind::Eta;
  LinkVariable lv{kind, index, {}};

  if (p.model == Model::AshkinTeller) {
    if (odd) {
      lv.realization = PauliString::single(eta ? sigma_bit(j, M) : tau_bit(j, M), Axis::X);
    } else if (eta) {
      lv.realization = PauliString::pair(sigma_bit(j, M), Axis::Z, sigma_bit(j + 1, M), Axis::Z);
    } else {
      lv.realization = PauliString::pair(tau_bit(j, M), Axis::Z, tau_bit(j + 1, M), Axis::Z);
    }
    return lv;
  }

  if (odd) {
    const Axis a = eta ? Axis::X : Axis::Y;
    lv.realization = PauliString::pair(xxz_bit(2 * j - 1, M), a, xxz_bit(2 * j, M), a);
  } else {
    const Axis a = eta ? Axis::Y : Axis::X;
    lv.realization = PauliString::pair(xxz_bit(2 * j, M), a, xxz_bit(2 * j + 1, M), a);
  }
  return lv;
}

}  // namespace atxxz
