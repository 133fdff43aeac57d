#include "atxxz/eigensolve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "atxxz/errors.hpp"

namespace atxxz {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Two passes of classical Gram-Schmidt against every vector in `bases`.
void orthogonalize(std::span<double> w, const std::vector<const std::vector<double>*>& bases) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto* u : bases) axpy(-dot(w, *u), *u, w);
  }
}

std::vector<double> random_vector(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(dim);
  for (auto& x : v) x = dist(rng);
  return v;
}

struct Pair {
  double energy = 0.0;
  std::vector<double> vector;
  double residual = std::numeric_limits<double>::infinity();
  bool converged = false;
};

// Lowest eigenpair of op restricted to the complement of `deflate`.
Pair lowest_pair(const MatVec& op, std::size_t dim, const std::vector<const std::vector<double>*>& deflate,
                 const LanczosOptions& opts, std::mt19937_64& rng, int& iterations) {
  const std::size_t krylov_cap = std::min<std::size_t>(
      static_cast<std::size_t>(std::max(opts.max_krylov, 2)), dim - deflate.size());

  auto fresh_start = [&] {
    for (int attempt = 0; attempt < 8; ++attempt) {
      auto v = random_vector(dim, rng);
      orthogonalize(v, deflate);
      const double n = norm2(v);
      if (n > 1e-8) {
        for (auto& x : v) x /= n;
        return v;
      }
    }
    throw ConvergenceError("could not draw a start vector outside the deflated space",
                           std::numeric_limits<double>::infinity());
  };

  std::vector<double> start = fresh_start();
  Pair best;
  bool used_random_restart = false;
  std::vector<double> w(dim);
  std::vector<double> hv(dim);

  while (iterations < opts.max_iter) {
    std::vector<std::vector<double>> basis;
    basis.reserve(krylov_cap);
    basis.push_back(start);
    std::vector<double> alpha;
    std::vector<double> beta;
    Eigen::VectorXd ritz;
    double theta = 0.0;

    for (std::size_t m = 0;; ++m) {
      op(basis[m], w);
      ++iterations;
      const double a = dot(w, basis[m]);
      alpha.push_back(a);
      axpy(-a, basis[m], w);
      if (m > 0) axpy(-beta[m - 1], basis[m - 1], w);

      std::vector<const std::vector<double>*> against(deflate);
      for (const auto& b : basis) against.push_back(&b);
      orthogonalize(w, against);
      const double b = norm2(w);

      const bool exhausted = basis.size() >= krylov_cap || iterations >= opts.max_iter;
      const bool breakdown = b <= 1e-12 * std::max(1.0, std::abs(a));
      const bool check = exhausted || breakdown || m < 8 || m % 4 == 0;
      if (check) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), alpha.size());
        Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(beta.data(), beta.size());
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        theta = tri.eigenvalues()(0);
        ritz = tri.eigenvectors().col(0);
        const double estimate = std::abs(b * ritz(ritz.size() - 1));
        if (estimate <= 0.1 * opts.tol || exhausted || breakdown) break;
      }
      beta.push_back(b);
      std::vector<double> next(dim);
      for (std::size_t i = 0; i < dim; ++i) next[i] = w[i] / b;
      basis.push_back(std::move(next));
    }

    std::vector<double> y(dim, 0.0);
    for (std::size_t i = 0; i < basis.size(); ++i) axpy(ritz(static_cast<Eigen::Index>(i)), basis[i], y);
    orthogonalize(y, deflate);
    const double ny = norm2(y);
    for (auto& x : y) x /= ny;
    op(y, hv);
    ++iterations;
    theta = dot(y, hv);
    axpy(-theta, y, hv);
    const double residual = norm2(hv);

    const bool improved = residual < 0.999 * best.residual;
    if (residual < best.residual) best = Pair{theta, y, residual, false};
    if (residual <= opts.tol) {
      best.converged = true;
      return best;
    }
    if (!improved && !used_random_restart) {
      used_random_restart = true;
      start = fresh_start();
    } else {
      start = best.vector;
    }
  }
  throw ConvergenceError("Lanczos did not reach residual " + std::to_string(opts.tol) + " within " +
                             std::to_string(opts.max_iter) + " iterations (best " +
                             std::to_string(best.residual) + ")",
                         best.residual);
}

void finish(EigenResult& r, double gap_rel_tol) {
  if (r.energies.size() >= 2) {
    r.gap = r.energies[1] - r.energies[0];
    r.degenerate = *r.gap < gap_rel_tol * std::abs(r.energies[0]);
  }
}

}  // namespace

EigenResult dense_spectrum(const CsrMatrix& m) {
  if (m.dim > kDenseMaxDim) {
    throw CapacityError("dense diagonalization capped at dimension " + std::to_string(kDenseMaxDim) +
                        ", got " + std::to_string(m.dim));
  }
  const auto n = static_cast<Eigen::Index>(m.dim);
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t r = 0; r < m.dim; ++r) {
    for (std::size_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) {
      dense(static_cast<Eigen::Index>(r), m.cols[k]) = m.values[k];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("dense eigensolver failed", std::numeric_limits<double>::infinity());
  }
  EigenResult r;
  for (Eigen::Index i = 0; i < n; ++i) {
    r.energies.push_back(solver.eigenvalues()(i));
    const Eigen::VectorXd v = solver.eigenvectors().col(i);
    r.vectors.emplace_back(v.data(), v.data() + n);
    r.residuals.push_back((dense * v - solver.eigenvalues()(i) * v).norm());
    r.converged.push_back(true);
  }
  finish(r, LanczosOptions{}.gap_rel_tol);
  return r;
}

EigenResult dense_spectrum(const SparseHamiltonian& h) {
  EigenResult r = dense_spectrum(h.matrix);
  attach_states(r, h);
  return r;
}

EigenResult lanczos_ground(const MatVec& op, std::size_t dim, const LanczosOptions& opts) {
  if (opts.k != 1 && opts.k != 2) throw ArgumentError("lanczos_ground supports k = 1 or 2");
  if (!(opts.tol > 0.0)) throw ArgumentError("tolerance must be positive");
  if (opts.max_iter < 1) throw ArgumentError("max_iter must be positive");
  if (dim < static_cast<std::size_t>(opts.k)) {
    throw ArgumentError("dimension " + std::to_string(dim) + " smaller than k=" + std::to_string(opts.k));
  }

  std::mt19937_64 rng(opts.seed);
  EigenResult r;
  std::vector<const std::vector<double>*> deflate;
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(opts.k));
  for (int level = 0; level < opts.k; ++level) {
    pairs.push_back(lowest_pair(op, dim, deflate, opts, rng, r.iterations));
    deflate.push_back(&pairs.back().vector);
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.energy < b.energy; });
  for (auto& p : pairs) {
    r.energies.push_back(p.energy);
    r.residuals.push_back(p.residual);
    r.converged.push_back(p.converged);
    r.vectors.push_back(std::move(p.vector));
  }
  finish(r, opts.gap_rel_tol);
  return r;
}

EigenResult lanczos_ground(const CsrMatrix& m, const LanczosOptions& opts) {
  return lanczos_ground([&m](std::span<const double> x, std::span<double> y) { m.multiply(x, y); },
                        m.dim, opts);
}

EigenResult lanczos_ground(const SparseHamiltonian& h, const LanczosOptions& opts) {
  EigenResult r = lanczos_ground(h.matrix, opts);
  attach_states(r, h);
  return r;
}

void attach_states(EigenResult& result, const SparseHamiltonian& h) {
  result.states.clear();
  for (std::size_t i = 0; i < result.vectors.size(); ++i) {
    QuantumState s;
    s.basis = h.basis;
    s.frame = h.frame;
    s.energy = result.energies[i];
    s.amplitudes.assign(result.vectors[i].begin(), result.vectors[i].end());
    result.states.push_back(std::move(s));
  }
}

EigenResult solve_ground_sector(const ModelParams& p, const LanczosOptions& opts) {
  return lanczos_ground(build_hamiltonian(p, ground_sector(p)), opts);
}

}  // namespace atxxz
