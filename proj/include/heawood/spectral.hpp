#pragma once

// Laplacian and adjacency spectra via an in-repo cyclic Jacobi rotation
// solver, algebraic connectivity, Fiedler vectors, and the Ramanujan
// spectral-gap check. Everything is dense; graphs here stay small (n up to a
// few hundred).

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "heawood/errors.hpp"
#include "heawood/graph.hpp"
#include "heawood/invariants.hpp"

namespace heawood {

struct SolverOptions {
  double off_tol_rel = 1e-12;  // stop when off-diagonal Frobenius norm < off_tol_rel * ||A||_F
  double value_tol = 1e-10;    // absolute eigenvalue tolerance reported in Spectrum
  int max_sweeps = 100;
};

struct Spectrum {
  std::vector<double> values;  // ascending
  double tol = 1e-10;
};

namespace detail {

// Cyclic Jacobi on a dense symmetric matrix (row-major n*n). Eigenvalues end
// up on the diagonal; if vecs is non-null it accumulates the rotations
// (columns are eigenvectors).
inline void jacobi_eigen(std::vector<double>& a, int n, std::vector<double>* vecs,
                         const SolverOptions& opt) {
  if (vecs) {
    vecs->assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) (*vecs)[static_cast<size_t>(i) * n + i] = 1.0;
  }
  if (n <= 1) return;
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

  double norm2 = 0.0;
  for (double x : a) norm2 += x * x;
  if (norm2 == 0.0) return;
  const double off_target2 = opt.off_tol_rel * opt.off_tol_rel * norm2;

  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    double off2 = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off2 += 2.0 * at(p, q) * at(p, q);
    if (off2 < off_target2) return;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p), aqq = at(q, q);
        // rotation angle from the standard two-by-two diagonalization
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = akp - s * (akq + tau * akp);
          at(p, k) = at(k, p);
          at(k, q) = akq + s * (akp - tau * akq);
          at(q, k) = at(k, q);
        }
        if (vecs) {
          for (int k = 0; k < n; ++k) {
            double& vkp = (*vecs)[static_cast<size_t>(k) * n + p];
            double& vkq = (*vecs)[static_cast<size_t>(k) * n + q];
            const double vp = vkp, vq = vkq;
            vkp = vp - s * (vq + tau * vp);
            vkq = vq + s * (vp - tau * vq);
          }
        }
      }
    }
  }
  throw convergence_error("jacobi solver did not converge within sweep limit");
}

inline std::vector<double> laplacian_matrix(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (int v = 0; v < n; ++v) a[static_cast<size_t>(v) * n + v] = g.degree(v);
  for (const auto& [u, v] : g.edges()) {
    a[static_cast<size_t>(u) * n + v] = -1.0;
    a[static_cast<size_t>(v) * n + u] = -1.0;
  }
  return a;
}

inline std::vector<double> adjacency_matrix(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (const auto& [u, v] : g.edges()) {
    a[static_cast<size_t>(u) * n + v] = 1.0;
    a[static_cast<size_t>(v) * n + u] = 1.0;
  }
  return a;
}

inline Spectrum eigenvalues_of(std::vector<double> a, int n, const SolverOptions& opt) {
  jacobi_eigen(a, n, nullptr, opt);
  Spectrum s;
  s.tol = opt.value_tol;
  s.values.resize(n);
  for (int i = 0; i < n; ++i) s.values[i] = a[static_cast<size_t>(i) * n + i];
  std::sort(s.values.begin(), s.values.end());
  return s;
}

}  // namespace detail

inline Spectrum laplacian_spectrum(const Graph& g, const SolverOptions& opt = {}) {
  return detail::eigenvalues_of(detail::laplacian_matrix(g), g.vertex_count(), opt);
}

inline Spectrum adjacency_spectrum(const Graph& g, const SolverOptions& opt = {}) {
  return detail::eigenvalues_of(detail::adjacency_matrix(g), g.vertex_count(), opt);
}

// Second-smallest Laplacian eigenvalue; zero (within tol) iff disconnected.
inline double algebraic_connectivity(const Graph& g, const SolverOptions& opt = {}) {
  if (g.vertex_count() < 2)
    throw precondition_error("algebraic connectivity needs at least two vertices");
  return laplacian_spectrum(g, opt).values[1];
}

// Eigenvector for the second-smallest Laplacian eigenvalue.
inline std::vector<double> fiedler_vector(const Graph& g, const SolverOptions& opt = {}) {
  const int n = g.vertex_count();
  if (n < 2) throw precondition_error("fiedler vector needs at least two vertices");
  std::vector<double> a = detail::laplacian_matrix(g);
  std::vector<double> vecs;
  detail::jacobi_eigen(a, n, &vecs, opt);
  int second = -1;
  double best0 = 0, best1 = 0;
  int first = -1;
  for (int i = 0; i < n; ++i) {
    const double lam = a[static_cast<size_t>(i) * n + i];
    if (first < 0 || lam < best0) {
      second = first; best1 = best0;
      first = i; best0 = lam;
    } else if (second < 0 || lam < best1) {
      second = i; best1 = lam;
    }
  }
  std::vector<double> f(n);
  for (int k = 0; k < n; ++k) f[k] = vecs[static_cast<size_t>(k) * n + second];
  return f;
}

struct RamanujanCheck {
  int degree = 0;
  double threshold = 0;      // 2*sqrt(d-1)
  double max_other = 0;      // largest |lambda| over adjacency eigenvalues besides one copy of d
  bool ramanujan = false;
  bool boundary = false;     // max_other within 1e-6 of the threshold
};

// d-regular connected graph G is Ramanujan when every adjacency eigenvalue
// other than d has absolute value at most 2*sqrt(d-1).
inline RamanujanCheck ramanujan_check(const Graph& g, const SolverOptions& opt = {}) {
  auto d = regular_degree(g);
  if (!d) throw precondition_error("ramanujan check needs a regular graph");
  if (!is_connected(g)) throw precondition_error("ramanujan check needs a connected graph");
  RamanujanCheck r;
  r.degree = *d;
  r.threshold = 2.0 * std::sqrt(std::max(0, *d - 1));
  Spectrum s = adjacency_spectrum(g, opt);
  // drop one copy of the Perron eigenvalue d (the largest)
  double max_other = 0.0;
  for (size_t i = 0; i + 1 < s.values.size(); ++i)
    max_other = std::max(max_other, std::abs(s.values[i]));
  r.max_other = max_other;
  constexpr double kBoundaryTol = 1e-6;
  r.ramanujan = max_other <= r.threshold + kBoundaryTol;
  r.boundary = std::abs(max_other - r.threshold) <= kBoundaryTol;
  return r;
}

inline bool is_ramanujan(const Graph& g, const SolverOptions& opt = {}) {
  return ramanujan_check(g, opt).ramanujan;
}

}  // namespace heawood
