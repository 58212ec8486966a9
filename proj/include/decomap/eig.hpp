/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_EIG_HPP
#define DECOMAP_EIG_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "decomap/complexmatrix.hpp"
#include "decomap/errors.hpp"

namespace decomap {

//=========================================================================
// Hermitian eigendecomposition (cyclic Jacobi with complex rotations)
//=========================================================================

struct EigDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, columns
  double symmetrization_residual = 0.0;
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int p = 0; p < a.dim(); ++p)
    for (int q = 0; q < a.dim(); ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

}  // namespace detail

// Inputs that are only approximately Hermitian are symmetrized, never
// rejected; the residual is recorded on the decomposition.  Deterministic:
// fixed row-major sweep order, iteration cap 100 sweeps, off-diagonal
// threshold 1e-13 * ||H||_F.
inline EigDecomposition hermitian_eig(const ComplexMatrix& h) {
  const int n = h.dim();
  EigDecomposition out;
  out.symmetrization_residual = h.hermiticity_residual();
  ComplexMatrix a = h.hermitized();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double norm_h = a.frobenius_norm();
  const double thresh = 1e-13 * norm_h;
  constexpr int kMaxSweeps = 100;

  int sweep = 0;
  double off = detail::off_diagonal_norm(a);
  while (off > thresh && sweep < kMaxSweeps) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex z = a(p, q);
        const double r = std::abs(z);
        if (r <= 1e-300) continue;
        const Complex phase = z / r;
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        const double tau = (beta - alpha) / (2.0 * r);
        const double tsign = tau >= 0.0 ? 1.0 : -1.0;
        const double tt = tsign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + tt * tt);
        const double s = tt * c;
        // Rotation columns: u_p = c e_p - s conj(phase) e_q,
        //                   u_q = s phase e_p + c e_q.
        const Complex upq = -s * std::conj(phase);
        const Complex uqp = s * phase;
        // A <- U* A U, acting on rows/columns p and q.
        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * upq;
          a(k, q) = akp * uqp + akq * c;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(c) * apk + std::conj(upq) * aqk;
          a(q, k) = std::conj(uqp) * apk + std::conj(c) * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * upq;
          v(k, q) = vkp * uqp + vkq * c;
        }
      }
    }
    off = detail::off_diagonal_norm(a);
    ++sweep;
  }
  if (off > thresh)
    throw ConvergenceError("hermitian_eig: no convergence after sweep cap", off);

  std::vector<double> lam(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) lam[static_cast<size_t>(i)] = a(i, i).real();
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    return lam[static_cast<size_t>(x)] < lam[static_cast<size_t>(y)];
  });

  out.eigenvalues.resize(static_cast<size_t>(n));
  out.eigenvectors = ComplexMatrix(n);
  for (int c = 0; c < n; ++c) {
    out.eigenvalues[static_cast<size_t>(c)] = lam[static_cast<size_t>(idx[static_cast<size_t>(c)])];
    for (int r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, idx[static_cast<size_t>(c)]);
  }
  return out;
}

inline double min_eigenvalue(const ComplexMatrix& h) {
  if (h.dim() == 0) return 0.0;
  return hermitian_eig(h).eigenvalues.front();
}

// Frobenius-nearest PSD matrix: clamp negative eigenvalues to zero.
inline ComplexMatrix psd_project(const ComplexMatrix& h) {
  const EigDecomposition e = hermitian_eig(h);
  const int n = h.dim();
  ComplexMatrix r(n);
  for (int k = 0; k < n; ++k) {
    const double lk = e.eigenvalues[static_cast<size_t>(k)];
    if (lk <= 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const Complex vik = e.eigenvectors(i, k);
      if (vik == Complex{}) continue;
      for (int j = 0; j < n; ++j) r(i, j) += lk * vik * std::conj(e.eigenvectors(j, k));
    }
  }
  return r.hermitized();
}

struct PsdCheck {
  bool psd;
  double lambda_min;
};

// True iff lambda_min >= -tol * (1 + ||H||_F); the minimum eigenvalue is
// always returned.
inline PsdCheck is_psd(const ComplexMatrix& h, double tol) {
  const double lmin = min_eigenvalue(h);
  return {lmin >= -tol * (1.0 + h.frobenius_norm()), lmin};
}

}  // namespace decomap

#endif
