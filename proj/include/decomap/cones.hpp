/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_CONES_HPP
#define DECOMAP_CONES_HPP

#include <cmath>
#include <deque>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "decomap/complexmatrix.hpp"
#include "decomap/eig.hpp"
#include "decomap/errors.hpp"
#include "decomap/maps.hpp"
#include "decomap/opsys.hpp"
#include "decomap/rng.hpp"

namespace decomap {

//=========================================================================
// The cone J_k(S): PSD elements of S (x) M_k that stay PSD after
// transposing the M_k (outer) factor
//=========================================================================

struct JConeCertificate {
  double lambda_min_raw = 0.0;
  double lambda_min_pt = 0.0;
  bool member = false;
  double tol = 0.0;
  double block_residual = 0.0;   // worst distance of an outer block from S
  double symmetrization_residual = 0.0;
};

inline JConeCertificate in_J(const ComplexMatrix& s_mat, const OperatorSystem& s, int k,
                             double tol) {
  const int d = s.ambient_dim();
  if (s_mat.dim() != d * k) throw DimensionError("in_J: dim != d*k");
  JConeCertificate cert;
  cert.tol = tol;
  cert.symmetrization_residual = s_mat.hermiticity_residual();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ContainsResult c = contains(s, s_mat.block(i, j, d), 1e-8);
      cert.block_residual = std::max(cert.block_residual, c.residual);
      if (!c.member)
        throw DomainError("in_J: block (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside the system (residual " + std::to_string(c.residual) + ")");
    }
  cert.lambda_min_raw = min_eigenvalue(s_mat);
  cert.lambda_min_pt = min_eigenvalue(partial_transpose_outer(s_mat, k, d));
  const double bound = -tol * (1.0 + s_mat.frobenius_norm());
  cert.member = cert.lambda_min_raw >= bound && cert.lambda_min_pt >= bound;
  return cert;
}

// Compression sum_{jk} s_jk (x) y_j y_k^* of an element of S (x) M_m into
// S (x) M_n; equals Y* S Y for Y = kron(sum_a e_a y_a^*, I_d).
inline ComplexMatrix compress(const ComplexMatrix& s_mat,
                              const std::vector<std::vector<Complex>>& ys) {
  const int m = static_cast<int>(ys.size());
  if (m == 0) throw DimensionError("compress: no vectors");
  if (s_mat.dim() % m != 0) throw DimensionError("compress: dim not divisible by m");
  const int d = s_mat.dim() / m;
  const int n = static_cast<int>(ys.front().size());
  for (const auto& y : ys)
    if (static_cast<int>(y.size()) != n) throw DimensionError("compress: ragged vectors");
  ComplexMatrix out(d * n);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      const ComplexMatrix blk = s_mat.block(j, k, d);
      for (int a = 0; a < n; ++a) {
        const Complex ya = ys[static_cast<size_t>(j)][static_cast<size_t>(a)];
        if (ya == Complex{}) continue;
        for (int b = 0; b < n; ++b) {
          const Complex w = ya * std::conj(ys[static_cast<size_t>(k)][static_cast<size_t>(b)]);
          if (w == Complex{}) continue;
          out.add_block(a, b, blk, w);
        }
      }
    }
  return out;
}

// Random element of the separable cone S^+ (x) M_n^+: a sum of elementary
// tensors kron(q_r, p_r) with p_r a random PSD element of S (a PSD matrix
// projected onto S, rejected when the projection loses positivity) and q_r
// random PSD in M_n.
inline ComplexMatrix random_separable(const OperatorSystem& s, int n, uint64_t seed, int terms) {
  if (terms < 1) throw DimensionError("random_separable: terms must be >= 1");
  Rng rng(seed);
  const int d = s.ambient_dim();
  ComplexMatrix acc(d * n);
  for (int r = 0; r < terms; ++r) {
    ComplexMatrix p;
    bool found = false;
    for (int attempt = 0; attempt < 100; ++attempt) {
      const ComplexMatrix cand = rng.random_psd(d);
      ContainsResult c = contains(s, cand, 1e30);
      ComplexMatrix proj(d);
      for (int b = 0; b < s.dim(); ++b) proj += s.basis(b) * c.coords[static_cast<size_t>(b)];
      proj = proj.hermitized();
      if (is_psd(proj, 1e-12).psd) {
        p = proj;
        found = true;
        break;
      }
    }
    if (!found)
      throw SamplingError("random_separable: no positive element found after 100 rejections");
    acc += kron(rng.random_psd(n), p);
  }
  return acc;
}

//=========================================================================
// Dykstra's alternating-projection engine
//=========================================================================

// Points live in a product of Hermitian-matrix spaces (a real Hilbert
// space); single-matrix problems use a one-element tuple.
using Point = std::vector<ComplexMatrix>;

inline Point point_add(Point a, const Point& b, double scale = 1.0) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i] * Complex(scale, 0.0);
  return a;
}

inline double point_inner(const Point& a, const Point& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += hs_inner(a[i], b[i]).real();
  return s;
}

inline double point_norm(const Point& a) {
  double s = 0.0;
  for (const auto& m : a) {
    const double f = m.frobenius_norm();
    s += f * f;
  }
  return std::sqrt(s);
}

inline double point_distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double f = distance_frobenius(a[i], b[i]);
    s += f * f;
  }
  return std::sqrt(s);
}

// A closed convex set given by its nearest-point projection.
struct ProjectableSet {
  std::string name;
  std::function<Point(const Point&)> project;
};

inline ProjectableSet psd_set(size_t index) {
  return {"psd[" + std::to_string(index) + "]", [index](const Point& x) {
            Point y = x;
            y[index] = psd_project(y[index]);
            return y;
          }};
}

inline ProjectableSet ppt_psd_set(size_t index, int outer, int inner) {
  return {"ppt-psd[" + std::to_string(index) + "]", [index, outer, inner](const Point& x) {
            Point y = x;
            y[index] = partial_transpose_outer(
                psd_project(partial_transpose_outer(y[index], outer, inner)), outer, inner);
            return y;
          }};
}

inline ProjectableSet trace_hyperplane(size_t index, double value) {
  return {"trace[" + std::to_string(index) + "]", [index, value](const Point& x) {
            Point y = x;
            const int n = y[index].dim();
            const double shift = (y[index].trace().real() - value) / n;
            y[index] -= ComplexMatrix::identity(n) * shift;
            return y;
          }};
}

// {x : <normal, x> <= bound} in the real pairing.
inline ProjectableSet halfspace(Point normal, double bound, std::string name = "halfspace") {
  const double n2 = point_inner(normal, normal);
  return {std::move(name), [normal = std::move(normal), bound, n2](const Point& x) {
            const double v = point_inner(normal, x);
            if (v <= bound || n2 <= 0.0) return x;
            return point_add(x, normal, -(v - bound) / n2);
          }};
}

inline ProjectableSet hyperplane(Point normal, double value, std::string name = "hyperplane") {
  const double n2 = point_inner(normal, normal);
  return {std::move(name), [normal = std::move(normal), value, n2](const Point& x) {
            if (n2 <= 0.0) return x;
            const double v = point_inner(normal, x);
            return point_add(x, normal, -(v - value) / n2);
          }};
}

inline ProjectableSet affine_set(std::string name, std::function<Point(const Point&)> proj) {
  return {std::move(name), std::move(proj)};
}

// Orthogonal projection onto the realized subspace S (x) M_outer: every
// outer block is projected onto the span of the system basis.
inline ProjectableSet subspace_blockwise(size_t index, OperatorSystem s, int outer) {
  return {"subspace[" + std::to_string(index) + "]",
          [index, s = std::move(s), outer](const Point& x) {
            Point y = x;
            const int d = s.ambient_dim();
            ComplexMatrix w(d * outer);
            for (int i = 0; i < outer; ++i)
              for (int j = 0; j < outer; ++j) {
                const ComplexMatrix blk = y[index].block(i, j, d);
                ComplexMatrix pb(d);
                for (int b = 0; b < s.dim(); ++b) pb += s.basis(b) * hs_inner(s.basis(b), blk);
                w.set_block(i, j, pb);
              }
            y[index] = w;
            return y;
          }};
}

enum class DykstraStatus { Feasible, Infeasible, Budget };

struct DykstraResult {
  DykstraStatus status = DykstraStatus::Budget;
  Point point;
  double residual = 0.0;  // max over sets of distance-to-set at the final point
  double gap = 0.0;       // stabilized residual when Infeasible
  int cycles = 0;
};

// Dykstra's algorithm with one correction term per set.  Feasible when the
// residual drops below tol * (1 + ||point||); Infeasible when the residual
// stabilizes (relative change < 1e-6 over 50 cycles) while staying above
// 10 * tol; Budget otherwise.
inline DykstraResult dykstra(const std::vector<ProjectableSet>& sets, Point start, double tol,
                             int max_iter) {
  if (sets.empty()) throw DimensionError("dykstra: at least one set required");
  Point x = std::move(start);
  std::vector<Point> corr(sets.size());
  for (auto& c : corr) {
    c = x;
    for (auto& m : c) m *= Complex(0.0, 0.0);
  }
  std::deque<double> hist;
  DykstraResult res;
  for (int cycle = 1; cycle <= max_iter; ++cycle) {
    for (size_t i = 0; i < sets.size(); ++i) {
      const Point y = point_add(x, corr[i]);
      Point px = sets[i].project(y);
      corr[i] = point_add(y, px, -1.0);
      x = std::move(px);
    }
    double r = 0.0;
    for (const auto& s : sets) r = std::max(r, point_distance(x, s.project(x)));
    res.cycles = cycle;
    res.residual = r;
    if (r <= tol * (1.0 + point_norm(x))) {
      res.status = DykstraStatus::Feasible;
      res.point = std::move(x);
      return res;
    }
    hist.push_back(r);
    if (static_cast<int>(hist.size()) > 50) {
      const double prev = hist.front();
      hist.pop_front();
      if (r > 10.0 * tol && std::abs(r - prev) < 1e-6 * std::max(r, 1e-300)) {
        res.status = DykstraStatus::Infeasible;
        res.gap = r;
        res.point = std::move(x);
        return res;
      }
    }
  }
  res.status = DykstraStatus::Budget;
  res.point = std::move(x);
  return res;
}

}  // namespace decomap

#endif
