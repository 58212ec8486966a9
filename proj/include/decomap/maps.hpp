/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_MAPS_HPP
#define DECOMAP_MAPS_HPP

#include <string>
#include <utility>
#include <vector>

#include "decomap/complexmatrix.hpp"
#include "decomap/eig.hpp"
#include "decomap/errors.hpp"
#include "decomap/opsys.hpp"
#include "decomap/rng.hpp"

namespace decomap {

//=========================================================================
// Linear maps phi: S -> M_n, stored by their action on the system basis
//=========================================================================

class LinearMap {
 public:
  // Images of each domain basis element; symmetrized so the map is
  // Hermiticity-preserving, with the worst residual recorded.
  LinearMap(OperatorSystem domain, int codomain_dim, std::vector<ComplexMatrix> images)
      : domain_(std::move(domain)), n_(codomain_dim) {
    if (static_cast<int>(images.size()) != domain_.dim())
      throw DimensionError("LinearMap: one image per domain basis element required");
    action_.reserve(images.size());
    for (auto& m : images) {
      if (m.dim() != n_) throw DimensionError("LinearMap: image has wrong codomain dimension");
      herm_residual_ = std::max(herm_residual_, m.hermiticity_residual());
      action_.push_back(m.hermitized());
    }
  }

  const OperatorSystem& domain() const { return domain_; }
  int domain_dim() const { return domain_.ambient_dim(); }
  int codomain_dim() const { return n_; }
  const ComplexMatrix& action(int i) const { return action_[static_cast<size_t>(i)]; }
  double hermitization_residual() const { return herm_residual_; }

  LinearMap& operator+=(const LinearMap& o) {
    if (!domain_.same_system(o.domain_) || n_ != o.n_)
      throw DimensionError("LinearMap: sum of maps with different signatures");
    for (size_t i = 0; i < action_.size(); ++i) action_[i] += o.action_[i];
    return *this;
  }
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }

  LinearMap& operator*=(double c) {
    for (auto& m : action_) m *= Complex(c, 0.0);
    return *this;
  }
  friend LinearMap operator*(LinearMap a, double c) { return a *= c; }
  friend LinearMap operator*(double c, LinearMap a) { return a *= c; }

 private:
  OperatorSystem domain_;
  int n_ = 0;
  std::vector<ComplexMatrix> action_;
  double herm_residual_ = 0.0;
};

inline ComplexMatrix apply(const LinearMap& phi, const SystemElement& s) {
  if (!s.system().same_system(phi.domain()))
    throw DomainError("apply: element from a foreign system");
  ComplexMatrix out(phi.codomain_dim());
  for (int i = 0; i < phi.domain().dim(); ++i) {
    const Complex c = s.coords()[static_cast<size_t>(i)];
    if (c == Complex{}) continue;
    out += phi.action(i) * c;
  }
  return out;
}

// Convenience: apply to an ambient matrix after projecting onto the domain.
inline ComplexMatrix apply(const LinearMap& phi, const ComplexMatrix& s, double tol = 1e-8) {
  return apply(phi, element_from_matrix(phi.domain(), s, tol));
}

// Ampliation phi_k, blockwise on the outer-k block structure: block (i,j)
// of the result is phi(block (i,j)).
inline ComplexMatrix ampliate(const LinearMap& phi, const ComplexMatrix& s_mat, int k) {
  const int d = phi.domain_dim();
  const int n = phi.codomain_dim();
  if (s_mat.dim() != d * k) throw DimensionError("ampliate: dim != d*k");
  ComplexMatrix out(n * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const ComplexMatrix blk = s_mat.block(i, j, d);
      ContainsResult c = contains(phi.domain(), blk, 1e-8);
      if (!c.member)
        throw DomainError("ampliate: block (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside the domain (residual " + std::to_string(c.residual) + ")");
      ComplexMatrix img(n);
      for (int b = 0; b < phi.domain().dim(); ++b) {
        const Complex cb = c.coords[static_cast<size_t>(b)];
        if (cb == Complex{}) continue;
        img += phi.action(b) * cb;
      }
      out.set_block(i, j, img);
    }
  return out;
}

// Choi matrix sum_{pq} kron(E_pq, phi(E_pq)) in the outer-d convention.
// Defined only for full-algebra domains.
inline ComplexMatrix choi(const LinearMap& phi) {
  const int d = phi.domain_dim();
  if (!phi.domain().is_full())
    throw DomainError("choi: Choi matrix undefined on a proper operator subsystem");
  const int n = phi.codomain_dim();
  ComplexMatrix c(d * n);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      const ComplexMatrix img = apply(phi, ComplexMatrix::unit(d, p, q));
      c.set_block(p, q, img);
    }
  return c;
}

// Map recovered from a Choi matrix (outer-d convention).
inline LinearMap map_from_choi(const ComplexMatrix& c, int d, int n) {
  if (c.dim() != d * n) throw DimensionError("map_from_choi: dim != d*n");
  OperatorSystem s = full_system(d);
  std::vector<ComplexMatrix> images;
  images.reserve(static_cast<size_t>(s.dim()));
  for (int i = 0; i < s.dim(); ++i) {
    const ComplexMatrix& b = s.basis(i);
    ComplexMatrix img(n);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        const Complex w = b(p, q);
        if (w == Complex{}) continue;
        img += c.block(p, q, n) * w;
      }
    images.push_back(img);
  }
  return LinearMap(std::move(s), n, std::move(images));
}

// Dual functional s_phi([x_ij]) = sum_ij [phi(x_ij)]_ij, evaluated via the
// block-sum formula (the Kronecker form is checked against it in tests).
inline Complex dual_eval(const LinearMap& phi, const ComplexMatrix& s_mat) {
  const int d = phi.domain_dim();
  const int n = phi.codomain_dim();
  if (s_mat.dim() != d * n) throw DimensionError("dual_eval: dim != d*n");
  Complex acc{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ComplexMatrix blk = s_mat.block(i, j, d);
      ContainsResult c = contains(phi.domain(), blk, 1e-8);
      if (!c.member)
        throw DomainError("dual_eval: block (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside the domain (residual " + std::to_string(c.residual) + ")");
      for (int b = 0; b < phi.domain().dim(); ++b) {
        const Complex cb = c.coords[static_cast<size_t>(b)];
        if (cb == Complex{}) continue;
        acc += cb * phi.action(b)(i, j);
      }
    }
  if (s_mat.is_hermitian(1e-9) &&
      std::abs(acc.imag()) > 1e-9 * (1.0 + std::abs(acc.real())))
    throw Error("dual_eval: non-real value on a Hermitian input");
  return acc;
}

// The dual functional s_phi as a first-class value; phi |-> s_phi is a
// bijection between maps and functionals (map_from_functional inverts it).
struct DualFunctional {
  LinearMap map;
  Complex operator()(const ComplexMatrix& s_mat) const { return dual_eval(map, s_mat); }
};

// Table f(b_i (x) E_jk), one n x n matrix per domain basis element.
using FunctionalTable = std::vector<ComplexMatrix>;

// Inverse of phi -> s_phi: the map with [phi(b_i)]_jk = f(b_i (x) E_jk).
inline LinearMap map_from_functional(const OperatorSystem& domain, int n,
                                     const FunctionalTable& f) {
  if (static_cast<int>(f.size()) != domain.dim())
    throw DimensionError("map_from_functional: table size != system dimension");
  for (const auto& t : f)
    if (t.dim() != n) throw DimensionError("map_from_functional: table entry has wrong dim");
  return LinearMap(domain, n, f);
}

inline FunctionalTable functional_table(const LinearMap& phi) {
  FunctionalTable f;
  f.reserve(static_cast<size_t>(phi.domain().dim()));
  const int d = phi.domain_dim();
  const int n = phi.codomain_dim();
  for (int i = 0; i < phi.domain().dim(); ++i) {
    ComplexMatrix t(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const ComplexMatrix x = kron(ComplexMatrix::unit(n, j, k), phi.domain().basis(i));
        (void)d;
        t(j, k) = dual_eval(phi, x);
      }
    f.push_back(std::move(t));
  }
  return f;
}

// t o phi: the standard transpose applied to each image.
inline LinearMap compose_transpose(const LinearMap& phi) {
  std::vector<ComplexMatrix> images;
  images.reserve(static_cast<size_t>(phi.domain().dim()));
  for (int i = 0; i < phi.domain().dim(); ++i) images.push_back(phi.action(i).transpose());
  return LinearMap(phi.domain(), phi.codomain_dim(), std::move(images));
}

inline LinearMap identity_map(int d) {
  OperatorSystem s = full_system(d);
  std::vector<ComplexMatrix> images(s.basis().begin(), s.basis().end());
  return LinearMap(std::move(s), d, std::move(images));
}

inline LinearMap transpose_map(int d) { return compose_transpose(identity_map(d)); }

// x |-> V phi(U x U*) V*; preserves positivity for unitary U, V.
inline LinearMap conjugate_map(const LinearMap& phi, const ComplexMatrix& u,
                               const ComplexMatrix& v) {
  const OperatorSystem& s = phi.domain();
  std::vector<ComplexMatrix> images;
  images.reserve(static_cast<size_t>(s.dim()));
  const ComplexMatrix ua = u.adjoint();
  const ComplexMatrix va = v.adjoint();
  for (int i = 0; i < s.dim(); ++i)
    images.push_back(v * apply(phi, u * s.basis(i) * ua) * va);
  return LinearMap(s, phi.codomain_dim(), std::move(images));
}

// Hermitian matrix G with dual_eval(phi, W) = Trace(G W): the functional's
// Riesz representative in the Hilbert-Schmidt pairing.
inline ComplexMatrix dual_pairing_matrix(const LinearMap& phi) {
  const int d = phi.domain_dim();
  const int n = phi.codomain_dim();
  ComplexMatrix g(d * n);
  for (int b = 0; b < phi.domain().dim(); ++b) {
    const ComplexMatrix& bm = phi.domain().basis(b);
    const ComplexMatrix& im = phi.action(b);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Complex w = std::conj(im(i, j));
        if (w == Complex{}) continue;
        g.add_block(i, j, bm, w);
      }
  }
  return g.hermitized();
}

//=========================================================================
// Positivity probing (sampling, never an exactness claim)
//=========================================================================

struct ProbeResult {
  bool counterexample = false;
  double lambda_min = 0.0;
  std::vector<Complex> x;     // rank-one direction when applicable
  ComplexMatrix element;      // the positive domain element found
};

namespace detail {

// Adjoint of phi in the Hilbert-Schmidt pairing, evaluated on Hermitian m.
inline ComplexMatrix hs_adjoint_apply(const LinearMap& phi, const ComplexMatrix& m) {
  ComplexMatrix out(phi.domain_dim());
  for (int b = 0; b < phi.domain().dim(); ++b) {
    const Complex w = hs_inner(phi.action(b), m);
    if (w == Complex{}) continue;
    out += phi.domain().basis(b) * w;
  }
  return out;
}

inline ComplexMatrix rank_one(const std::vector<Complex>& x) {
  const int d = static_cast<int>(x.size());
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = x[static_cast<size_t>(i)] * std::conj(x[static_cast<size_t>(j)]);
  return m;
}

}  // namespace detail

// Minimizes lambda_min(phi(x x*)) over `budget` unit vectors (canonical
// basis vectors first, then random) followed by 50 projected-gradient steps
// on the best candidate.  A counterexample is reported only when the final
// value is < -1e-8.  Deterministic given the seed.
inline ProbeResult positivity_probe(const LinearMap& phi, int budget, uint64_t seed) {
  Rng rng(seed);
  const int d = phi.domain_dim();
  ProbeResult best;

  if (phi.domain().is_full()) {
    auto value_of = [&](const std::vector<Complex>& x) {
      return min_eigenvalue(apply(phi, detail::rank_one(x)));
    };
    std::vector<Complex> bx;
    double bval = 0.0;
    bool first = true;
    for (int trial = 0; trial < budget; ++trial) {
      std::vector<Complex> x;
      if (trial < d) {
        x.assign(static_cast<size_t>(d), Complex{});
        x[static_cast<size_t>(trial)] = 1.0;
      } else {
        x = rng.unit_vector(d);
      }
      const double v = value_of(x);
      // Strict improvement with a noise margin: ties keep the earliest
      // candidate, which makes the probe deterministic.
      if (first || v < bval - 1e-12 * (1.0 + std::abs(bval))) {
        bval = v;
        bx = x;
        first = false;
      }
    }
    // Projected gradient refinement on the sphere.
    double step = 0.5;
    for (int it = 0; it < 50 && !bx.empty(); ++it) {
      const ComplexMatrix m = apply(phi, detail::rank_one(bx));
      const EigDecomposition e = hermitian_eig(m);
      std::vector<Complex> vmin(static_cast<size_t>(phi.codomain_dim()));
      for (int r = 0; r < phi.codomain_dim(); ++r) vmin[static_cast<size_t>(r)] = e.eigenvectors(r, 0);
      const ComplexMatrix grad_op = detail::hs_adjoint_apply(phi, detail::rank_one(vmin));
      std::vector<Complex> g = grad_op * bx;
      std::vector<Complex> cand(bx.size());
      double n2 = 0.0;
      for (size_t i = 0; i < bx.size(); ++i) {
        cand[i] = bx[i] - 2.0 * step * g[i];
        n2 += std::norm(cand[i]);
      }
      if (n2 < 1e-30) {
        step *= 0.5;
        continue;
      }
      const double inv = 1.0 / std::sqrt(n2);
      for (auto& c : cand) c *= inv;
      const double v = value_of(cand);
      if (v < bval) {
        bval = v;
        bx = cand;
        step *= 1.2;
      } else {
        step *= 0.5;
      }
    }
    best.lambda_min = bval;
    best.x = bx;
    best.element = detail::rank_one(bx);
    best.counterexample = bval < -1e-8;
    return best;
  }

  // Proper subsystem: sample projections of random PSD matrices that stay
  // positive in the system.
  double bval = 0.0;
  bool first = true;
  ComplexMatrix belem;
  for (int trial = 0; trial < budget; ++trial) {
    const ComplexMatrix p = rng.random_psd(d);
    ContainsResult c = contains(phi.domain(), p, 1e30);
    ComplexMatrix proj(d);
    for (int b = 0; b < phi.domain().dim(); ++b)
      proj += phi.domain().basis(b) * c.coords[static_cast<size_t>(b)];
    proj = proj.hermitized();
    if (!is_psd(proj, 1e-10).psd) continue;
    ComplexMatrix img(phi.codomain_dim());
    for (int b = 0; b < phi.domain().dim(); ++b)
      img += phi.action(b) * c.coords[static_cast<size_t>(b)].real();
    const double v = min_eigenvalue(img);
    if (first || v < bval) {
      bval = v;
      belem = proj;
      first = false;
    }
  }
  best.lambda_min = first ? 0.0 : bval;
  best.element = belem;
  best.counterexample = !first && bval < -1e-8;
  return best;
}

}  // namespace decomap

#endif
