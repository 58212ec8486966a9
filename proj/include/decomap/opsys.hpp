/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_OPSYS_HPP
#define DECOMAP_OPSYS_HPP

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "decomap/complexmatrix.hpp"
#include "decomap/errors.hpp"

namespace decomap {

//=========================================================================
// Operator systems: unital self-adjoint subspaces of M_d, stored by an
// orthonormal Hermitian basis whose first element is I/sqrt(d)
//=========================================================================

class OperatorSystem {
 public:
  struct Data {
    int ambient_dim = 0;
    std::vector<ComplexMatrix> basis;       // Hermitian, HS-orthonormal, unit first
    std::vector<ComplexMatrix> generators;  // as given at construction (for I/O)
  };

  OperatorSystem() = default;
  explicit OperatorSystem(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  int ambient_dim() const { return d_->ambient_dim; }
  int dim() const { return static_cast<int>(d_->basis.size()); }
  bool is_full() const { return dim() == ambient_dim() * ambient_dim(); }

  const ComplexMatrix& basis(int i) const { return d_->basis[static_cast<size_t>(i)]; }
  const std::vector<ComplexMatrix>& basis() const { return d_->basis; }
  const std::vector<ComplexMatrix>& generators() const { return d_->generators; }

  bool valid() const { return static_cast<bool>(d_); }

  // Two systems are the same when they share storage or agree structurally.
  bool same_system(const OperatorSystem& o) const {
    if (d_ == o.d_) return true;
    if (!d_ || !o.d_) return false;
    if (ambient_dim() != o.ambient_dim() || dim() != o.dim()) return false;
    for (int i = 0; i < dim(); ++i)
      if (distance_frobenius(basis(i), o.basis(i)) > 1e-10) return false;
    return true;
  }

 private:
  std::shared_ptr<const Data> d_;
};

// Coordinates of an element over the system's Hermitian basis; Hermitian
// elements have real coordinates, general elements complex ones.
class SystemElement {
 public:
  SystemElement(OperatorSystem sys, std::vector<Complex> coords)
      : sys_(std::move(sys)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != sys_.dim())
      throw DimensionError("SystemElement: coordinate count != system dimension");
  }

  const OperatorSystem& system() const { return sys_; }
  const std::vector<Complex>& coords() const { return coords_; }

  ComplexMatrix realize() const {
    ComplexMatrix m(sys_.ambient_dim());
    for (int i = 0; i < sys_.dim(); ++i) {
      const Complex c = coords_[static_cast<size_t>(i)];
      if (c == Complex{}) continue;
      m += sys_.basis(i) * c;
    }
    return m;
  }

 private:
  OperatorSystem sys_;
  std::vector<Complex> coords_;
};

// Orthonormalized Hermitian basis for span{I} + span{generators, adjoints}.
// Deterministic: the unit I/sqrt(d) comes first, then modified Gram-Schmidt
// over the Hermitian and anti-Hermitian parts of each generator in order;
// candidates with residual norm <= 1e-10 * (1 + original norm) are dropped.
inline OperatorSystem make_opsys(const std::vector<ComplexMatrix>& generators, int d) {
  auto data = std::make_shared<OperatorSystem::Data>();
  data->ambient_dim = d;
  data->generators = generators;

  std::vector<ComplexMatrix> cands;
  for (const auto& g : generators) {
    if (g.dim() != d) throw DimensionError("make_opsys: generator has wrong dimension");
    cands.push_back((g + g.adjoint()) * 0.5);
    cands.push_back((g - g.adjoint()) * Complex(0.0, -0.5));
  }

  auto& basis = data->basis;
  basis.push_back(ComplexMatrix::identity(d) * (1.0 / std::sqrt(static_cast<double>(d))));
  for (const auto& cand : cands) {
    const double orig = cand.frobenius_norm();
    ComplexMatrix v = cand;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= b * hs_inner(b, v);
    const double n = v.frobenius_norm();
    if (n <= 1e-10 * (1.0 + orig)) continue;
    basis.push_back(v * (1.0 / n));
  }
  return OperatorSystem(std::move(data));
}

// Full matrix algebra M_d as an operator system (basis from the standard
// matrix units). Cached per dimension.
inline OperatorSystem full_system(int d) {
  static std::mutex mu;
  static std::vector<OperatorSystem> cache;  // index = dimension
  {
    std::lock_guard<std::mutex> lock(mu);
    if (d < static_cast<int>(cache.size()) && cache[static_cast<size_t>(d)].valid())
      return cache[static_cast<size_t>(d)];
  }
  std::vector<ComplexMatrix> units;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) units.push_back(ComplexMatrix::unit(d, i, j));
  OperatorSystem s = make_opsys(units, d);
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) <= d) cache.resize(static_cast<size_t>(d) + 1);
  if (!cache[static_cast<size_t>(d)].valid()) cache[static_cast<size_t>(d)] = s;
  return cache[static_cast<size_t>(d)];
}

struct ContainsResult {
  bool member;
  double residual;
  std::vector<Complex> coords;
};

// Projects onto the span via Hilbert-Schmidt coefficients; membership iff
// the Frobenius residual is <= tol * (1 + ||a||_F).
inline ContainsResult contains(const OperatorSystem& s, const ComplexMatrix& a, double tol) {
  if (a.dim() != s.ambient_dim()) throw DimensionError("contains: wrong ambient dimension");
  std::vector<Complex> coords(static_cast<size_t>(s.dim()));
  ComplexMatrix res = a;
  for (int i = 0; i < s.dim(); ++i) {
    const Complex c = hs_inner(s.basis(i), a);
    coords[static_cast<size_t>(i)] = c;
    if (c != Complex{}) res -= s.basis(i) * c;
  }
  const double r = res.frobenius_norm();
  return {r <= tol * (1.0 + a.frobenius_norm()), r, std::move(coords)};
}

inline SystemElement element_from_matrix(const OperatorSystem& s, const ComplexMatrix& a,
                                         double tol = 1e-8) {
  ContainsResult c = contains(s, a, tol);
  if (!c.member)
    throw DomainError("element_from_matrix: matrix outside the operator system (residual " +
                      std::to_string(c.residual) + ")");
  return SystemElement(s, std::move(c.coords));
}

// Realizes sum_j s_j (x) X_j as sum_j kron(X_j, s_j): the second (M_k)
// factor is the outer/block index throughout the library.
inline ComplexMatrix assemble(const OperatorSystem& s,
                              const std::vector<std::pair<SystemElement, ComplexMatrix>>& terms) {
  if (terms.empty()) throw DimensionError("assemble: no terms");
  const int k = terms.front().second.dim();
  ComplexMatrix acc(s.ambient_dim() * k);
  for (const auto& [el, x] : terms) {
    if (!el.system().same_system(s)) throw DomainError("assemble: element from a foreign system");
    if (x.dim() != k) throw DimensionError("assemble: mixed outer dimensions");
    acc += kron(x, el.realize());
  }
  return acc;
}

}  // namespace decomap

#endif
