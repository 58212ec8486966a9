/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_COMPLEXMATRIX_HPP
#define DECOMAP_COMPLEXMATRIX_HPP

#include <cmath>
#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "decomap/errors.hpp"

namespace decomap {

using Complex = std::complex<double>;

//=========================================================================
// ComplexMatrix: dense square complex matrix, row-major
//=========================================================================

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
    if (dim < 0) throw DimensionError("ComplexMatrix: negative dimension");
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  // Standard matrix unit E_{ij} (1 at row i, column j).
  static ComplexMatrix unit(int dim, int i, int j) {
    ComplexMatrix m(dim);
    m(i, j) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
  }

  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    ComplexMatrix m(static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m.dim())
        throw DimensionError("from_rows: ragged rows");
      int j = 0;
      for (const Complex& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  Complex operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

  const std::vector<Complex>& data() const { return a_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_dim(o, "operator+=");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same_dim(o, "operator-=");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }

  ComplexMatrix& operator*=(Complex s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s, 0.0); }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s, 0.0); }
  friend ComplexMatrix operator-(const ComplexMatrix& a) { return a * Complex(-1.0, 0.0); }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.check_same_dim(b, "operator*");
    const int n = a.dim_;
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<Complex> operator*(const std::vector<Complex>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionError("matvec: size mismatch");
    std::vector<Complex> y(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
      Complex s{};
      for (int j = 0; j < dim_; ++j) s += (*this)(i, j) * x[static_cast<size_t>(j)];
      y[static_cast<size_t>(i)] = s;
    }
    return y;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(j, i);
    return m;
  }

  ComplexMatrix conj() const {
    ComplexMatrix m(dim_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = std::conj(a_[k]);
    return m;
  }

  Complex trace() const {
    Complex s{};
    for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  // max_{i,j} |M[i][j] - conj(M[j][i])|
  double hermiticity_residual() const {
    double r = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j)
        r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return r;
  }

  bool is_hermitian(double rel_tol = 1e-12) const {
    return hermiticity_residual() <= rel_tol * (1.0 + max_abs());
  }

  ComplexMatrix hermitized() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        m(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return m;
  }

  bool all_finite() const {
    for (const auto& v : a_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  // Extract block (i,j) when the matrix is viewed as outer x outer blocks of
  // size inner (dim == outer * inner).
  ComplexMatrix block(int i, int j, int inner) const {
    ComplexMatrix b(inner);
    for (int r = 0; r < inner; ++r)
      for (int c = 0; c < inner; ++c) b(r, c) = (*this)(i * inner + r, j * inner + c);
    return b;
  }

  void set_block(int i, int j, const ComplexMatrix& b) {
    const int inner = b.dim();
    for (int r = 0; r < inner; ++r)
      for (int c = 0; c < inner; ++c) (*this)(i * inner + r, j * inner + c) = b(r, c);
  }

  void add_block(int i, int j, const ComplexMatrix& b, Complex scale = 1.0) {
    const int inner = b.dim();
    for (int r = 0; r < inner; ++r)
      for (int c = 0; c < inner; ++c) (*this)(i * inner + r, j * inner + c) += scale * b(r, c);
  }

 private:
  void check_same_dim(const ComplexMatrix& o, const char* op) const {
    if (dim_ != o.dim_)
      throw DimensionError(std::string(op) + ": dimension mismatch (" +
                           std::to_string(dim_) + " vs " + std::to_string(o.dim_) + ")");
  }

  int dim_ = 0;
  std::vector<Complex> a_;
};

//=========================================================================
// Free operations
//=========================================================================

// Kronecker product; A is the outer (block-index) factor:
// entry[(i*dimB+k),(j*dimB+l)] = A[i][j]*B[k][l].
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int da = a.dim(), db = b.dim();
  ComplexMatrix c(da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l) c(i * db + k, j * db + l) = aij * b(k, l);
    }
  return c;
}

// Transpose of the outer (block-index) factor: block (i,j) of the result is
// block (j,i) of the input, block contents unchanged. Exact involution.
inline ComplexMatrix partial_transpose_outer(const ComplexMatrix& m, int outer_dim,
                                             int inner_dim) {
  if (m.dim() != outer_dim * inner_dim)
    throw DimensionError("partial_transpose_outer: dim != outer*inner");
  ComplexMatrix r(m.dim());
  for (int i = 0; i < outer_dim; ++i)
    for (int j = 0; j < outer_dim; ++j)
      for (int p = 0; p < inner_dim; ++p)
        for (int q = 0; q < inner_dim; ++q)
          r(i * inner_dim + p, j * inner_dim + q) = m(j * inner_dim + p, i * inner_dim + q);
  return r;
}

// Hilbert-Schmidt inner product Trace(A* B).
inline Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("hs_inner: dimension mismatch");
  Complex s{};
  const auto& av = a.data();
  const auto& bv = b.data();
  for (size_t k = 0; k < av.size(); ++k) s += std::conj(av[k]) * bv[k];
  return s;
}

// Transpose associated to the orthonormal basis F = U*E (columns of U):
// t_F(T) = V t_E(T) V* with V = U t_E(U)*.  U = I gives the entrywise
// transpose in the standard basis.
inline ComplexMatrix basis_transpose(const ComplexMatrix& t, const ComplexMatrix& u) {
  if (t.dim() != u.dim()) throw DimensionError("basis_transpose: dimension mismatch");
  const ComplexMatrix gram = u.adjoint() * u;
  double res = 0.0;
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < u.dim(); ++j)
      res = std::max(res, std::abs(gram(i, j) - (i == j ? Complex(1.0) : Complex{})));
  if (res > 1e-8) throw InvalidBasisError("basis_transpose: U not unitary");
  const ComplexMatrix v = u * u.conj();  // U t_E(U)*
  return v * t.transpose() * v.adjoint();
}

inline double distance_frobenius(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

}  // namespace decomap

#endif
