/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_TESTUTIL_HPP
#define DECOMAP_TESTUTIL_HPP

#include <vector>

#include "decomap/complexmatrix.hpp"
#include "decomap/rng.hpp"

namespace testutil {

using decomap::Complex;
using decomap::ComplexMatrix;

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.dim() == b.dim() && decomap::distance_frobenius(a, b) <= tol;
}

// Rectangular product helpers for identities the library's square-matrix
// type cannot express directly (Y* S Y with Y rectangular).
struct Rect {
  int rows = 0, cols = 0;
  std::vector<Complex> a;
  Rect(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Complex& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  Complex at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

inline Rect rect_from_square(const ComplexMatrix& m) {
  Rect r(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m(i, j);
  return r;
}

inline Rect rect_mul(const Rect& a, const Rect& b) {
  Rect c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

inline Rect rect_adjoint(const Rect& a) {
  Rect c(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) c.at(j, i) = std::conj(a.at(i, j));
  return c;
}

inline ComplexMatrix rect_to_square(const Rect& r) {
  ComplexMatrix m(r.rows);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j) m(i, j) = r.at(i, j);
  return m;
}

}  // namespace testutil

#endif
