/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_RNG_HPP
#define DECOMAP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "decomap/complexmatrix.hpp"

namespace decomap {

// Deterministic random source.  Gaussians are produced by Box-Muller on the
// raw mt19937_64 bit stream, so identical seeds give identical streams on
// every platform (std::normal_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {
    if (has_cache_) {
      has_cache_ = false;
      return cache_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    cache_ = r * std::sin(a);
    has_cache_ = true;
    return r * std::cos(a);
  }

  Complex cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) * (1.0 / std::sqrt(2.0));
  }

  std::vector<Complex> unit_vector(int dim) {
    std::vector<Complex> v(static_cast<size_t>(dim));
    double norm2 = 0.0;
    while (norm2 < 1e-30) {
      norm2 = 0.0;
      for (auto& x : v) {
        x = cgaussian();
        norm2 += std::norm(x);
      }
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
  }

  ComplexMatrix gaussian_matrix(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = cgaussian();
    return m;
  }

  ComplexMatrix random_hermitian(int dim) {
    const ComplexMatrix g = gaussian_matrix(dim);
    return (g + g.adjoint()) * 0.5;
  }

  ComplexMatrix random_psd(int dim) {
    const ComplexMatrix g = gaussian_matrix(dim);
    return (g * g.adjoint()).hermitized();
  }

  ComplexMatrix random_density(int dim) {
    ComplexMatrix p = random_psd(dim);
    return p * (1.0 / p.trace().real());
  }

  // Haar-ish random unitary: modified Gram-Schmidt on a Gaussian matrix.
  ComplexMatrix random_unitary(int dim) {
    ComplexMatrix g = gaussian_matrix(dim);
    ComplexMatrix u(dim);
    for (int c = 0; c < dim; ++c) {
      std::vector<Complex> col(static_cast<size_t>(dim));
      for (int r = 0; r < dim; ++r) col[static_cast<size_t>(r)] = g(r, c);
      for (int pass = 0; pass < 2; ++pass) {
        for (int pc = 0; pc < c; ++pc) {
          Complex ip{};
          for (int r = 0; r < dim; ++r) ip += std::conj(u(r, pc)) * col[static_cast<size_t>(r)];
          for (int r = 0; r < dim; ++r) col[static_cast<size_t>(r)] -= ip * u(r, pc);
        }
      }
      double n2 = 0.0;
      for (const auto& x : col) n2 += std::norm(x);
      if (n2 < 1e-20) {
        // Degenerate draw; restart from a fresh Gaussian column.
        for (int r = 0; r < dim; ++r) g(r, c) = cgaussian();
        --c;
        continue;
      }
      const double inv = 1.0 / std::sqrt(n2);
      for (int r = 0; r < dim; ++r) u(r, c) = col[static_cast<size_t>(r)] * inv;
    }
    return u;
  }

 private:
  std::mt19937_64 eng_;
  double cache_ = 0.0;
  bool has_cache_ = false;
};

}  // namespace decomap

#endif
