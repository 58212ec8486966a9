/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <catch2/catch_amalgamated.hpp>

#include "decomap/complexmatrix.hpp"
#include "decomap/eig.hpp"
#include "decomap/rng.hpp"
#include "testutil.hpp"

using namespace decomap;
using testutil::approx_equal;

namespace {

// e e* with e = sum_j e_j (x) e_j, both factors of dimension n.
ComplexMatrix maxent_projector(int n) {
  ComplexMatrix m(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i * n + i, j * n + j) = 1.0;
  return m;
}

// The swap operator built from its block definition: block (i,j) = E_ji.
ComplexMatrix swap_matrix(int n) {
  ComplexMatrix m(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set_block(i, j, ComplexMatrix::unit(n, j, i));
  return m;
}

}  // namespace

TEST_CASE("kron basics") {
  const ComplexMatrix x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  const ComplexMatrix k = kron(ComplexMatrix::identity(2), x);
  ComplexMatrix expect(4);
  expect.set_block(0, 0, x);
  expect.set_block(1, 1, x);
  REQUIRE(approx_equal(k, expect, 0.0));

  REQUIRE(approx_equal(kron(ComplexMatrix::unit(2, 0, 0), ComplexMatrix::unit(2, 0, 0)),
                       ComplexMatrix::unit(4, 0, 0), 0.0));
}

TEST_CASE("kron mixed-product identity") {
  Rng rng(101);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = rng.gaussian_matrix(2), b = rng.gaussian_matrix(2);
    const ComplexMatrix c = rng.gaussian_matrix(2), d = rng.gaussian_matrix(2);
    REQUIRE(approx_equal(kron(a, b) * kron(c, d), kron(a * c, b * d), 1e-12));
  }
}

TEST_CASE("partial transpose turns the maximally entangled projector into swap") {
  const ComplexMatrix ee = maxent_projector(2);
  const ComplexMatrix sw = partial_transpose_outer(ee, 2, 2);
  REQUIRE(approx_equal(sw, swap_matrix(2), 0.0));

  // Exact eigenvector oracle, independent of the eigensolver: the
  // antisymmetric vector has eigenvalue -1, symmetric ones +1.
  std::vector<Complex> anti{0.0, 1.0, -1.0, 0.0};
  std::vector<Complex> got = sw * anti;
  for (int i = 0; i < 4; ++i) REQUIRE(std::abs(got[size_t(i)] + anti[size_t(i)]) == 0.0);
  for (std::vector<Complex> sym :
       {std::vector<Complex>{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}) {
    got = sw * sym;
    for (int i = 0; i < 4; ++i) REQUIRE(std::abs(got[size_t(i)] - sym[size_t(i)]) == 0.0);
  }

  const EigDecomposition e = hermitian_eig(sw);
  const std::vector<double> expect{-1.0, 1.0, 1.0, 1.0};
  for (int i = 0; i < 4; ++i)
    REQUIRE(std::abs(e.eigenvalues[size_t(i)] - expect[size_t(i)]) < 1e-12);
}

TEST_CASE("partial transpose of an elementary tensor transposes the outer factor") {
  Rng rng(7);
  const ComplexMatrix x = rng.gaussian_matrix(2);
  const ComplexMatrix s = rng.gaussian_matrix(3);
  REQUIRE(approx_equal(partial_transpose_outer(kron(x, s), 2, 3), kron(x.transpose(), s), 0.0));
}

TEST_CASE("partial transpose properties") {
  Rng rng(8);
  const ComplexMatrix h = rng.random_hermitian(6);
  const ComplexMatrix pt = partial_transpose_outer(h, 2, 3);
  // involution is exact (a pure entry permutation)
  REQUIRE(approx_equal(partial_transpose_outer(pt, 2, 3), h, 0.0));
  REQUIRE(pt.is_hermitian());
  REQUIRE(std::abs(pt.trace() - h.trace()) < 1e-14);
  REQUIRE(std::abs(pt.frobenius_norm() - h.frobenius_norm()) < 1e-12);
  REQUIRE_THROWS_AS(partial_transpose_outer(h, 4, 2), DimensionError);
}

TEST_CASE("basis transpose: standard basis gives the entrywise transpose") {
  REQUIRE(approx_equal(basis_transpose(ComplexMatrix::unit(2, 0, 1), ComplexMatrix::identity(2)),
                       ComplexMatrix::unit(2, 1, 0), 0.0));
}

TEST_CASE("basis transpose is positive and isometric") {
  Rng rng(9);
  for (int t = 0; t < 5; ++t) {
    const ComplexMatrix h = rng.random_hermitian(4);
    const ComplexMatrix u = rng.random_unitary(4);
    const EigDecomposition a = hermitian_eig(h);
    const EigDecomposition b = hermitian_eig(basis_transpose(h, u));
    for (size_t i = 0; i < a.eigenvalues.size(); ++i)
      REQUIRE(std::abs(a.eigenvalues[i] - b.eigenvalues[i]) < 1e-9);
  }
}

TEST_CASE("transpose of a tensor-product basis factors") {
  Rng rng(10);
  for (int t = 0; t < 5; ++t) {
    const ComplexMatrix a = rng.gaussian_matrix(2), b = rng.gaussian_matrix(3);
    const ComplexMatrix u = rng.random_unitary(2), w = rng.random_unitary(3);
    REQUIRE(approx_equal(basis_transpose(kron(a, b), kron(u, w)),
                         kron(basis_transpose(a, u), basis_transpose(b, w)), 1e-10));
  }
}

TEST_CASE("basis transpose rejects a non-unitary basis") {
  const ComplexMatrix bad = ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
  REQUIRE_THROWS_AS(basis_transpose(ComplexMatrix::identity(2), bad), InvalidBasisError);
}

TEST_CASE("any two transposes are unitarily equivalent (eigenvalue lists agree)") {
  Rng rng(11);
  const ComplexMatrix h = rng.random_hermitian(4);
  const EigDecomposition ref = hermitian_eig(basis_transpose(h, rng.random_unitary(4)));
  for (int t = 0; t < 4; ++t) {
    const EigDecomposition e = hermitian_eig(basis_transpose(h, rng.random_unitary(4)));
    for (size_t i = 0; i < ref.eigenvalues.size(); ++i)
      REQUIRE(std::abs(ref.eigenvalues[i] - e.eigenvalues[i]) < 1e-9);
  }
}

TEST_CASE("hermitian_eig pinned examples") {
  const EigDecomposition a = hermitian_eig(ComplexMatrix::diagonal({3.0, 1.0, 2.0}));
  REQUIRE(a.eigenvalues == std::vector<double>{1.0, 2.0, 3.0});

  const EigDecomposition b = hermitian_eig(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  REQUIRE(std::abs(b.eigenvalues[0] + 1.0) < 1e-14);
  REQUIRE(std::abs(b.eigenvalues[1] - 1.0) < 1e-14);
}

TEST_CASE("hermitian_eig reconstruction and unitarity over random matrices") {
  Rng rng(12);
  int count = 0;
  for (int dim = 2; dim <= 12; ++dim) {
    for (int t = 0; t < 95; ++t) {
      const ComplexMatrix h = rng.random_hermitian(dim);
      const EigDecomposition e = hermitian_eig(h);
      ComplexMatrix rec(dim);
      for (int k = 0; k < dim; ++k)
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j)
            rec(i, j) += e.eigenvalues[size_t(k)] * e.eigenvectors(i, k) *
                         std::conj(e.eigenvectors(j, k));
      REQUIRE(distance_frobenius(rec, h) <= 1e-10 * (1.0 + h.frobenius_norm()));
      REQUIRE(distance_frobenius(e.eigenvectors.adjoint() * e.eigenvectors,
                                 ComplexMatrix::identity(dim)) <= 1e-10);
      for (size_t i = 1; i < e.eigenvalues.size(); ++i)
        REQUIRE(e.eigenvalues[i - 1] <= e.eigenvalues[i]);
      ++count;
    }
  }
  REQUIRE(count >= 1000);
}

TEST_CASE("hermitian_eig is deterministic") {
  Rng rng(13);
  const ComplexMatrix h = rng.random_hermitian(7);
  const EigDecomposition a = hermitian_eig(h);
  const EigDecomposition b = hermitian_eig(h);
  REQUIRE(a.eigenvalues == b.eigenvalues);
  REQUIRE(distance_frobenius(a.eigenvectors, b.eigenvectors) == 0.0);
}

TEST_CASE("psd_project basics") {
  REQUIRE(approx_equal(psd_project(ComplexMatrix::diagonal({2.0, -1.0})),
                       ComplexMatrix::diagonal({2.0, 0.0}), 1e-14));
  Rng rng(14);
  const ComplexMatrix p = rng.random_psd(4);
  REQUIRE(distance_frobenius(psd_project(p), p) <= 1e-10 * (1.0 + p.frobenius_norm()));
  // idempotence
  const ComplexMatrix q = psd_project(rng.random_hermitian(4));
  REQUIRE(distance_frobenius(psd_project(q), q) <= 1e-10 * (1.0 + q.frobenius_norm()));
}

TEST_CASE("psd_project is Frobenius-nearest among sampled PSD matrices") {
  Rng rng(15);
  const ComplexMatrix h = rng.random_hermitian(4);
  const double dstar = distance_frobenius(h, psd_project(h));
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix p = rng.random_psd(4);
    REQUIRE(dstar <= distance_frobenius(h, p) + 1e-12);
  }
}

TEST_CASE("psd_project spectral split") {
  Rng rng(16);
  const ComplexMatrix h = rng.random_hermitian(5);
  const ComplexMatrix pos = psd_project(h);
  const ComplexMatrix neg = psd_project(h * (-1.0));
  REQUIRE(approx_equal(pos - neg, h, 1e-10 * (1.0 + h.frobenius_norm())));
}

TEST_CASE("is_psd basics") {
  const PsdCheck a = is_psd(ComplexMatrix::identity(3), 1e-9);
  REQUIRE(a.psd);
  REQUIRE(std::abs(a.lambda_min - 1.0) < 1e-12);
  const PsdCheck b = is_psd(ComplexMatrix::diagonal({1.0, -0.5}), 1e-9);
  REQUIRE_FALSE(b.psd);
  REQUIRE(std::abs(b.lambda_min + 0.5) < 1e-12);
}

TEST_CASE("hs_inner basics") {
  for (int n : {2, 3, 5})
    REQUIRE(std::abs(hs_inner(ComplexMatrix::identity(n), ComplexMatrix::identity(n)) -
                     Complex(n, 0.0)) < 1e-14);
  REQUIRE(std::abs(hs_inner(ComplexMatrix::unit(2, 0, 1), ComplexMatrix::unit(2, 0, 1)) -
                   Complex(1.0, 0.0)) < 1e-14);
  Rng rng(17);
  const ComplexMatrix a = rng.gaussian_matrix(3), b = rng.gaussian_matrix(3);
  REQUIRE(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-13);
  REQUIRE(hs_inner(a, a).real() > 0.0);
  REQUIRE_THROWS_AS(hs_inner(a, ComplexMatrix::identity(4)), DimensionError);
}
