/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <catch2/catch_amalgamated.hpp>

#include "decomap/cones.hpp"
#include "decomap/corpus.hpp"
#include "decomap/maps.hpp"
#include "decomap/rng.hpp"
#include "testutil.hpp"

using namespace decomap;
using testutil::approx_equal;

namespace {

ComplexMatrix maxent_projector(int n) {
  ComplexMatrix m(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i * n + i, j * n + j) = 1.0;
  return m;
}

ComplexMatrix scalar1(double v) {
  ComplexMatrix m(1);
  m(0, 0) = v;
  return m;
}

}  // namespace

TEST_CASE("in_J pinned examples") {
  const JConeCertificate ident = in_J(ComplexMatrix::identity(6), full_system(3), 2, 1e-9);
  REQUIRE(ident.member);
  REQUIRE(std::abs(ident.lambda_min_raw - 1.0) < 1e-12);
  REQUIRE(std::abs(ident.lambda_min_pt - 1.0) < 1e-12);

  const JConeCertificate ee = in_J(maxent_projector(2), full_system(2), 2, 1e-9);
  REQUIRE_FALSE(ee.member);
  REQUIRE(std::abs(ee.lambda_min_raw) < 1e-12);
  REQUIRE(std::abs(ee.lambda_min_pt + 1.0) < 1e-12);

  for (double a : {0.1, 0.5, 1.0, 2.0}) {
    const JConeCertificate st = in_J(stormer_matrix(a), full_system(3), 3, 1e-9);
    REQUIRE(st.member);
  }

  REQUIRE_THROWS_AS(in_J(ComplexMatrix::identity(5), full_system(2), 2, 1e-9), DimensionError);
  // off-diagonal blocks outside span{I_2}
  ComplexMatrix outside(4);
  outside.set_block(0, 0, ComplexMatrix::identity(2));
  outside.set_block(1, 1, ComplexMatrix::identity(2));
  outside.set_block(0, 1, ComplexMatrix::unit(2, 0, 1));
  outside.set_block(1, 0, ComplexMatrix::unit(2, 1, 0));
  REQUIRE_THROWS_AS(in_J(outside, make_opsys({}, 2), 2, 1e-9), DomainError);
}

TEST_CASE("in_J membership is independent of the transpose basis") {
  // Conjugating the partial transpose by kron(V, I) with V = U t(U)* turns
  // the standard outer transpose into the transpose for the basis U; the
  // spectrum is unchanged, so membership verdicts agree.
  Rng rng(51);
  const ComplexMatrix w = stormer_matrix(0.7);
  const JConeCertificate ref = in_J(w, full_system(3), 3, 1e-9);
  for (int t = 0; t < 5; ++t) {
    const ComplexMatrix u = rng.random_unitary(3);
    const ComplexMatrix v = u * u.conj();
    const ComplexMatrix vt = kron(v, ComplexMatrix::identity(3));
    const ComplexMatrix pt_u = vt * partial_transpose_outer(w, 3, 3) * vt.adjoint();
    const double lmin = min_eigenvalue(pt_u);
    REQUIRE((lmin >= -1e-9 * (1.0 + w.frobenius_norm())) == ref.member);
    REQUIRE(std::abs(lmin - ref.lambda_min_pt) < 1e-9);
  }
}

TEST_CASE("compress pinned examples") {
  Rng rng(52);
  const ComplexMatrix s_mat = rng.random_hermitian(6);  // S (x) M_2 over M_3
  // m = n with y_j = e_j returns the input unchanged
  std::vector<std::vector<Complex>> es{{1.0, 0.0}, {0.0, 1.0}};
  REQUIRE(approx_equal(compress(s_mat, es), s_mat, 1e-13));
  // all zero vectors give the zero matrix
  std::vector<std::vector<Complex>> zs{{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
  REQUIRE(compress(s_mat, zs).frobenius_norm() == 0.0);
}

TEST_CASE("compress equals Y* S Y for Y = kron(sum e_a y_a^*, I_d)") {
  Rng rng(53);
  const int d = 3, m = 2, n = 4;
  const ComplexMatrix s_mat = rng.random_hermitian(d * m);
  std::vector<std::vector<Complex>> ys;
  for (int j = 0; j < m; ++j) ys.push_back(rng.unit_vector(n));
  // Rectangular oracle built in the test: Y is (m d) x (n d).
  testutil::Rect ymat(m * d, n * d);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b)
      for (int r = 0; r < d; ++r)
        ymat.at(a * d + r, b * d + r) = std::conj(ys[size_t(a)][size_t(b)]);
  const testutil::Rect prod =
      rect_mul(rect_mul(rect_adjoint(ymat), testutil::rect_from_square(s_mat)), ymat);
  REQUIRE(approx_equal(testutil::rect_to_square(prod), compress(s_mat, ys), 1e-10));
}

TEST_CASE("compression preserves the cones") {
  Rng rng(54);
  const OperatorSystem s2 = full_system(2);
  for (int t = 0; t < 25; ++t) {
    // PSD in, PSD out
    const ComplexMatrix p = rng.random_psd(4);
    std::vector<std::vector<Complex>> ys{rng.unit_vector(3), rng.unit_vector(3)};
    REQUIRE(min_eigenvalue(compress(p, ys)) >= -1e-9 * (1.0 + p.frobenius_norm()));
    // J_2(M_2) in, J_3(M_2) out
    const ComplexMatrix j = random_separable(s2, 2, 5400 + t, 1 + t % 3);
    const ComplexMatrix c = compress(j, ys);
    REQUIRE(in_J(c, s2, 3, 1e-9).member);
  }
}

TEST_CASE("random_separable outputs are separable-certified") {
  const OperatorSystem s3 = full_system(3);
  // a single term with p = I, q = I is the identity
  REQUIRE(approx_equal(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                       ComplexMatrix::identity(6), 0.0));
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix w = random_separable(s3, 2, 100 + t, 1 + t % 4);
    REQUIRE(in_J(w, s3, 2, 1e-9).member);
  }
  // positive maps take nonnegative values on every output
  const LinearMap cm = choi_map(1.0);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix w = random_separable(s3, 3, 200 + t, 1 + t % 3);
    REQUIRE(dual_eval(cm, w).real() >= -1e-9 * (1.0 + w.frobenius_norm()));
  }
  REQUIRE_THROWS_AS(random_separable(s3, 2, 1, 0), DimensionError);
}

TEST_CASE("projections are idempotent and firmly nonexpansive") {
  Rng rng(55);
  const OperatorSystem sub = make_opsys({ComplexMatrix::unit(2, 0, 1)}, 2);
  std::vector<ProjectableSet> sets{
      psd_set(0), ppt_psd_set(0, 2, 2), trace_hyperplane(0, 1.0),
      halfspace(Point{rng.random_hermitian(4)}, 0.25), subspace_blockwise(0, sub, 2)};
  for (const auto& set : sets) {
    for (int t = 0; t < 10; ++t) {
      const Point x{rng.random_hermitian(4)};
      const Point y{rng.random_hermitian(4)};
      const Point px = set.project(x);
      const Point py = set.project(y);
      REQUIRE(point_distance(set.project(px), px) < 1e-9);
      // <Px - Py, x - y> >= ||Px - Py||^2
      const Point dp = point_add(px, py, -1.0);
      const Point dx = point_add(x, y, -1.0);
      REQUIRE(point_inner(dp, dx) >= point_inner(dp, dp) - 1e-9);
    }
  }
}

TEST_CASE("dykstra pinned 1-d examples") {
  // {x >= 0} cap {x <= 1} from start 5 -> nearest feasible point 1
  std::vector<ProjectableSet> sets{halfspace(Point{scalar1(-1.0)}, 0.0),
                                   halfspace(Point{scalar1(1.0)}, 1.0)};
  DykstraResult r = dykstra(sets, Point{scalar1(5.0)}, 1e-10, 1000);
  REQUIRE(r.status == DykstraStatus::Feasible);
  REQUIRE(std::abs(r.point[0](0, 0).real() - 1.0) < 1e-8);

  // {x <= -1} cap {x >= 1} is infeasible with gap ~ 2
  std::vector<ProjectableSet> bad{halfspace(Point{scalar1(1.0)}, -1.0),
                                  halfspace(Point{scalar1(-1.0)}, -1.0)};
  DykstraResult q = dykstra(bad, Point{scalar1(0.3)}, 1e-10, 5000);
  REQUIRE(q.status == DykstraStatus::Infeasible);
  REQUIRE(q.gap > 1.5);
  REQUIRE(q.gap < 2.5);
}

TEST_CASE("dykstra reaches the PSD-PPT-trace intersection from swap/4") {
  ComplexMatrix swap2(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) swap2.set_block(i, j, ComplexMatrix::unit(2, j, i));
  std::vector<ProjectableSet> sets{psd_set(0), ppt_psd_set(0, 2, 2), trace_hyperplane(0, 1.0)};
  DykstraResult r = dykstra(sets, Point{swap2 * 0.25}, 1e-9, 20000);
  REQUIRE(r.status == DykstraStatus::Feasible);
  const ComplexMatrix w = r.point[0].hermitized();
  REQUIRE(in_J(w, full_system(2), 2, 1e-7).member);
  REQUIRE(std::abs(w.trace().real() - 1.0) < 1e-7);
}

TEST_CASE("co-cp maps stay positive on the J cone under ampliation") {
  Rng rng(56);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix cpsd = rng.random_psd(4);
    const LinearMap eta = map_from_choi(partial_transpose_outer(cpsd, 2, 2), 2, 2);
    for (int m : {1, 2, 3}) {
      const ComplexMatrix s_mat = random_separable(full_system(2), m, 5600 + 10 * t + m, 2);
      REQUIRE(min_eigenvalue(ampliate(eta, s_mat, m)) >= -1e-8 * (1.0 + s_mat.frobenius_norm()));
    }
  }
}
