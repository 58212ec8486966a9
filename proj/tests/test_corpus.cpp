/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <catch2/catch_amalgamated.hpp>

#include "decomap/certify.hpp"
#include "decomap/cones.hpp"
#include "decomap/corpus.hpp"
#include "testutil.hpp"

using namespace decomap;
using testutil::approx_equal;

TEST_CASE("choi_map pinned examples") {
  const LinearMap cm = choi_map(1.0);
  REQUIRE(approx_equal(apply(cm, ComplexMatrix::identity(3)), ComplexMatrix::identity(3) * 2.0,
                       1e-13));
  REQUIRE(approx_equal(apply(cm, ComplexMatrix::unit(3, 0, 1)),
                       ComplexMatrix::unit(3, 0, 1) * (-1.0), 1e-13));
}

TEST_CASE("choi_map diagonal action matches the defining array") {
  for (double mu : {1.0, 1.5, 2.0}) {
    const LinearMap cm = choi_map(mu);
    REQUIRE(approx_equal(apply(cm, ComplexMatrix::unit(3, 0, 0)),
                         ComplexMatrix::diagonal({1.0, mu, 0.0}), 1e-13));
    REQUIRE(approx_equal(apply(cm, ComplexMatrix::unit(3, 1, 1)),
                         ComplexMatrix::diagonal({0.0, 1.0, mu}), 1e-13));
    REQUIRE(approx_equal(apply(cm, ComplexMatrix::unit(3, 2, 2)),
                         ComplexMatrix::diagonal({mu, 0.0, 1.0}), 1e-13));
  }
  REQUIRE(choi_map_positivity_guaranteed(1.0));
  REQUIRE_FALSE(choi_map_positivity_guaranteed(0.5));
}

TEST_CASE("stormer_matrix is bit-faithful to its defining array") {
  const double a = 0.4;
  const ComplexMatrix m = stormer_matrix(a);
  REQUIRE(m.dim() == 9);
  // corner ones at the (i,i)-(j,j) positions
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) REQUIRE(m(3 * i + i, 3 * j + j) == Complex(1.0));
  // cycled diagonal pattern 1, 1/a, a | a, 1, 1/a | 1/a, a, 1
  REQUIRE(m(1, 1) == Complex(1.0 / a));
  REQUIRE(m(2, 2) == Complex(a));
  REQUIRE(m(3, 3) == Complex(a));
  REQUIRE(m(5, 5) == Complex(1.0 / a));
  REQUIRE(m(6, 6) == Complex(1.0 / a));
  REQUIRE(m(7, 7) == Complex(a));
  // everything else zero
  int nonzero = 0;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (m(i, j) != Complex{}) ++nonzero;
  REQUIRE(nonzero == 9 + 6);
  REQUIRE_THROWS_AS(stormer_matrix(0.0), DomainError);
  REQUIRE_THROWS_AS(stormer_matrix(-1.0), DomainError);
}

TEST_CASE("stormer_matrix stays in the J cone across the parameter range") {
  const double lo = std::log(0.05), hi = std::log(20.0);
  for (int i = 0; i < 20; ++i) {
    const double a = std::exp(lo + (hi - lo) * i / 19.0);
    const JConeCertificate cert = in_J(stormer_matrix(a), full_system(3), 3, 1e-9);
    REQUIRE(cert.member);
  }
}

TEST_CASE("stormer-a1 has unit diagonal and lies in the J cone") {
  const ComplexMatrix m = stormer_matrix(1.0);
  for (int i = 0; i < 9; ++i) REQUIRE(m(i, i) == Complex(1.0));
  REQUIRE(in_J(m, full_system(3), 3, 1e-9).member);
}

TEST_CASE("named_maps carries the expected backbone entries") {
  const auto entries = named_maps();
  auto find = [&](const std::string& name) -> const CorpusEntry* {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  };
  const CorpusEntry* id = find("identity-d3");
  REQUIRE(id != nullptr);
  REQUIRE(id->expected.at("cp") == "true");
  REQUIRE(id->expected.at("decomposable") == "true");

  const CorpusEntry* t2 = find("transpose-d2");
  REQUIRE(t2 != nullptr);
  REQUIRE(t2->expected.at("cp") == "false");
  REQUIRE(t2->expected.at("decomposable") == "true");
  REQUIRE(find("transpose-d3") != nullptr);
  REQUIRE(find("transpose-d4") != nullptr);

  const CorpusEntry* cm = find("choi-mu1");
  REQUIRE(cm != nullptr);
  REQUIRE(cm->expected.at("cp") == "false");
  REQUIRE(cm->expected.at("decomposable") == "false");
  REQUIRE(cm->expected.at("positive-probe") == "no-counterexample");

  REQUIRE(find("negation-d3") != nullptr);
  REQUIRE(find("random-cp-d3") != nullptr);
  REQUIRE(find("random-cocp-d3") != nullptr);
  REQUIRE(find("random-decomposable-d3") != nullptr);
  REQUIRE(find("stormer-a0.5") != nullptr);
  REQUIRE(find("maxent-d2") != nullptr);
}

TEST_CASE("corpus expected verdicts are reproduced by the certifiers") {
  for (const auto& e : named_maps()) {
    if (e.map) {
      for (const auto& [prop, expect] : e.expected) {
        if (prop == "cp") {
          const CertResult r = certify_cp(*e.map, 1e-7, 8000, 11);
          REQUIRE((r.verdict == Verdict::CP) == (expect == "true"));
        } else if (prop == "cocp") {
          const ComplexMatrix c = choi(*e.map);
          const bool cocp =
              is_psd(partial_transpose_outer(c, e.map->domain_dim(), e.map->codomain_dim()),
                     1e-7)
                  .psd;
          REQUIRE(cocp == (expect == "true"));
        } else if (prop == "decomposable") {
          const CertResult r = certify_decomposable(*e.map, 1e-7, 8000, 11);
          if (expect == "true") {
            REQUIRE(r.verdict == Verdict::Decomposable);
          } else {
            REQUIRE(r.verdict == Verdict::NotDecomposable);
          }
        } else if (prop == "positive") {
          const ProbeResult p = positivity_probe(*e.map, 1500, 11);
          REQUIRE(p.counterexample == (expect == "false"));
        } else if (prop == "positive-probe") {
          REQUIRE_FALSE(positivity_probe(*e.map, 1500, 11).counterexample);
        }
      }
    }
    if (e.matrix) {
      for (const auto& [prop, expect] : e.expected) {
        if (prop == "psd") {
          REQUIRE(is_psd(*e.matrix, 1e-9).psd == (expect == "true"));
        } else if (prop == "in-j3" || prop == "in-j2") {
          const int outer = *e.outer_dim;
          const int inner = e.matrix->dim() / outer;
          REQUIRE(in_J(*e.matrix, full_system(inner), outer, 1e-9).member == (expect == "true"));
        } else if (prop == "separable") {
          REQUIRE(expect == "false");
          if (e.matrix->dim() <= 6) {
            const int outer = *e.outer_dim;
            REQUIRE(certify_separable_small(*e.matrix, outer, e.matrix->dim() / outer, 1e-7)
                        .verdict == Verdict::Entangled);
          } else {
            const CertResult r = sep_witness(*e.matrix, *e.outer_dim, *e.inner_dim, 4000, 11);
            REQUIRE(r.verdict == Verdict::Entangled);
          }
        }
      }
    }
  }
}

TEST_CASE("corpus_lookup resolves parameterized families") {
  const auto a = corpus_lookup("stormer-a0.7");
  REQUIRE(a.has_value());
  REQUIRE(a->matrix.has_value());
  REQUIRE(approx_equal(*a->matrix, stormer_matrix(0.7), 0.0));

  const auto b = corpus_lookup("choi-mu1.25");
  REQUIRE(b.has_value());
  REQUIRE(b->map.has_value());

  REQUIRE_FALSE(corpus_lookup("no-such-entry").has_value());
  REQUIRE_FALSE(corpus_lookup("stormer-aXYZ").has_value());
}
