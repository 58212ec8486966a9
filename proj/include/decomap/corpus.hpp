/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_CORPUS_HPP
#define DECOMAP_CORPUS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decomap/complexmatrix.hpp"
#include "decomap/cones.hpp"
#include "decomap/eig.hpp"
#include "decomap/errors.hpp"
#include "decomap/maps.hpp"

namespace decomap {

//=========================================================================
// Built-in named examples and seeded generators
//=========================================================================

inline constexpr uint64_t kDefaultCorpusSeed = 20260809ull;

// Choi's positive indecomposable map family on M_3: off-diagonal entries
// are negated and the diagonal picks up mu * (x33, x11, x22).  The
// positivity claim holds for mu >= 1 (smaller values are permitted but
// flagged by choi_map_positivity_guaranteed).
inline ComplexMatrix choi_map_entrywise(const ComplexMatrix& x, double mu) {
  ComplexMatrix out = -x;
  out(0, 0) = x(0, 0) + mu * x(2, 2);
  out(1, 1) = x(1, 1) + mu * x(0, 0);
  out(2, 2) = x(2, 2) + mu * x(1, 1);
  return out;
}

inline bool choi_map_positivity_guaranteed(double mu) { return mu >= 1.0; }

inline LinearMap choi_map(double mu) {
  OperatorSystem s = full_system(3);
  std::vector<ComplexMatrix> images;
  images.reserve(static_cast<size_t>(s.dim()));
  for (int i = 0; i < s.dim(); ++i) images.push_back(choi_map_entrywise(s.basis(i), mu));
  return LinearMap(std::move(s), 3, std::move(images));
}

// Stormer's 9x9 PPT family A(a): diagonal blocks diag(1,1/a,a) cycled, plus
// the rank-one corner of ones on the (i,i) positions.  PSD and PPT for
// every a > 0.
inline ComplexMatrix stormer_matrix(double a) {
  if (!(a > 0.0)) throw DomainError("stormer_matrix: parameter must be positive");
  ComplexMatrix m(9);
  const double inv = 1.0 / a;
  const double diag[3][3] = {{1.0, inv, a}, {a, 1.0, inv}, {inv, a, 1.0}};
  for (int i = 0; i < 3; ++i)
    for (int b = 0; b < 3; ++b) m(3 * i + b, 3 * i + b) = diag[i][b];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) m(3 * i + i, 3 * j + j) = 1.0;
  return m;
}

struct CorpusEntry {
  std::string name;
  std::optional<LinearMap> map;
  std::optional<ComplexMatrix> matrix;
  std::map<std::string, std::string> expected;
  std::string provenance;
  std::optional<int> outer_dim;  // bipartite structure for matrices
  std::optional<int> inner_dim;
};

namespace detail {

inline LinearMap random_cp_map(int d, int n, Rng& rng) {
  // PSD Choi guarantees complete positivity.
  const ComplexMatrix b = rng.gaussian_matrix(d * n);
  ComplexMatrix c = (b.adjoint() * b).hermitized();
  c *= Complex(1.0 / c.dim(), 0.0);
  return map_from_choi(c, d, n);
}

inline LinearMap random_cocp_map(int d, int n, Rng& rng) {
  const ComplexMatrix b = rng.gaussian_matrix(d * n);
  ComplexMatrix c = (b.adjoint() * b).hermitized();
  c *= Complex(1.0 / c.dim(), 0.0);
  return map_from_choi(partial_transpose_outer(c, d, n), d, n);
}

}  // namespace detail

// The corpus backbone: every `expected` entry is exercised by the
// acceptance suite.  Expectations of seeded random entries are recomputed
// from their construction, never asserted from stale values.
inline std::vector<CorpusEntry> named_maps(uint64_t seed = kDefaultCorpusSeed) {
  std::vector<CorpusEntry> out;

  {
    CorpusEntry e;
    e.name = "identity-d3";
    e.map = identity_map(3);
    e.expected = {{"cp", "true"}, {"decomposable", "true"}, {"positive", "true"}};
    e.provenance = "identity map on the 3x3 matrices";
    out.push_back(std::move(e));
  }
  for (int d = 2; d <= 4; ++d) {
    CorpusEntry e;
    e.name = "transpose-d" + std::to_string(d);
    e.map = transpose_map(d);
    e.expected = {{"cp", "false"}, {"cocp", "true"}, {"decomposable", "true"},
                  {"positive", "true"}};
    e.provenance = "transpose map on the " + std::to_string(d) + "x" + std::to_string(d) +
                   " matrices";
    out.push_back(std::move(e));
  }
  {
    Rng rng(seed);
    CorpusEntry e;
    e.name = "random-cp-d3";
    e.map = detail::random_cp_map(3, 3, rng);
    e.expected = {{"cp", "true"}, {"decomposable", "true"}};
    e.provenance = "seeded random map with PSD Choi matrix";
    out.push_back(std::move(e));
  }
  {
    Rng rng(seed + 1);
    CorpusEntry e;
    e.name = "random-cocp-d3";
    LinearMap m = detail::random_cocp_map(3, 3, rng);
    // CP-ness of a random co-CP map depends on the draw; recompute it.
    const bool also_cp = is_psd(choi(m), 1e-9).psd;
    e.expected = {{"cp", also_cp ? "true" : "false"}, {"cocp", "true"},
                  {"decomposable", "true"}};
    e.map = std::move(m);
    e.provenance = "seeded random map whose Choi matrix is a partial transpose of a PSD matrix";
    out.push_back(std::move(e));
  }
  {
    Rng rng1(seed + 2), rng2(seed + 3);
    CorpusEntry e;
    e.name = "random-decomposable-d3";
    LinearMap m = detail::random_cp_map(3, 3, rng1) + detail::random_cocp_map(3, 3, rng2);
    const bool also_cp = is_psd(choi(m), 1e-9).psd;
    e.expected = {{"decomposable", "true"}, {"cp", also_cp ? "true" : "false"}};
    e.map = std::move(m);
    e.provenance = "seeded random sum of a cp and a co-cp map";
    out.push_back(std::move(e));
  }
  for (double mu : {1.0, 1.5, 2.0}) {
    CorpusEntry e;
    std::string tag = mu == 1.0 ? "1" : (mu == 1.5 ? "1.5" : "2");
    e.name = "choi-mu" + tag;
    e.map = choi_map(mu);
    e.expected = {{"cp", "false"}, {"decomposable", "false"},
                  {"positive-probe", "no-counterexample"}};
    e.provenance = "Choi's positive but not decomposable map on the 3x3 matrices, mu=" + tag;
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "negation-d3";
    e.map = identity_map(3) * (-1.0);
    e.expected = {{"cp", "false"}, {"positive", "false"}};
    e.provenance = "negation of the identity map; not positive";
    out.push_back(std::move(e));
  }

  for (double a : {0.25, 0.5, 1.0, 2.0}) {
    CorpusEntry e;
    std::string tag = a == 0.25 ? "0.25" : (a == 0.5 ? "0.5" : (a == 1.0 ? "1" : "2"));
    e.name = "stormer-a" + tag;
    e.matrix = stormer_matrix(a);
    e.outer_dim = 3;
    e.inner_dim = 3;
    e.expected = {{"psd", "true"}, {"in-j3", "true"}};
    if (a < 1.0) e.expected["separable"] = "false";
    e.provenance = "Stormer's PPT matrix family A(a), a=" + tag;
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "separable-d2d2";
    e.matrix = random_separable(full_system(2), 2, seed + 7, 3);
    e.outer_dim = 2;
    e.inner_dim = 2;
    e.expected = {{"psd", "true"}, {"in-j2", "true"}};
    e.provenance = "seeded random element of the separable cone on C^2 (x) C^2";
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "maxent-d2";
    ComplexMatrix m(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i * 2 + i, j * 2 + j) = 1.0;
    e.matrix = std::move(m);
    e.outer_dim = 2;
    e.inner_dim = 2;
    e.expected = {{"psd", "true"}, {"in-j2", "false"}, {"separable", "false"}};
    e.provenance = "unnormalized maximally entangled projector e e* on C^2 (x) C^2";
    out.push_back(std::move(e));
  }
  return out;
}

// Resolves corpus URIs: fixed names from named_maps plus the parameterized
// families "choi-mu<x>" and "stormer-a<x>".
inline std::optional<CorpusEntry> corpus_lookup(const std::string& name,
                                                uint64_t seed = kDefaultCorpusSeed) {
  for (auto& e : named_maps(seed))
    if (e.name == name) return e;
  auto parse_tail = [](const std::string& s, const std::string& prefix,
                       double& value) -> bool {
    if (s.rfind(prefix, 0) != 0) return false;
    try {
      size_t used = 0;
      value = std::stod(s.substr(prefix.size()), &used);
      return used == s.size() - prefix.size();
    } catch (...) {
      return false;
    }
  };
  double v = 0.0;
  if (parse_tail(name, "choi-mu", v)) {
    CorpusEntry e;
    e.name = name;
    e.map = choi_map(v);
    e.provenance = "Choi map family, mu=" + std::to_string(v);
    return e;
  }
  if (parse_tail(name, "stormer-a", v)) {
    CorpusEntry e;
    e.name = name;
    e.matrix = stormer_matrix(v);
    e.outer_dim = 3;
    e.inner_dim = 3;
    e.provenance = "Stormer matrix family, a=" + std::to_string(v);
    return e;
  }
  return std::nullopt;
}

}  // namespace decomap

#endif
