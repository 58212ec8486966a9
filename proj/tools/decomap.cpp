/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "decomap/decomap.hpp"

using namespace decomap;

namespace {

// exit codes: 0 affirmative, 1 negative with certificate, 2 inconclusive,
// 64 usage error, 65 input parse/validation error
constexpr int kExitAffirmative = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;

struct Options {
  std::string format = "human";
  double tol = 1e-7;
  int budget = 20000;
  uint64_t seed = 12345;
};

uint64_t default_seed() {
  if (const char* env = std::getenv("DECOMAP_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring non-numeric DECOMAP_SEED\n";
    }
  }
  return 12345;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool corpus_uri(const std::string& spec, std::string& name) {
  if (spec.rfind("corpus:", 0) != 0) return false;
  name = spec.substr(7);
  return true;
}

MatrixFileData load_matrix(const std::string& spec) {
  std::string name;
  if (corpus_uri(spec, name)) {
    const auto e = corpus_lookup(name);
    if (!e || !e->matrix) throw ParseError("unknown corpus matrix: " + name);
    MatrixFileData d;
    d.matrix = *e->matrix;
    d.name = e->name;
    d.outer_dim = e->outer_dim;
    d.inner_dim = e->inner_dim;
    return d;
  }
  return parse_matrix_text(slurp(spec));
}

LinearMap load_map(const std::string& spec) {
  std::string name;
  if (corpus_uri(spec, name)) {
    const auto e = corpus_lookup(name);
    if (!e || !e->map) throw ParseError("unknown corpus map: " + name);
    if (name.rfind("choi-mu", 0) == 0) {
      try {
        const double mu = std::stod(name.substr(7));
        if (!choi_map_positivity_guaranteed(mu))
          std::cerr << "warning: the Choi family is positive for mu >= 1; mu = " << mu
                    << " is outside the guaranteed range\n";
      } catch (...) {
      }
    }
    return *e->map;
  }
  return parse_map_text(slurp(spec));
}

int exit_code_for(const std::string& verdict) {
  if (verdict == "cp" || verdict == "decomposable" || verdict == "separable" ||
      verdict == "member" || verdict == "psd" || verdict == "value" || verdict == "pass")
    return kExitAffirmative;
  if (verdict == "inconclusive") return kExitInconclusive;
  return kExitNegative;
}

void emit(const Options& o, const ReportData& rep) {
  if (o.format == "report-v1") {
    std::cout << report_to_json(rep) << "\n";
    return;
  }
  std::cout << "verdict: " << rep.verdict << "\n";
  if (!rep.criterion.empty()) std::cout << "criterion: " << rep.criterion << "\n";
  if (rep.value) std::cout << "value: " << io::fmt_human(*rep.value) << "\n";
  for (const auto& [k, v] : rep.diagnostics) std::cout << k << ": " << io::fmt_human(v) << "\n";
}

ReportData base_report(const Options& o, const std::string& command) {
  ReportData rep;
  rep.command = command;
  rep.seed = o.seed;
  rep.budget = o.budget;
  rep.tolerances["tol"] = o.tol;
  return rep;
}

void fill_cert(ReportData& rep, const CertResult& res) {
  rep.verdict = to_string(res.verdict);
  rep.criterion = res.criterion;
  rep.diagnostics = res.residuals;
  if (res.primal) {
    rep.c1 = res.primal->first;
    rep.c2 = res.primal->second;
  }
  rep.witness = res.witness;
  rep.extension = res.extension_choi;
  rep.witness_map = res.witness_map;
  if (res.witness || res.witness_map) rep.value = res.witness_value;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  opt.seed = default_seed();

  CLI::App app{"decomap: certifies complete positivity and decomposability of linear maps "
               "on matrix algebras, PSD/PPT cone membership, and desk-scale separability"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("decomap ") + kVersion);

  std::string matrix_spec, map_spec, report_spec, dump_name;
  int p_dim = 0, q_dim = 0, outer = 0, inner = 0;

  auto add_common = [&](CLI::App* sub, bool with_budget_seed = true) {
    sub->add_option("--format", opt.format, "output format: human or report-v1")
        ->check(CLI::IsMember({"human", "report-v1"}));
    sub->add_option("--tol", opt.tol, "relative tolerance (default 1e-7)");
    if (with_budget_seed) {
      sub->add_option("--budget", opt.budget, "iteration budget (default 20000)");
      sub->add_option("--seed", opt.seed, "random seed (default env DECOMAP_SEED or 12345)");
    }
  };

  CLI::App* c_psd = app.add_subcommand("check-psd", "minimum eigenvalue / PSD test");
  c_psd->add_option("--matrix", matrix_spec, "matrix file or corpus:NAME")->required();
  add_common(c_psd, false);

  CLI::App* c_j = app.add_subcommand("check-j", "PSD plus block-transpose-PSD cone membership");
  c_j->add_option("--matrix", matrix_spec, "matrix file or corpus:NAME")->required();
  c_j->add_option("--outer", outer, "outer (block) dimension");
  c_j->add_option("--inner", inner, "inner dimension (alternative to --outer)");
  add_common(c_j, false);

  CLI::App* c_de = app.add_subcommand("dual-eval", "evaluate the dual functional of a map");
  c_de->add_option("--map", map_spec, "map file or corpus:NAME")->required();
  c_de->add_option("--matrix", matrix_spec, "matrix file or corpus:NAME")->required();
  add_common(c_de, false);

  CLI::App* c_cp = app.add_subcommand("certify-cp", "complete positivity certification");
  c_cp->add_option("--map", map_spec, "map file or corpus:NAME")->required();
  add_common(c_cp);

  CLI::App* c_dec =
      app.add_subcommand("certify-decomposable", "decomposability certification");
  c_dec->add_option("--map", map_spec, "map file or corpus:NAME")->required();
  add_common(c_dec);

  CLI::App* c_sep = app.add_subcommand("certify-separable",
                                       "separability via the PPT criterion (p*q <= 6)");
  c_sep->add_option("--matrix", matrix_spec, "state file or corpus:NAME")->required();
  c_sep->add_option("--p", p_dim, "outer factor dimension")->required();
  c_sep->add_option("--q", q_dim, "inner factor dimension")->required();
  add_common(c_sep, false);

  CLI::App* c_wit = app.add_subcommand("sep-witness", "positive-map entanglement witness search");
  c_wit->add_option("--matrix", matrix_spec, "state file or corpus:NAME")->required();
  c_wit->add_option("--p", p_dim, "outer factor dimension")->required();
  c_wit->add_option("--q", q_dim, "inner factor dimension")->required();
  add_common(c_wit);

  CLI::App* c_corpus = app.add_subcommand("corpus", "built-in example corpus");
  uint64_t corpus_seed = kDefaultCorpusSeed;
  CLI::App* c_list = c_corpus->add_subcommand("list", "list corpus entries");
  c_list->add_option("--seed", corpus_seed, "regenerate seeded random entries with this seed");
  CLI::App* c_dump = c_corpus->add_subcommand("dump", "dump an entry in the file format");
  c_dump->add_option("name", dump_name, "entry name, e.g. choi-mu1 or stormer-a0.5")->required();
  c_dump->add_option("--seed", corpus_seed, "regenerate seeded random entries with this seed");
  c_corpus->require_subcommand(1);

  CLI::App* c_ver = app.add_subcommand("verify", "re-verify a report-v1 document");
  c_ver->add_option("--report", report_spec, "report file")->required();
  add_common(c_ver, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (c_psd->parsed()) {
      const MatrixFileData in = load_matrix(matrix_spec);
      const PsdCheck pc = is_psd(in.matrix, opt.tol);
      ReportData rep = base_report(opt, "check-psd");
      rep.verdict = pc.psd ? "psd" : "not-psd";
      rep.criterion = "minimum eigenvalue against -tol * (1 + frobenius norm)";
      rep.value = pc.lambda_min;
      rep.diagnostics["lambda_min"] = pc.lambda_min;
      rep.diagnostics["symmetrization_residual"] = in.matrix.hermiticity_residual();
      rep.input_matrix = in;
      emit(opt, rep);
      return exit_code_for(rep.verdict);
    }

    if (c_j->parsed()) {
      const MatrixFileData in = load_matrix(matrix_spec);
      int k = outer;
      if (k == 0 && inner > 0) {
        if (in.matrix.dim() % inner != 0) throw ParseError("--inner does not divide dim");
        k = in.matrix.dim() / inner;
      }
      if (k == 0 && in.outer_dim) k = *in.outer_dim;
      if (k <= 0) throw ParseError("check-j: outer dimension required (--outer or file metadata)");
      if (in.matrix.dim() % k != 0) throw ParseError("check-j: outer does not divide dim");
      const int d = in.matrix.dim() / k;
      const JConeCertificate cert = in_J(in.matrix, full_system(d), k, opt.tol);
      ReportData rep = base_report(opt, "check-j");
      rep.verdict = cert.member ? "member" : "not-member";
      rep.criterion = "PSD and PSD after block transpose";
      rep.diagnostics["lambda_min_raw"] = cert.lambda_min_raw;
      rep.diagnostics["lambda_min_pt"] = cert.lambda_min_pt;
      rep.diagnostics["symmetrization_residual"] = cert.symmetrization_residual;
      rep.input_matrix = in;
      rep.outer = k;
      emit(opt, rep);
      return exit_code_for(rep.verdict);
    }

    if (c_de->parsed()) {
      const LinearMap phi = load_map(map_spec);
      const MatrixFileData in = load_matrix(matrix_spec);
      const Complex v = dual_eval(phi, in.matrix);
      ReportData rep = base_report(opt, "dual-eval");
      rep.verdict = "value";
      rep.criterion = "dual functional (block-sum form)";
      rep.value = v.real();
      rep.input_map = phi;
      rep.input_matrix = in;
      if (opt.format == "human") {
        std::cout << io::fmt_human(v.real()) << "\n";
      } else {
        emit(opt, rep);
      }
      return kExitAffirmative;
    }

    if (c_cp->parsed()) {
      const LinearMap phi = load_map(map_spec);
      const CertResult res = certify_cp(phi, opt.tol, opt.budget, opt.seed);
      ReportData rep = base_report(opt, "certify-cp");
      fill_cert(rep, res);
      rep.input_map = phi;
      emit(opt, rep);
      return exit_code_for(rep.verdict);
    }

    if (c_dec->parsed()) {
      const LinearMap phi = load_map(map_spec);
      const CertResult res = certify_decomposable(phi, opt.tol, opt.budget, opt.seed);
      ReportData rep = base_report(opt, "certify-decomposable");
      fill_cert(rep, res);
      rep.input_map = phi;
      emit(opt, rep);
      return exit_code_for(rep.verdict);
    }

    if (c_sep->parsed()) {
      const MatrixFileData in = load_matrix(matrix_spec);
      const CertResult res = certify_separable_small(in.matrix, p_dim, q_dim, opt.tol);
      ReportData rep = base_report(opt, "certify-separable");
      fill_cert(rep, res);
      rep.input_matrix = in;
      rep.p = p_dim;
      rep.q = q_dim;
      emit(opt, rep);
      return exit_code_for(rep.verdict);
    }

    if (c_wit->parsed()) {
      const MatrixFileData in = load_matrix(matrix_spec);
      const CertResult res = sep_witness(in.matrix, p_dim, q_dim, opt.budget, opt.seed);
      ReportData rep = base_report(opt, "sep-witness");
      fill_cert(rep, res);
      rep.input_matrix = in;
      rep.p = p_dim;
      rep.q = q_dim;
      emit(opt, rep);
      return exit_code_for(rep.verdict);
    }

    if (c_list->parsed()) {
      for (const auto& e : named_maps(corpus_seed))
        std::cout << e.name << "\t" << (e.map ? "map" : "matrix") << "\t" << e.provenance << "\n";
      return kExitAffirmative;
    }

    if (c_dump->parsed()) {
      const auto e = corpus_lookup(dump_name, corpus_seed);
      if (!e) throw ParseError("unknown corpus entry: " + dump_name);
      if (e->matrix)
        std::cout << matrix_to_json(*e->matrix, e->name, e->outer_dim, e->inner_dim) << "\n";
      else
        std::cout << map_to_json(*e->map, e->name) << "\n";
      return kExitAffirmative;
    }

    if (c_ver->parsed()) {
      const ReportData rep = parse_report_text(slurp(report_spec));
      const bool ok = verify_report(rep);
      if (opt.format == "report-v1") {
        std::cout << "{\"format\":\"report-v1\",\"command\":\"verify\",\"verdict\":\""
                  << (ok ? "pass" : "fail") << "\"}\n";
      } else {
        std::cout << "verification: " << (ok ? "pass" : "fail") << "\n";
      }
      return ok ? kExitAffirmative : kExitNegative;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return kExitUsage;
}
