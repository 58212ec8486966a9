/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_IO_HPP
#define DECOMAP_IO_HPP

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "decomap/certify.hpp"
#include "decomap/complexmatrix.hpp"
#include "decomap/errors.hpp"
#include "decomap/maps.hpp"
#include "decomap/opsys.hpp"
#include "decomap/version.hpp"

namespace decomap {

//=========================================================================
// Canonical serialization.  Files are JSON; the writer below is the single
// source of bytes so that dump -> load -> dump round-trips are identical.
// Numbers carry 17 significant digits, which reproduces doubles exactly.
//=========================================================================

namespace io {

inline std::string fmt_num(double v) {
  if (v == 0.0) return "0";  // canonicalize negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Human-readable rounding; serialized formats keep the full 17 digits.
inline std::string fmt_human(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

inline std::string entries_json(const ComplexMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.dim(); ++i) {
    if (i) out += ",";
    out += "[";
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out += ",";
      out += "[" + fmt_num(m(i, j).real()) + "," + fmt_num(m(i, j).imag()) + "]";
    }
    out += "]";
  }
  out += "]";
  return out;
}

}  // namespace io

struct MatrixFileData {
  ComplexMatrix matrix;
  std::string name;
  std::optional<int> outer_dim;
  std::optional<int> inner_dim;
};

inline std::string matrix_to_json(const ComplexMatrix& m, const std::string& name = "",
                                  std::optional<int> outer = std::nullopt,
                                  std::optional<int> inner = std::nullopt) {
  std::string out = "{";
  if (!name.empty()) out += "\"name\":\"" + io::escape(name) + "\",";
  out += "\"kind\":\"matrix\",\"dim\":" + std::to_string(m.dim());
  if (outer) out += ",\"outer_dim\":" + std::to_string(*outer);
  if (inner) out += ",\"inner_dim\":" + std::to_string(*inner);
  out += ",\"entries\":" + io::entries_json(m) + "}";
  return out;
}

namespace io {

inline ComplexMatrix parse_entries(const nlohmann::json& j, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError(std::string(what) + ": entries must be a dim x dim array");
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError(std::string(what) + ": ragged entries row");
    for (int c = 0; c < dim; ++c) {
      const auto& cell = row[static_cast<size_t>(c)];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
        throw ParseError(std::string(what) + ": each entry must be a [re, im] number pair");
      m(i, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  if (!m.all_finite()) throw ParseError(std::string(what) + ": entries must be finite");
  return m;
}

}  // namespace io

inline MatrixFileData parse_matrix_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix file: not a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("matrix file: integer field 'dim' required");
  const int dim = j["dim"].get<int>();
  if (dim < 1 || dim > 128) throw ParseError("matrix file: dim out of range");
  if (!j.contains("entries")) throw ParseError("matrix file: field 'entries' required");
  MatrixFileData out;
  out.matrix = io::parse_entries(j["entries"], dim, "matrix file");
  if (j.contains("name")) out.name = j["name"].get<std::string>();
  if (j.contains("outer_dim")) out.outer_dim = j["outer_dim"].get<int>();
  if (j.contains("inner_dim")) out.inner_dim = j["inner_dim"].get<int>();
  if (out.outer_dim && out.inner_dim && *out.outer_dim * *out.inner_dim != dim)
    throw ParseError("matrix file: outer_dim * inner_dim != dim");
  return out;
}

inline MatrixFileData parse_matrix_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("matrix file: invalid JSON: ") + e.what());
  }
  return parse_matrix_json(j);
}

// Maps are stored by the generator list of the domain plus the images of
// the orthonormalized basis elements, in the deterministic construction
// order of make_opsys (unit first, then generator order).
inline std::string map_to_json(const LinearMap& m, const std::string& name = "") {
  std::string out = "{";
  if (!name.empty()) out += "\"name\":\"" + io::escape(name) + "\",";
  out += "\"kind\":\"map\",\"ambient_dim\":" + std::to_string(m.domain_dim()) +
         ",\"codomain_dim\":" + std::to_string(m.codomain_dim());
  if (m.domain().is_full()) {
    out += ",\"full\":true";
  } else {
    out += ",\"generators\":[";
    const auto& gens = m.domain().generators();
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) out += ",";
      out += io::entries_json(gens[i]);
    }
    out += "]";
  }
  out += ",\"basis_images\":[";
  for (int i = 0; i < m.domain().dim(); ++i) {
    if (i) out += ",";
    out += io::entries_json(m.action(i));
  }
  out += "]}";
  return out;
}

inline LinearMap parse_map_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("map file: not a JSON object");
  for (const char* f : {"ambient_dim", "codomain_dim"})
    if (!j.contains(f) || !j[f].is_number_integer())
      throw ParseError(std::string("map file: integer field '") + f + "' required");
  const int d = j["ambient_dim"].get<int>();
  const int n = j["codomain_dim"].get<int>();
  if (d < 1 || d > 64 || n < 1 || n > 64) throw ParseError("map file: dimension out of range");
  OperatorSystem sys;
  if (j.contains("full") && j["full"].is_boolean() && j["full"].get<bool>()) {
    sys = full_system(d);
  } else if (j.contains("generators") && j["generators"].is_array()) {
    std::vector<ComplexMatrix> gens;
    for (const auto& g : j["generators"]) gens.push_back(io::parse_entries(g, d, "map file"));
    sys = make_opsys(gens, d);
  } else {
    throw ParseError("map file: either 'full': true or a 'generators' array required");
  }
  if (!j.contains("basis_images") || !j["basis_images"].is_array())
    throw ParseError("map file: 'basis_images' array required");
  if (static_cast<int>(j["basis_images"].size()) != sys.dim())
    throw ParseError("map file: basis_images count (" +
                     std::to_string(j["basis_images"].size()) +
                     ") does not match the system dimension (" + std::to_string(sys.dim()) + ")");
  std::vector<ComplexMatrix> images;
  for (const auto& im : j["basis_images"]) images.push_back(io::parse_entries(im, n, "map file"));
  return LinearMap(std::move(sys), n, std::move(images));
}

inline LinearMap parse_map_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("map file: invalid JSON: ") + e.what());
  }
  return parse_map_json(j);
}

//=========================================================================
// Reports (format "report-v1"): every report embeds its input so it can be
// re-verified in a fresh process.
//=========================================================================

struct ReportData {
  std::string command;
  std::string verdict;
  std::string criterion;
  std::optional<double> value;
  uint64_t seed = 0;
  int budget = 0;
  std::map<std::string, double> tolerances;
  std::map<std::string, double> diagnostics;
  // certificate payloads
  std::optional<ComplexMatrix> c1, c2, witness, extension;
  std::optional<LinearMap> witness_map;
  // input payloads
  std::optional<LinearMap> input_map;
  std::optional<MatrixFileData> input_matrix;
  std::optional<int> p, q, outer;
};

inline std::string report_to_json(const ReportData& r) {
  std::string out = "{\"format\":\"report-v1\",\"tool\":\"decomap\",\"version\":\"";
  out += kVersion;
  out += "\",\"command\":\"" + io::escape(r.command) + "\"";
  out += ",\"verdict\":\"" + io::escape(r.verdict) + "\"";
  out += ",\"criterion\":\"" + io::escape(r.criterion) + "\"";
  if (r.value) out += ",\"value\":" + io::fmt_num(*r.value);
  out += ",\"seed\":" + std::to_string(r.seed);
  out += ",\"budget\":" + std::to_string(r.budget);
  out += ",\"tolerances\":{";
  {
    bool first = true;
    for (const auto& [k, v] : r.tolerances) {
      if (!first) out += ",";
      first = false;
      out += "\"" + io::escape(k) + "\":" + io::fmt_num(v);
    }
  }
  out += "},\"diagnostics\":{";
  {
    bool first = true;
    for (const auto& [k, v] : r.diagnostics) {
      if (!first) out += ",";
      first = false;
      out += "\"" + io::escape(k) + "\":" + io::fmt_num(v);
    }
  }
  out += "}";
  std::string cert;
  auto add_cert = [&cert](const std::string& key, const std::string& payload) {
    if (!cert.empty()) cert += ",";
    cert += "\"" + key + "\":" + payload;
  };
  if (r.c1) add_cert("c1", matrix_to_json(*r.c1));
  if (r.c2) add_cert("c2", matrix_to_json(*r.c2));
  if (r.witness) add_cert("witness", matrix_to_json(*r.witness));
  if (r.extension) add_cert("extension_choi", matrix_to_json(*r.extension));
  if (r.witness_map) add_cert("witness_map", map_to_json(*r.witness_map));
  if (!cert.empty()) out += ",\"certificate\":{" + cert + "}";
  std::string in;
  auto add_in = [&in](const std::string& key, const std::string& payload) {
    if (!in.empty()) in += ",";
    in += "\"" + key + "\":" + payload;
  };
  if (r.input_map) add_in("map", map_to_json(*r.input_map));
  if (r.input_matrix)
    add_in("matrix", matrix_to_json(r.input_matrix->matrix, r.input_matrix->name,
                                    r.input_matrix->outer_dim, r.input_matrix->inner_dim));
  if (r.p) add_in("p", std::to_string(*r.p));
  if (r.q) add_in("q", std::to_string(*r.q));
  if (r.outer) add_in("outer", std::to_string(*r.outer));
  if (!in.empty()) out += ",\"input\":{" + in + "}";
  out += "}";
  return out;
}

inline ReportData parse_report_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("report: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format") || j["format"] != "report-v1")
    throw ParseError("report: missing or unsupported 'format' (expected report-v1)");
  ReportData r;
  try {
    r.command = j.at("command").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    if (j.contains("criterion")) r.criterion = j["criterion"].get<std::string>();
    if (j.contains("value")) r.value = j["value"].get<double>();
    if (j.contains("seed")) r.seed = j["seed"].get<uint64_t>();
    if (j.contains("budget")) r.budget = j["budget"].get<int>();
    if (j.contains("tolerances"))
      for (const auto& [k, v] : j["tolerances"].items()) r.tolerances[k] = v.get<double>();
    if (j.contains("diagnostics"))
      for (const auto& [k, v] : j["diagnostics"].items()) r.diagnostics[k] = v.get<double>();
    if (j.contains("certificate")) {
      const auto& c = j["certificate"];
      if (c.contains("c1")) r.c1 = parse_matrix_json(c["c1"]).matrix;
      if (c.contains("c2")) r.c2 = parse_matrix_json(c["c2"]).matrix;
      if (c.contains("witness")) r.witness = parse_matrix_json(c["witness"]).matrix;
      if (c.contains("extension_choi")) r.extension = parse_matrix_json(c["extension_choi"]).matrix;
      if (c.contains("witness_map")) r.witness_map = parse_map_json(c["witness_map"]);
    }
    if (j.contains("input")) {
      const auto& in = j["input"];
      if (in.contains("map")) r.input_map = parse_map_json(in["map"]);
      if (in.contains("matrix")) r.input_matrix = parse_matrix_json(in["matrix"]);
      if (in.contains("p")) r.p = in["p"].get<int>();
      if (in.contains("q")) r.q = in["q"].get<int>();
      if (in.contains("outer")) r.outer = in["outer"].get<int>();
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  return r;
}

// Rebuild the certificate a report describes and re-verify it from scratch.
inline bool verify_report(const ReportData& r) {
  const double tol = r.tolerances.count("tol") ? r.tolerances.at("tol") : 1e-7;
  auto close = [](double a, double b, double rel) {
    return std::abs(a - b) <= rel * (1.0 + std::max(std::abs(a), std::abs(b)));
  };

  if (r.command == "check-psd") {
    if (!r.input_matrix) throw MalformedCertificateError("check-psd report: input matrix missing");
    const PsdCheck pc = is_psd(r.input_matrix->matrix, tol);
    const std::string expect = pc.psd ? "psd" : "not-psd";
    if (expect != r.verdict) return false;
    auto it = r.diagnostics.find("lambda_min");
    return it != r.diagnostics.end() && close(it->second, pc.lambda_min, 1e-9);
  }
  if (r.command == "check-j") {
    if (!r.input_matrix || !r.outer)
      throw MalformedCertificateError("check-j report: input matrix or outer dim missing");
    const int outer = *r.outer;
    if (outer < 1 || r.input_matrix->matrix.dim() % outer != 0) return false;
    const int inner = r.input_matrix->matrix.dim() / outer;
    const JConeCertificate cert = in_J(r.input_matrix->matrix, full_system(inner), outer, tol);
    if ((cert.member ? "member" : "not-member") != r.verdict) return false;
    auto a = r.diagnostics.find("lambda_min_raw");
    auto b = r.diagnostics.find("lambda_min_pt");
    return a != r.diagnostics.end() && b != r.diagnostics.end() &&
           close(a->second, cert.lambda_min_raw, 1e-9) && close(b->second, cert.lambda_min_pt, 1e-9);
  }
  if (r.command == "dual-eval") {
    if (!r.input_map || !r.input_matrix || !r.value)
      throw MalformedCertificateError("dual-eval report: payload missing");
    const double v = dual_eval(*r.input_map, r.input_matrix->matrix).real();
    return close(v, *r.value, 1e-9);
  }

  const auto verdict = verdict_from_string(r.verdict);
  if (!verdict) throw MalformedCertificateError("report: unknown verdict '" + r.verdict + "'");
  CertResult res;
  res.verdict = *verdict;
  res.tol = tol;
  res.seed = r.seed;
  res.budget = r.budget;
  res.criterion = r.criterion;
  if (r.value) res.witness_value = *r.value;
  if (r.c1 && r.c2) res.primal = std::make_pair(*r.c1, *r.c2);
  res.witness = r.witness;
  res.extension_choi = r.extension;
  res.witness_map = r.witness_map;
  res.residuals = r.diagnostics;

  if (r.command == "certify-cp" || r.command == "certify-decomposable") {
    if (!r.input_map) throw MalformedCertificateError("report: input map missing");
    return verify_certificate(res, *r.input_map);
  }
  if (r.command == "certify-separable" || r.command == "sep-witness") {
    if (!r.input_matrix || !r.p || !r.q)
      throw MalformedCertificateError("report: input state or dimensions missing");
    return verify_certificate(res, r.input_matrix->matrix, *r.p, *r.q);
  }
  throw MalformedCertificateError("report: unknown command '" + r.command + "'");
}

}  // namespace decomap

#endif
