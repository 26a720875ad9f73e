#include "conegap/json_io.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace conegap {

json metric_to_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

double metric_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInf;
  return j.get<double>();
}

json complex_to_json(const Complex& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  if (!j.is_object() || !j.contains("re"))
    throw std::invalid_argument("expected {\"re\":..,\"im\":..} or a number");
  return Complex{j.at("re").get<double>(), j.value("im", 0.0)};
}

CMat matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix"))
    throw std::invalid_argument("matrix file: missing \"matrix\" field");
  const json& rows = j.at("matrix");
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix file: empty matrix");
  const std::size_t n = rows.size();
  CMat A(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      std::ostringstream msg;
      msg << "matrix file: row " << (i + 1) << " has " << rows[i].size() << " entries, expected " << n;
      throw std::invalid_argument(msg.str());
    }
    for (std::size_t k = 0; k < n; ++k) {
      try {
        A(i, k) = complex_from_json(rows[i][k]);
      } catch (const std::exception&) {
        std::ostringstream msg;
        msg << "matrix file: bad entry at row " << (i + 1) << ", column " << (k + 1);
        throw std::invalid_argument(msg.str());
      }
    }
  }
  if (!all_finite(A)) throw std::invalid_argument("matrix file: non-finite entry");
  return A;
}

CMat matrix_from_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    std::size_t col = 0;
    while (std::getline(ls, cell, ',')) {
      ++col;
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        std::ostringstream msg;
        msg << "csv matrix: bad number at row " << lineno << ", column " << col;
        throw std::invalid_argument(msg.str());
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("csv matrix: empty file");
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != 2 * n) {
      std::ostringstream msg;
      msg << "csv matrix: row " << (i + 1) << " has " << rows[i].size() << " columns, expected "
          << 2 * n << " (re,im interleaved)";
      throw std::invalid_argument(msg.str());
    }
  CMat A(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) A(i, k) = Complex{rows[i][2 * k], rows[i][2 * k + 1]};
  if (!all_finite(A)) throw std::invalid_argument("csv matrix: non-finite entry");
  return A;
}

CMat matrix_from_text(const std::string& text) {
  const std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return matrix_from_json(json::parse(text));
  return matrix_from_csv(text);
}

json matrix_to_json(const CMat& A) {
  json rows = json::array();
  for (std::size_t i = 0; i < A.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < A.dim(); ++k) row.push_back(complex_to_json(A(i, k)));
    rows.push_back(std::move(row));
  }
  return json{{"matrix", std::move(rows)}};
}

std::vector<CVec> vectors_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vectors"))
    throw std::invalid_argument("vectors file: missing \"vectors\" field");
  const json& arr = j.at("vectors");
  if (!arr.is_array() || arr.empty()) throw std::invalid_argument("vectors file: empty list");
  std::vector<CVec> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    CVec v;
    for (const json& entry : arr[i]) v.push_back(complex_from_json(entry));
    if (v.empty() || !all_finite(v)) {
      std::ostringstream msg;
      msg << "vectors file: bad vector at index " << (i + 1);
      throw std::invalid_argument(msg.str());
    }
    out.push_back(std::move(v));
  }
  return out;
}

ConeSpec cone_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("functionals"))
    throw std::invalid_argument("cone spec: missing \"functionals\" field");
  ConeSpec spec;
  for (const json& f : j.at("functionals")) {
    CVec m;
    for (const json& entry : f) m.push_back(complex_from_json(entry));
    spec.functionals.push_back(std::move(m));
  }
  if (spec.functionals.empty()) throw std::invalid_argument("cone spec: empty functional list");
  return spec;
}

json cone_spec_to_json(const ConeSpec& spec) {
  json arr = json::array();
  for (const CVec& m : spec.functionals) {
    json f = json::array();
    for (const Complex& z : m) f.push_back(complex_to_json(z));
    arr.push_back(std::move(f));
  }
  return json{{"functionals", std::move(arr)}};
}

json condition_report_to_json(const ConditionReport& r) {
  json j{{"holds", r.holds}, {"margin", r.margin}};
  if (r.first_violation) {
    // 1-based in reports.
    json v = json::array();
    for (std::size_t idx : *r.first_violation) v.push_back(idx + 1);
    j["violation"] = std::move(v);
  }
  return j;
}

json diameter_bounds_to_json(const DiameterBounds& db) {
  return json{{"delta1", db.delta1},
              {"delta2", {{"lower", db.delta2.lower}, {"upper", db.delta2.upper}}},
              {"lower", db.lower},
              {"upper", db.upper}};
}

json power_result_to_json(const PowerResult& pr) {
  json vec = json::array();
  for (const Complex& z : pr.v) vec.push_back(complex_to_json(z));
  return json{{"lambda", complex_to_json(pr.lambda)},
              {"vector", std::move(vec)},
              {"residual", pr.residual},
              {"iters", pr.iters},
              {"error_bound", metric_to_json(pr.error_bound)}};
}

json certificate_to_json(const GapCertificate& cert) {
  json j{{"condition", condition_report_to_json(cert.condition)}};
  if (!cert.condition.holds) return j;
  j["delta_diam"] = {{"lower", cert.diam->lower}, {"upper", cert.diam->upper}};
  if (cert.ts)
    j["theta_sigma"] = {{"theta", cert.ts->theta}, {"sigma", cert.ts->sigma}, {"bound", cert.ts->diam_bound}};
  j["contraction"] = cert.c;
  if (cert.leading) j["leading"] = power_result_to_json(*cert.leading);
  if (cert.oracle_ratio) {
    j["oracle"] = {{"ratio", *cert.oracle_ratio}, {"pass", *cert.oracle_ratio <= cert.c + 1e-9}};
  }
  return j;
}

json region_to_json(const Region& r) {
  json parts = json::array();
  for (const RegionPart& part : r.parts) {
    if (const Disk* d = std::get_if<Disk>(&part)) {
      parts.push_back({{"type", "disk"}, {"center", complex_to_json(d->center)}, {"radius", d->radius}});
    } else if (const HalfPlane* h = std::get_if<HalfPlane>(&part)) {
      parts.push_back(
          {{"type", "half_plane"}, {"normal", complex_to_json(h->normal)}, {"offset", h->offset}});
    } else {
      const Disk& ex = std::get<DiskComplement>(part).excluded;
      parts.push_back({{"type", "disk_complement"},
                       {"center", complex_to_json(ex.center)},
                       {"radius", ex.radius}});
    }
  }
  return json{{"parts", std::move(parts)}};
}

json inequality_report_to_json(const InequalityReport& rep) {
  return json{{"delta", metric_to_json(rep.delta)},
              {"dc",
               {{"lower", metric_to_json(rep.dc.lower)},
                {"upper", metric_to_json(rep.dc.upper)},
                {"methods", rep.dc.methods}}},
              {"dtilde",
               {{"lower", metric_to_json(rep.dtilde.lower)}, {"upper", metric_to_json(rep.dtilde.upper)}}},
              {"checks",
               {{"half_delta_ok", rep.half_delta_ok},
                {"exp_bound_ok", rep.exp_bound_ok},
                {"finiteness_consistent", rep.finiteness_consistent}}}};
}

}  // namespace conegap
