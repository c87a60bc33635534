#pragma once

// JSON, CSV and text renderings of bounds reports. Output depends only on
// the report contents (no timings), so equal runs give equal bytes.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kmfoam/bounds.hpp"

namespace kmfoam {

inline nlohmann::ordered_json qpoly_json(const QPoly& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

inline nlohmann::ordered_json diagnostics_json(const QuantumDiagnostics& d) {
  nlohmann::ordered_json j;
  j["palindromic"] = d.palindromic;
  j["divisible_by_3_factorial"] = static_cast<bool>(d.factorial_quotient);
  if (d.factorial_quotient) j["quotient"] = d.factorial_quotient->str();
  j["parity"] = d.parity;
  return j;
}

inline nlohmann::ordered_json report_json(const BoundsReport& r) {
  nlohmann::ordered_json j;
  j["web"] = r.web;
  j["filter"] = r.filter;
  j["tait"] = r.tait;
  j["reducible"] = r.reducible;
  j["l"] = r.l;
  j["l_q"] = r.lq.str();
  j["r"] = r.r;
  j["r_q"] = r.rq.str();
  j["r_q_minus_l_q"] = (r.rq - r.lq).str();
  j["N_l"] = r.n_sat;
  j["N_e"] = r.n_used;
  j["N"] = r.n_total;
  j["l_q_coefficients"] = qpoly_json(r.lq);
  j["r_q_coefficients"] = qpoly_json(r.rq);
  j["diagnostics"] = {{"l_q", diagnostics_json(r.lq_diag)}, {"r_q", diagnostics_json(r.rq_diag)}};
  j["self_checked_pairs"] = r.self_checked;
  return j;
}

/// Saturation curve: one line "n,l_n" per prefix.
inline std::string saturation_csv(const BoundsReport& r) {
  std::ostringstream out;
  out << "n,l_n\n";
  for (std::size_t i = 0; i < r.history.size(); ++i) out << i + 1 << ',' << r.history[i] << '\n';
  return out.str();
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace detail

/// A row of the summary table, or a failure for that web.
struct TableRow {
  std::string web;
  std::optional<BoundsReport> report;
  std::string error;
};

inline std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "web,l,tait,N_l,N_e,N,l_q,r_q-l_q,error\n";
  for (const auto& row : rows) {
    out << detail::csv_field(row.web) << ',';
    if (row.report) {
      const auto& r = *row.report;
      out << r.l << ',' << r.tait << ',' << r.n_sat << ',' << r.n_used << ',' << r.n_total << ','
          << detail::csv_field(r.lq.str()) << ',' << detail::csv_field((r.rq - r.lq).str()) << ",\n";
    } else {
      out << ",,,,,,," << detail::csv_field(row.error) << '\n';
    }
  }
  return out.str();
}

inline nlohmann::ordered_json table_json(const std::vector<TableRow>& rows) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    if (row.report)
      j.push_back(report_json(*row.report));
    else
      j.push_back({{"web", row.web}, {"error", row.error}});
  }
  return j;
}

inline std::string table_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-16s %5s %5s %6s %6s %8s  %s\n", "web", "l", "Tait", "N_l", "N_e", "N",
                "l_q + (r_q - l_q)");
  out << buf;
  for (const auto& row : rows) {
    if (!row.report) {
      out << row.web << "  error: " << row.error << '\n';
      continue;
    }
    const auto& r = *row.report;
    std::string q = r.lq.str();
    if (!(r.rq - r.lq).zero()) q += " + (" + (r.rq - r.lq).str() + ")";
    std::snprintf(buf, sizeof buf, "%-16s %5zu %5llu %6llu %6llu %8llu  ", r.web.c_str(), r.l,
                  static_cast<unsigned long long>(r.tait), static_cast<unsigned long long>(r.n_sat),
                  static_cast<unsigned long long>(r.n_used), static_cast<unsigned long long>(r.n_total));
    out << buf << q << '\n';
  }
  return out.str();
}

}  // namespace kmfoam
