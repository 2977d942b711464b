#pragma once

// Sweep evaluation and tabular output (CSV / JSON) for the command-line front end.
// Numbers are written with 17 significant digits so output round-trips exactly.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "thermo.hpp"
#include "verify.hpp"

namespace lifshitz::report {

using Json = nlohmann::ordered_json;

enum class RowStatus { ok, invalid_argument, numerical_failure };

struct SweepRow {
  double a = 0.0;
  double T = 0.0;
  double tau = 0.0;
  ThermoReport values;
  RowStatus status = RowStatus::ok;
  std::string message;
};

/// Evaluates every (a, T) pair, a-major and T ascending within each a. Points are
/// spread over `threads` workers (0: hardware concurrency); the returned rows keep
/// input order. A failing point yields a row with a status, not an exception.
inline std::vector<SweepRow> run_sweep(const PermittivityModel& model, const std::vector<double>& a_values,
                                       const std::vector<double>& T_values, const NumericsSettings& settings,
                                       ReportRequest request, int threads = 0) {
  std::vector<SweepRow> rows;
  for (double a : a_values) {
    for (double T : T_values) {
      SweepRow row;
      row.a = a;
      row.T = T;
      rows.push_back(row);
    }
  }
  auto evaluate = [&](SweepRow& row) {
    try {
      const PlateConfig cfg(row.a, row.T);
      row.tau = cfg.tau();
      row.values = thermo_report(model, cfg, settings, request);
    } catch (const InvalidArgument& e) {
      row.status = RowStatus::invalid_argument;
      row.message = e.what();
    } catch (const NumericalError& e) {
      row.status = RowStatus::numerical_failure;
      row.message = e.what();
    }
  };

  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads) : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(rows.size(), 1));
  if (workers == 1) {
    for (auto& row : rows) evaluate(row);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) evaluate(rows[i]);
      });
    }
  }
  return rows;
}

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string status_text(const SweepRow& row) {
  switch (row.status) {
    case RowStatus::ok: return "ok";
    case RowStatus::invalid_argument: return "invalid: " + row.message;
    case RowStatus::numerical_failure: return "failed: " + row.message;
  }
  return "?";
}

/// Route tags of the computed thermal quantities, e.g. "dF=contour;S=fd-contour".
inline std::string method_text(const ThermoReport& r) {
  std::string out;
  auto add = [&](const char* name, const std::optional<Quantity>& q) {
    if (!q) return;
    if (!out.empty()) out += ';';
    out += std::string(name) + "=" + q->method;
  };
  add("dF", r.dF);
  add("dP", r.dP);
  add("S", r.S);
  return out;
}

inline const char* const kSweepColumns[] = {"a_m",   "T_K",   "tau",   "E_Jm2",  "dF_Jm2", "F_Jm2",
                                            "P0_Pa", "dP_Pa", "P_Pa",  "S_JKm2", "err_F",  "err_P",
                                            "err_S", "method", "status"};

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  bool first = true;
  for (const char* c : kSweepColumns) {
    out << (first ? "" : ",") << c;
    first = false;
  }
  out << '\n';
  auto value = [](const std::optional<Quantity>& q) { return q ? format_number(q->value) : std::string(); };
  auto error = [](const std::optional<Quantity>& q) { return q ? format_number(q->error) : std::string(); };
  for (const auto& row : rows) {
    const auto& r = row.values;
    out << format_number(row.a) << ',' << format_number(row.T) << ',' << format_number(row.tau) << ','
        << value(r.E) << ',' << value(r.dF) << ',' << value(r.F) << ',' << value(r.P0) << ',' << value(r.dP) << ','
        << value(r.P) << ',' << value(r.S) << ',' << error(r.F) << ',' << error(r.P) << ',' << error(r.S) << ','
        << csv_quote(method_text(r)) << ',' << csv_quote(status_text(row)) << '\n';
  }
}

inline Json sweep_json(const std::vector<SweepRow>& rows) {
  auto value = [](const std::optional<Quantity>& q) { return q ? Json(q->value) : Json(); };
  auto error = [](const std::optional<Quantity>& q) { return q ? Json(q->error) : Json(); };
  Json out = Json::array();
  for (const auto& row : rows) {
    const auto& r = row.values;
    out.push_back({
        {"a_m", row.a},         {"T_K", row.T},         {"tau", row.tau},       {"E_Jm2", value(r.E)},
        {"dF_Jm2", value(r.dF)}, {"F_Jm2", value(r.F)},  {"P0_Pa", value(r.P0)}, {"dP_Pa", value(r.dP)},
        {"P_Pa", value(r.P)},   {"S_JKm2", value(r.S)}, {"err_F", error(r.F)},  {"err_P", error(r.P)},
        {"err_S", error(r.S)},  {"method", method_text(r)}, {"status", status_text(row)},
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification and Nernst output

inline void write_verify_csv(std::ostream& out, const std::vector<verify::CriterionResult>& results) {
  out << "id,measured,reference,tolerance,passed,note\n";
  for (const auto& r : results) {
    out << r.id << ',' << format_number(r.measured) << ',' << format_number(r.reference) << ','
        << format_number(r.tolerance) << ',' << (r.passed ? "pass" : "fail") << ',' << csv_quote(r.note) << '\n';
  }
}

inline Json verify_json(const std::vector<verify::CriterionResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    out.push_back({{"id", r.id},
                   {"measured", r.measured},
                   {"reference", r.reference},
                   {"tolerance", r.tolerance},
                   {"passed", r.passed},
                   {"note", r.note}});
  }
  return out;
}

struct NernstRow {
  double a = 0.0;
  NernstVerdict verdict;
};

inline void write_nernst_csv(std::ostream& out, const std::vector<NernstRow>& rows) {
  out << "a_m,classification,s0_JKm2,expected_s0_JKm2,s2_JKm2,s2_ref_JKm2,s3_JKm2,s3_ref_JKm2,points\n";
  for (const auto& row : rows) {
    const auto& v = row.verdict;
    out << format_number(row.a) << ',' << to_string(v.classification) << ',' << format_number(v.limit_estimate) << ','
        << format_number(v.expected_value) << ',' << format_number(v.s2) << ',' << format_number(v.s2_reference)
        << ',' << format_number(v.s3) << ',' << format_number(v.s3_reference) << ',' << v.tau.size() << '\n';
  }
}

inline Json nernst_json(const std::vector<NernstRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    const auto& v = row.verdict;
    out.push_back({{"a_m", row.a},
                   {"classification", to_string(v.classification)},
                   {"s0_JKm2", v.limit_estimate},
                   {"expected_s0_JKm2", v.expected_value},
                   {"s2_JKm2", v.s2},
                   {"s2_ref_JKm2", v.s2_reference},
                   {"s3_JKm2", v.s3},
                   {"s3_ref_JKm2", v.s3_reference},
                   {"tau", v.tau},
                   {"S_JKm2", v.entropy}});
  }
  return out;
}

}  // namespace lifshitz::report
