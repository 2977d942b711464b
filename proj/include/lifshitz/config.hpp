#pragma once

// Run configuration for the command-line front end: a flat `key = value` file
// with dotted section names, plus `--set key=value` overrides.
//
//   model.type        = static | oscillators
//   model.eps0        = 2                        (static)
//   model.oscillators = 1.098@2.033e16, 1.703@1.88e14   (strength@frequency, rad/s)
//   model.dc.sigma_ref, model.dc.b               (wraps the model with a dc term)
//   sweep.a, sweep.T  = list "1e-6, 2e-6" or range "lin:start:stop:n" / "log:start:stop:n"
//   numerics.*        = rel_tol abs_tol max_depth max_intervals sum_rel_tol max_terms diff_step threads
//   output.format     = csv | json;  output.path = file or "-"
//   nernst.tol, verify.criteria

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "permittivity.hpp"
#include "thermo.hpp"

namespace lifshitz {

class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("config: " + key + ": not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw ConfigError("config: " + key + ": not a number: '" + text + "'");
  return v;
}

inline std::int64_t parse_int(const std::string& key, const std::string& text) {
  const double v = parse_double(key, text);
  if (v != std::floor(v) || std::abs(v) > 9.0e15) throw ConfigError("config: " + key + ": not an integer: '" + text + "'");
  return static_cast<std::int64_t>(v);
}

/// "v1, v2, ..." or "lin:start:stop:n" / "log:start:stop:n"; result sorted ascending.
inline std::vector<double> parse_sweep(const std::string& key, const std::string& text) {
  std::vector<double> values;
  if (text.rfind("lin:", 0) == 0 || text.rfind("log:", 0) == 0) {
    const auto parts = split(text, ':');
    if (parts.size() != 4) throw ConfigError("config: " + key + ": range must be kind:start:stop:n");
    const double start = parse_double(key, parts[1]);
    const double stop = parse_double(key, parts[2]);
    const std::int64_t n = parse_int(key, parts[3]);
    if (n < 1 || n > 100000) throw ConfigError("config: " + key + ": range count must lie in [1, 100000]");
    const bool log = parts[0] == "log";
    if (log && (start <= 0.0 || stop <= 0.0)) throw ConfigError("config: " + key + ": log range needs positive ends");
    for (std::int64_t i = 0; i < n; ++i) {
      const double w = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
      values.push_back(log ? std::exp(std::log(start) + w * (std::log(stop) - std::log(start)))
                           : start + w * (stop - start));
    }
  } else {
    for (const auto& item : split(text, ',')) {
      if (item.empty()) throw ConfigError("config: " + key + ": empty list entry");
      values.push_back(parse_double(key, item));
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace detail

struct ModelSpec {
  std::string type = "static";
  double eps0 = 2.0;
  std::vector<Oscillator> oscillators;
  std::optional<double> dc_sigma_ref;
  double dc_b = 0.0;

  PermittivityModel build() const {
    DielectricModel base = StaticModel(eps0);
    if (type == "oscillators") {
      if (oscillators.empty()) throw ConfigError("config: model.oscillators is required for model.type = oscillators");
      base = OscillatorModel(oscillators);
    } else if (type != "static") {
      throw ConfigError("config: model.type must be static or oscillators, got '" + type + "'");
    }
    if (dc_sigma_ref) {
      return DcConductivityModel(base, *dc_sigma_ref, dc_b);
    }
    if (const auto* s = std::get_if<StaticModel>(&base)) return *s;
    return std::get<OscillatorModel>(base);
  }
};

struct RunConfig {
  ModelSpec model;
  std::vector<double> a{1e-6};
  std::vector<double> T{300.0};
  bool T_given = false;  // nernst falls back to a tau grid when sweep.T is unset
  std::string format = "csv";
  std::string output = "-";
  int threads = 0;  // 0: hardware concurrency
  double nernst_tol = 0.05;
  std::vector<std::string> criteria;  // empty: all
  // numerics.* keys as given; applied on top of a command-specific baseline.
  std::map<std::string, std::string> numerics_keys;

  /// Applies one key. Unknown keys and malformed values throw ConfigError.
  void set(const std::string& raw_key, const std::string& raw_value) {
    const std::string key = detail::trim(raw_key);
    const std::string value = detail::trim(raw_value);
    if (key == "model.type") {
      model.type = value;
    } else if (key == "model.eps0") {
      model.eps0 = detail::parse_double(key, value);
    } else if (key == "model.oscillators") {
      model.oscillators.clear();
      for (const auto& item : detail::split(value, ',')) {
        const auto parts = detail::split(item, '@');
        if (parts.size() != 2) throw ConfigError("config: model.oscillators entries must be strength@frequency");
        model.oscillators.push_back({detail::parse_double(key, parts[0]), detail::parse_double(key, parts[1])});
      }
    } else if (key == "model.dc.sigma_ref") {
      model.dc_sigma_ref = detail::parse_double(key, value);
    } else if (key == "model.dc.b") {
      model.dc_b = detail::parse_double(key, value);
    } else if (key == "sweep.a") {
      a = detail::parse_sweep(key, value);
    } else if (key == "sweep.T") {
      T = detail::parse_sweep(key, value);
      T_given = true;
    } else if (key == "output.format") {
      format = value;
    } else if (key == "output.path") {
      output = value;
    } else if (key == "numerics.threads") {
      const auto n = detail::parse_int(key, value);
      if (n < 0 || n > 1024) throw ConfigError("config: numerics.threads must lie in [0, 1024]");
      threads = static_cast<int>(n);
    } else if (key == "nernst.tol") {
      nernst_tol = detail::parse_double(key, value);
    } else if (key == "verify.criteria") {
      criteria.clear();
      for (const auto& id : detail::split(value, ',')) {
        if (!id.empty() && id != "all") criteria.push_back(id);
      }
    } else if (key == "numerics.rel_tol" || key == "numerics.abs_tol" || key == "numerics.max_depth" ||
               key == "numerics.max_intervals" || key == "numerics.sum_rel_tol" || key == "numerics.max_terms" ||
               key == "numerics.diff_step") {
      if (key == "numerics.max_depth" || key == "numerics.max_intervals" || key == "numerics.max_terms") {
        detail::parse_int(key, value);
      } else {
        detail::parse_double(key, value);
      }
      numerics_keys[key] = value;
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }

  /// "key=value" as given on the command line.
  void set_assignment(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError("config: override must be key=value, got '" + assignment + "'");
    set(assignment.substr(0, eq), assignment.substr(eq + 1));
  }

  void read(std::istream& in, const std::string& origin = "config") {
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (detail::trim(line).empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw ConfigError(origin + ":" + std::to_string(number) + ": expected key = value");
      }
      try {
        set(line.substr(0, eq), line.substr(eq + 1));
      } catch (const ConfigError& e) {
        throw ConfigError(origin + ":" + std::to_string(number) + ": " + e.what());
      }
    }
  }

  static RunConfig from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    RunConfig cfg;
    cfg.read(in, path);
    return cfg;
  }

  /// `base` with the numerics.* keys of this config applied.
  NumericsSettings numerics(NumericsSettings base = {}) const {
    for (const auto& [key, value] : numerics_keys) {
      if (key == "numerics.rel_tol") base.quad.rel_tol = detail::parse_double(key, value);
      if (key == "numerics.abs_tol") base.quad.abs_tol = detail::parse_double(key, value);
      if (key == "numerics.max_depth") base.quad.max_depth = static_cast<int>(detail::parse_int(key, value));
      if (key == "numerics.max_intervals") base.quad.max_intervals = static_cast<int>(detail::parse_int(key, value));
      if (key == "numerics.sum_rel_tol") base.sum.rel_tol = detail::parse_double(key, value);
      if (key == "numerics.max_terms") base.sum.max_terms = detail::parse_int(key, value);
      if (key == "numerics.diff_step") base.diff_step = detail::parse_double(key, value);
    }
    base.sum.quad = base.quad;
    try {
      base.validate();
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
    return base;
  }

  /// Checks the invariants that do not depend on the command.
  void validate() const {
    if (a.empty() || T.empty()) throw ConfigError("config: sweep sets must be non-empty");
    for (double v : a) {
      if (!(v > 0.0)) throw ConfigError("config: every separation in sweep.a must be positive");
    }
    for (double v : T) {
      if (!(v >= 0.0)) throw ConfigError("config: every temperature in sweep.T must be non-negative");
    }
    if (format != "csv" && format != "json") throw ConfigError("config: output.format must be csv or json");
    if (!(nernst_tol > 0.0 && nernst_tol < 1.0)) throw ConfigError("config: nernst.tol must lie in (0, 1)");
    try {
      (void)model.build();
    } catch (const ConfigError&) {
      throw;
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
    (void)numerics();
  }
};

}  // namespace lifshitz
