// lifshitz: command-line front end.
//
//   lifshitz energy|pressure|entropy|sweep|verify|nernst
//            [--config FILE] [--set key=value ...] [--format csv|json] [--out PATH]
//
// Exit codes: 0 ok, 1 verification criterion failed, 2 config error, 3 numerical failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lifshitz/config.hpp"
#include "lifshitz/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCriterionFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string format;
  std::string out;
};

lifshitz::RunConfig load_config(const Options& opt) {
  lifshitz::RunConfig cfg = opt.config_path.empty() ? lifshitz::RunConfig{} : lifshitz::RunConfig::from_file(opt.config_path);
  for (const auto& s : opt.overrides) cfg.set_assignment(s);
  if (!opt.format.empty()) cfg.set("output.format", opt.format);
  if (!opt.out.empty()) cfg.set("output.path", opt.out);
  cfg.validate();
  return cfg;
}

// "-" is stdout; a relative path is placed under $LIFSHITZ_OUTPUT_DIR when set.
std::filesystem::path output_path(const std::string& path) {
  std::filesystem::path p(path);
  const char* dir = std::getenv("LIFSHITZ_OUTPUT_DIR");
  if (dir != nullptr && *dir != '\0' && p.is_relative()) p = std::filesystem::path(dir) / p;
  return p;
}

template <class Writer>
void emit(const lifshitz::RunConfig& cfg, Writer&& write) {
  if (cfg.output == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  const auto path = output_path(cfg.output);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path);
  if (!file) throw lifshitz::ConfigError("cannot open output file '" + path.string() + "'");
  write(file);
}

int run_table(const lifshitz::RunConfig& cfg, lifshitz::ReportRequest request) {
  namespace rp = lifshitz::report;
  const auto rows = rp::run_sweep(cfg.model.build(), cfg.a, cfg.T, cfg.numerics(), request, cfg.threads);
  emit(cfg, [&](std::ostream& out) {
    if (cfg.format == "json") {
      out << rp::sweep_json(rows).dump(2) << '\n';
    } else {
      rp::write_sweep_csv(out, rows);
    }
  });
  int code = kExitOk;
  for (const auto& row : rows) {
    if (row.status == rp::RowStatus::ok) continue;
    std::cerr << "lifshitz: a=" << row.a << " T=" << row.T << ": " << row.message << '\n';
    code = std::max(code, row.status == rp::RowStatus::invalid_argument ? kExitConfig : kExitNumerical);
  }
  return code;
}

int run_verify(const lifshitz::RunConfig& cfg) {
  namespace vf = lifshitz::verify;
  const auto settings = cfg.numerics(vf::precise_settings());
  const auto all = vf::criteria();
  for (const auto& id : cfg.criteria) {
    const bool known = std::any_of(all.begin(), all.end(), [&](const auto& c) { return c.id == id; });
    if (!known) throw lifshitz::ConfigError("verify.criteria: unknown criterion '" + id + "'");
  }
  std::vector<vf::CriterionResult> results;
  bool numerical_failure = false;
  for (const auto& criterion : all) {
    if (!cfg.criteria.empty() &&
        std::find(cfg.criteria.begin(), cfg.criteria.end(), criterion.id) == cfg.criteria.end()) {
      continue;
    }
    try {
      for (auto& r : criterion.run(settings)) results.push_back(std::move(r));
    } catch (const lifshitz::NumericalError& e) {
      numerical_failure = true;
      results.push_back({criterion.id, 0.0, 0.0, 0.0, false, std::string("numerical failure: ") + e.what()});
    }
  }
  emit(cfg, [&](std::ostream& out) {
    if (cfg.format == "json") {
      out << lifshitz::report::verify_json(results).dump(2) << '\n';
    } else {
      lifshitz::report::write_verify_csv(out, results);
    }
  });
  if (numerical_failure) return kExitNumerical;
  const bool all_pass = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  return all_pass ? kExitOk : kExitCriterionFailed;
}

int run_nernst(const lifshitz::RunConfig& cfg) {
  const auto model = cfg.model.build();
  const auto settings = cfg.numerics();
  std::vector<lifshitz::report::NernstRow> rows;
  for (double a : cfg.a) {
    std::vector<double> grid(cfg.T.rbegin(), cfg.T.rend());
    if (!cfg.T_given) {
      grid.clear();
      for (double tau : {0.2, 0.15, 0.1, 0.07, 0.05}) grid.push_back(tau / lifshitz::tau_from(a, 1.0));
    }
    rows.push_back({a, lifshitz::nernst_diagnose(model, a, grid, settings, cfg.nernst_tol)});
  }
  emit(cfg, [&](std::ostream& out) {
    if (cfg.format == "json") {
      out << lifshitz::report::nernst_json(rows).dump(2) << '\n';
    } else {
      lifshitz::report::write_nernst_csv(out, rows);
    }
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lifshitz dispersion free energy, pressure and entropy between dielectric plates"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"energy", "E, dF and F on the (a, T) sweep"},
      {"pressure", "P0, dP and P on the (a, T) sweep"},
      {"entropy", "entropy on the (a, T) sweep"},
      {"sweep", "all quantities on the (a, T) sweep"},
      {"verify", "run the verification criteria"},
      {"nernst", "entropy fit and T -> 0 classification"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opt.config_path, "key = value configuration file");
    sub->add_option("--set", opt.overrides, "override one key (key=value); repeatable")->allow_extra_args(false);
    sub->add_option("--format", opt.format, "csv or json");
    sub->add_option("--out", opt.out, "output file, '-' for stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto cfg = load_config(opt);
    if (command == "energy") return run_table(cfg, {true, false, false});
    if (command == "pressure") return run_table(cfg, {false, true, false});
    if (command == "entropy") return run_table(cfg, {false, false, true});
    if (command == "sweep") return run_table(cfg, {true, true, true});
    if (command == "verify") return run_verify(cfg);
    return run_nernst(cfg);
  } catch (const lifshitz::InvalidArgument& e) {
    std::cerr << "lifshitz: " << e.what() << '\n';
    return kExitConfig;
  } catch (const lifshitz::NumericalError& e) {
    std::cerr << "lifshitz: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "lifshitz: " << e.what() << '\n';
    return kExitConfig;
  }
}
