// qpolar: build, export and verify the q-deformed oscillator operators at a
// root of unity.
//
// Exit codes: 0 success / all checks pass, 1 a check failed,
// 2 usage or invalid configuration, 3 I/O failure.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpolar/fock_algebra.hpp"
#include "qpolar/json_io.hpp"
#include "qpolar/qnumerics.hpp"
#include "qpolar/verifier.hpp"

namespace {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const nlohmann::json& doc, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(*path);
  if (!out) throw IoError("cannot open " + *path + " for writing");
  out << doc.dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("write to " + *path + " failed");
}

std::string format_number(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

void print_report(const qpolar::VerificationReport& report) {
  const auto& cfg = report.config;
  std::cout << "s = " << cfg.s << ", k = " << cfg.k << ", tol = " << cfg.tol
            << ", threshold = " << cfg.threshold() << '\n';
  std::cout << std::left << std::setw(26) << "check" << std::setw(14) << "deviation"
            << std::setw(14) << "threshold" << std::setw(14) << "witness" << "result\n";
  int passed = 0;
  for (const auto& c : report.checks) {
    std::cout << std::left << std::setw(26) << c.name << std::setw(14) << std::setprecision(3)
              << c.deviation << std::setw(14) << c.threshold << std::setw(14)
              << (c.witness ? format_number(*c.witness).substr(0, 12) : std::string("-"))
              << (c.pass ? "pass" : "FAIL") << '\n';
    passed += c.pass ? 1 : 0;
  }
  std::cout << "overall: " << (report.overall_pass ? "PASS" : "FAIL") << " (" << passed << '/'
            << report.checks.size() << ")\n";
}

int cmd_build(const qpolar::AlgebraConfig& cfg, const std::string& op,
              const std::optional<std::string>& out) {
  const auto ops = qpolar::build_operator_set(cfg);
  const auto* m = qpolar::find_operator(ops, op);
  if (m == nullptr) {
    std::cerr << "unknown operator: " << op << '\n';
    return kUsage;
  }
  emit(qpolar::to_json(*m), out);
  return kOk;
}

int cmd_verify(const qpolar::AlgebraConfig& cfg, bool json) {
  const auto report = qpolar::run_all(cfg);
  if (json) {
    std::cout << qpolar::to_json(report).dump(2) << '\n';
  } else {
    print_report(report);
  }
  return report.overall_pass ? kOk : kCheckFailed;
}

int cmd_sweep(int s_min, int s_max, int k, double tol, bool json) {
  const auto reports = qpolar::sweep(s_min, s_max, k, tol);
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.overall_pass ? 1 : 0;
  if (json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(qpolar::to_json(r));
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      std::size_t ok = 0;
      double worst = 0.0;
      for (const auto& c : r.checks) {
        ok += c.pass ? 1 : 0;
        worst = std::max(worst, c.deviation);
      }
      std::cout << "s=" << std::left << std::setw(4) << r.config.s
                << (r.overall_pass ? "PASS  " : "FAIL  ") << ok << '/' << r.checks.size()
                << "  max deviation " << std::setprecision(3) << worst << '\n';
    }
    std::cout << "passed " << passed << '/' << reports.size() << '\n';
  }
  return passed == reports.size() ? kOk : kCheckFailed;
}

int cmd_spectrum(const qpolar::AlgebraConfig& cfg, const std::string& op, bool json) {
  const auto spectrum = qpolar::closed_form_spectrum(op, cfg);
  if (!spectrum) {
    std::cerr << "no closed-form spectrum for operator '" << op
              << "' (supported: g, bigh, braceHdag, braceHdag1)\n";
    return kUsage;
  }
  const bool real = op == "braceHdag" || op == "braceHdag1";
  if (json) {
    auto arr = nlohmann::json::array();
    for (const auto& z : *spectrum) arr.push_back({z.real(), z.imag()});
    std::cout << arr.dump() << '\n';
    return kOk;
  }
  for (const auto& z : *spectrum) {
    if (real) {
      std::cout << format_number(z.real()) << '\n';
    } else {
      std::cout << format_number(z.real()) << ' ' << format_number(z.imag()) << '\n';
    }
  }
  return kOk;
}

int cmd_phase_states(const qpolar::AlgebraConfig& cfg, const std::optional<std::string>& out) {
  const auto f = qpolar::build_fourier(cfg);
  auto arr = nlohmann::json::array();
  for (std::size_t m = 0; m < f.dim(); ++m) arr.push_back(qpolar::to_json(qpolar::column(f, m)));
  emit(arr, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-deformed boson algebra at roots of unity: operators, checks, spectra"};
  app.require_subcommand(1);

  int s = 0;
  int k = 1;
  double tol = qpolar::kDefaultTolerance;
  int s_min = 0;
  int s_max = 0;
  bool json = false;
  std::string op;
  std::string out_path;

  std::vector<std::string> op_names(qpolar::kOperatorNames.begin(), qpolar::kOperatorNames.end());

  auto* build = app.add_subcommand("build", "Export one operator matrix as JSON");
  build->add_option("--s", s, "Fock cutoff (dimension s+1)")->required();
  build->add_option("--k", k, "Root index, q = exp(2 pi i k/(s+1))");
  build->add_option("--op", op, "Operator name")->required()->check(CLI::IsMember(op_names));
  build->add_option("--out", out_path, "Output file (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Run the identity catalog for one configuration");
  verify->add_option("--s", s, "Fock cutoff")->required();
  verify->add_option("--k", k, "Root index");
  verify->add_option("--tol", tol, "Base tolerance; checks use tol*(s+1)");
  verify->add_flag("--json", json, "Emit the report as JSON");

  auto* sweep = app.add_subcommand("sweep", "Run the catalog for every s in a range");
  sweep->add_option("--s-min", s_min, "Smallest cutoff")->required();
  sweep->add_option("--s-max", s_max, "Largest cutoff")->required();
  sweep->add_option("--k", k, "Root index");
  sweep->add_option("--tol", tol, "Base tolerance");
  sweep->add_flag("--json", json, "Emit a JSON array of reports");

  auto* spectrum = app.add_subcommand("spectrum", "Print a closed-form spectrum");
  spectrum->add_option("--s", s, "Fock cutoff")->required();
  spectrum->add_option("--k", k, "Root index");
  spectrum->add_option("--op", op, "g, bigh, braceHdag or braceHdag1")->required();
  spectrum->add_flag("--json", json, "Emit [re, im] pairs as JSON");

  auto* phases = app.add_subcommand("phase-states", "Export all phase states as JSON");
  phases->add_option("--s", s, "Fock cutoff")->required();
  phases->add_option("--k", k, "Root index");
  phases->add_option("--out", out_path, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto out = out_path.empty() ? std::nullopt : std::optional<std::string>(out_path);
  try {
    if (*sweep) return cmd_sweep(s_min, s_max, k, tol, json);
    const auto cfg = qpolar::make_config(s, k, tol);
    if (*build) return cmd_build(cfg, op, out);
    if (*verify) return cmd_verify(cfg, json);
    if (*spectrum) return cmd_spectrum(cfg, op, json);
    if (*phases) return cmd_phase_states(cfg, out);
  } catch (const qpolar::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}
