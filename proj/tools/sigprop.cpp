#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sigprop/engine.hpp"
#include "sigprop/parser.hpp"
#include "sigprop/trace.hpp"
#include "sigprop/typecheck.hpp"

namespace {

constexpr int kExitSpecError = 3;
constexpr int kExitTraceError = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw sigprop::Error(sigprop::ErrorCode::Io, "cannot open property file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t thread_cap() {
  if (const char* env = std::getenv("SIGPROP_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<std::size_t>(n);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigprop: offline checker for signal-based temporal properties"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "evaluate properties against a trace");
  std::string trace_path;
  std::string props_path;
  std::string format = "text";
  std::string interp = "grid";
  std::string end_policy = "inconclusive";
  std::string report_path;
  std::vector<std::string> binds;
  sigprop::EvalConfig config;

  check->add_option("--trace", trace_path, "trace CSV file")->required();
  check->add_option("--props", props_path, "property file (.sbp)")->required();
  check->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  check->add_option("--interp", interp, "interpolation mode")
      ->check(CLI::IsMember({"grid", "linear"}));
  check->add_option("--eq-tol", config.eq_tol, "absolute tolerance for '='");
  check->add_option("--deriv-tol", config.deriv_tol, "derivative zero tolerance");
  check->add_option("--prominence", config.prominence, "extrema prominence filter");
  check->add_option("--end-policy", end_policy, "obligations cut off by the trace end")
      ->check(CLI::IsMember({"inconclusive", "strict"}));
  check->add_option("--bind", binds, "rename a referenced signal, old=new")
      ->type_name("OLD=NEW");
  check->add_option("--report", report_path, "also write the report to this path");

  CLI11_PARSE(app, argc, argv);

  config.interp = interp == "linear" ? sigprop::InterpolationMode::Linear
                                     : sigprop::InterpolationMode::Grid;
  config.end_policy = end_policy == "strict" ? sigprop::EndPolicy::Strict
                                             : sigprop::EndPolicy::Inconclusive;
  config.threads = thread_cap();

  sigprop::Trace trace;
  try {
    trace = sigprop::load_trace(trace_path);
  } catch (const sigprop::Error& e) {
    std::cerr << "trace error: " << e.what() << "\n";
    return kExitTraceError;
  }

  std::vector<std::pair<std::string, std::string>> renames;
  for (const auto& b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == b.size()) {
      std::cerr << "error: --bind expects OLD=NEW, got '" << b << "'\n";
      return kExitSpecError;
    }
    renames.emplace_back(b.substr(0, eq), b.substr(eq + 1));
  }

  sigprop::Report report;
  try {
    std::vector<sigprop::PropertyAst> props = sigprop::parse(read_file(props_path));
    if (!renames.empty()) {
      for (auto& p : props) p = sigprop::bind_signals(p, renames);
    }
    const auto names = trace.signal_names();
    sigprop::typecheck(props, {names.begin(), names.end()});
    report = sigprop::evaluate(props, trace, config);
  } catch (const sigprop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == sigprop::ErrorCode::Io ? kExitTraceError : kExitSpecError;
  }

  const std::string rendered = format == "json" ? sigprop::report_to_json(report)
                                                : sigprop::report_to_text(report);
  std::cout << rendered;
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write report to '" << report_path << "'\n";
      return kExitTraceError;
    }
    out << rendered;
  }
  return sigprop::report_exit_code(report);
}
