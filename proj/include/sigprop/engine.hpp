#pragma once

#include <string>
#include <vector>

#include "sigprop/ast.hpp"
#include "sigprop/trace.hpp"
#include "sigprop/verdict.hpp"

namespace sigprop {

struct Report {
  struct TraceMeta {
    std::string path;
    std::size_t samples = 0;
    double length = 0.0;
  };

  TraceMeta trace;
  EvalConfig config;
  std::vector<Verdict> verdicts;  // declaration order
};

/// Evaluates one checked property against the trace.
Verdict evaluate_property(const PropertyAst& prop, const Trace& trace,
                          const EvalConfig& config);

/// Evaluates all properties, in parallel up to config.threads, preserving
/// declaration order in the report.
Report evaluate(const std::vector<PropertyAst>& props, const Trace& trace,
                const EvalConfig& config);

std::string report_to_json(const Report& report);
std::string report_to_text(const Report& report);

/// 0 all hold; 1 some violated; 2 no violations but some inconclusive.
int report_exit_code(const Report& report);

}  // namespace sigprop
