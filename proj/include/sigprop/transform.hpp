#pragma once

#include "sigprop/ast.hpp"
#include "sigprop/trace.hpp"

namespace sigprop {

/// Applies a pointwise signal-transforming expression over the shared grid.
/// Derivative nodes shorten the result by `order` trailing samples; binary
/// nodes intersect the domains of their operands.
Signal apply_transform(const TransformExpr& expr, const Trace& trace,
                       const EvalConfig& config, const std::string& target_name);

/// Trace extended with the target signal; every column is truncated to the
/// target's (possibly shortened) grid so the result is a well-formed trace.
Trace extend_trace(const Trace& trace, const std::string& target_name,
                   const TransformExpr& expr, const EvalConfig& config);

/// Signal names referenced anywhere in the expression.
void collect_signal_refs(const TransformExpr& expr, std::vector<std::string>& out);

}  // namespace sigprop
