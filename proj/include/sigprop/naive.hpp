#pragma once

#include "sigprop/ast.hpp"
#include "sigprop/engine.hpp"
#include "sigprop/trace.hpp"
#include "sigprop/verdict.hpp"

namespace sigprop {

/// Reference evaluator: a direct transliteration of the quantified formulas
/// as nested loops over grid points, sharing no evaluation code with
/// evaluate(). Verdict statuses are semantically identical to evaluate();
/// witnesses carry no optimization guarantees. Guarded against large traces.
Verdict evaluate_naive(const PropertyAst& prop, const Trace& trace,
                       const EvalConfig& config);

}  // namespace sigprop
