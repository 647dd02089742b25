#pragma once

#include "sigprop/ast.hpp"
#include "sigprop/trace.hpp"
#include "sigprop/verdict.hpp"

namespace sigprop {

/// Every trigger edge must be followed within [st, st+RT] by an edge of the
/// target-reached event; with the monotonic variant the signal must rise
/// (fall) strictly over the grid points of [st, k].
Verdict check_rise_time(const RiseFallProperty& prop, const Trace& trace,
                        const EvalConfig& config);

/// Every trigger edge must be followed by a target-reached edge k with the
/// signal bounded by s_max (dually s_min) over [k, k+OI].
Verdict check_overshoot(const OvershootProperty& prop, const Trace& trace,
                        const EvalConfig& config);

/// Threshold constant of a target predicate of the shape SIG op CONST; used
/// to resolve a relative overshoot bound against the target value.
double target_threshold(const Predicate& target);

}  // namespace sigprop
