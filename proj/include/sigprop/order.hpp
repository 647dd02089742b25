#pragma once

#include <optional>

#include "sigprop/ast.hpp"
#include "sigprop/projection.hpp"
#include "sigprop/trace.hpp"
#include "sigprop/verdict.hpp"

namespace sigprop {

/// Response: every cause occurrence is matched by a strictly later effect
/// occurrence, with |k - t| meeting the bound when present. Causes whose
/// matching window is cut off by the end of the trace follow the configured
/// end policy.
Verdict check_response(const BooleanProjection& cause, const BooleanProjection& effect,
                       const std::optional<DistanceBound>& bound, const Trace& trace,
                       const EvalConfig& config);

/// Precedence: every effect occurrence is preceded by an earlier cause
/// occurrence; the past is always fully observed, so there is no
/// inconclusive outcome.
Verdict check_precedence(const BooleanProjection& cause, const BooleanProjection& effect,
                         const std::optional<DistanceBound>& bound, const Trace& trace,
                         const EvalConfig& config);

/// Effect indices that complete a satisfied cause/effect pair, used by the
/// event projection of nested order relationships.
std::vector<std::size_t> matched_effect_indices(OrderProperty::Pattern pattern,
                                                const BooleanProjection& cause,
                                                const BooleanProjection& effect,
                                                const std::optional<DistanceBound>& bound,
                                                const Trace& trace,
                                                const EvalConfig& config);

}  // namespace sigprop
