#include "sigprop/order.hpp"

#include <cmath>
#include <limits>

namespace sigprop {

namespace {

void require_same_grid(const BooleanProjection& a, const BooleanProjection& b,
                       const Trace& trace) {
  if (a.size() != trace.size() || b.size() != trace.size()) {
    throw Error(ErrorCode::GridMismatch, "projections do not share the trace grid");
  }
}

bool bound_ok(const std::optional<DistanceBound>& bound, double distance,
              const EvalConfig& config) {
  if (!bound) return true;
  return rel_op_eval(bound->op, distance, bound->n, config.eq_tol);
}

/// Whether an unmatched cause at time t could still be matched beyond |s|:
/// true when the latest admissible effect instant is not fully observed.
bool window_truncated(const std::optional<DistanceBound>& bound, double t, double end) {
  if (!bound) return true;  // unbounded tail
  switch (bound->op) {
    case RelOp::Lt:
    case RelOp::Le:
    case RelOp::Eq:
      return t + bound->n >= end;
    default:
      return true;  // >, >=, != admit arbitrarily late effects
  }
}

}  // namespace

Verdict check_response(const BooleanProjection& cause, const BooleanProjection& effect,
                       const std::optional<DistanceBound>& bound, const Trace& trace,
                       const EvalConfig& config) {
  require_same_grid(cause, effect, trace);
  const auto causes = occurrence_indices(cause);
  const auto effects = occurrence_indices(effect);
  const double end = trace.length();

  std::optional<UnmatchedCause> pending;  // earliest cause with a truncated window
  for (std::size_t ci : causes) {
    const double t = trace.grid()[ci];
    bool matched = false;
    for (std::size_t ei : effects) {
      if (ei <= ci) continue;
      const double k = trace.grid()[ei];
      if (bound_ok(bound, std::fabs(k - t), config)) {
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (config.end_policy == EndPolicy::Inconclusive && window_truncated(bound, t, end)) {
      if (!pending) pending = UnmatchedCause{t, true, ci};
      continue;
    }
    return make_violated(UnmatchedCause{t, false, ci},
                         "cause at t=" + format_number(t) + " has no matching effect");
  }
  if (pending) {
    return make_inconclusive(*pending, "cause at t=" + format_number(pending->t) +
                                           " is unmatched but its window extends past |s|");
  }
  return make_holds();
}

Verdict check_precedence(const BooleanProjection& cause, const BooleanProjection& effect,
                         const std::optional<DistanceBound>& bound, const Trace& trace,
                         const EvalConfig& config) {
  require_same_grid(cause, effect, trace);
  const auto causes = occurrence_indices(cause);
  const auto effects = occurrence_indices(effect);

  for (std::size_t ei : effects) {
    const double t = trace.grid()[ei];
    bool matched = false;
    for (std::size_t ci : causes) {
      if (ci >= ei) break;
      const double k = trace.grid()[ci];
      if (bound_ok(bound, std::fabs(k - t), config)) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      return make_violated(UnmatchedCause{t, false, ei},
                           "effect at t=" + format_number(t) + " has no preceding cause");
    }
  }
  return make_holds();
}

std::vector<std::size_t> matched_effect_indices(OrderProperty::Pattern pattern,
                                                const BooleanProjection& cause,
                                                const BooleanProjection& effect,
                                                const std::optional<DistanceBound>& bound,
                                                const Trace& trace,
                                                const EvalConfig& config) {
  (void)pattern;  // a satisfied pair is the same relation for both patterns
  require_same_grid(cause, effect, trace);
  const auto causes = occurrence_indices(cause);
  const auto effects = occurrence_indices(effect);
  std::vector<std::size_t> out;
  for (std::size_t ei : effects) {
    const double k = trace.grid()[ei];
    for (std::size_t ci : causes) {
      if (ci >= ei) break;
      if (bound_ok(bound, std::fabs(k - trace.grid()[ci]), config)) {
        out.push_back(ei);
        break;
      }
    }
  }
  return out;
}

}  // namespace sigprop
