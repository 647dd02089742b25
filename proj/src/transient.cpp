#include "sigprop/transient.hpp"

#include <cmath>
#include <limits>

#include "sigprop/projection.hpp"

namespace sigprop {

namespace {

BooleanProjection target_event_projection(const Predicate& target, const Trace& trace,
                                          const EvalConfig& config) {
  SubProperty sub;
  sub.kind = OccurrenceKind::Event;
  sub.body = make_body(PropertyBody{DataAssertion{target, {}}});
  return project(sub, trace, config);
}

bool strictly_monotone(const Signal& sig, std::size_t from, std::size_t to, bool rising) {
  for (std::size_t j = from; j + 1 <= to; ++j) {
    const double a = sig.value_at_index(j);
    const double b = sig.value_at_index(j + 1);
    if (rising ? !(a < b) : !(a > b)) return false;
  }
  return true;
}

}  // namespace

double target_threshold(const Predicate& target) {
  if (target.rhs.op == TransformExpr::Op::Constant) return target.rhs.constant;
  if (target.lhs.op == TransformExpr::Op::Constant) return target.lhs.constant;
  throw Error(ErrorCode::InvalidThreshold,
              "a relative bound needs a target predicate of the shape SIG op CONST");
}

Verdict check_rise_time(const RiseFallProperty& prop, const Trace& trace,
                        const EvalConfig& config) {
  if (!(prop.rt > 0.0)) {
    throw Error(ErrorCode::InvalidThreshold, "RT must be positive");
  }
  const Signal& sig = trace.signal(prop.signal);
  const BooleanProjection trigger = project(prop.trigger, trace, config);
  const BooleanProjection target = target_event_projection(prop.target, trace, config);
  if (trigger.size() != trace.size()) {
    throw Error(ErrorCode::GridMismatch, "trigger projection does not match the grid");
  }
  const bool rising = prop.direction == RiseFallProperty::Direction::Rise;
  const double end = trace.length();

  std::optional<UnmatchedCause> pending;
  for (std::size_t st_idx : occurrence_indices(trigger)) {
    const double st = trace.grid()[st_idx];
    bool matched = false;
    for (std::size_t k = st_idx; k < trace.size(); ++k) {
      const double tk = trace.grid()[k];
      if (tk > st + prop.rt || tk >= end) break;
      if (!target.at(k)) continue;
      if (prop.monotonic && !strictly_monotone(sig, st_idx, k, rising)) continue;
      matched = true;
      break;
    }
    if (matched) continue;
    const bool truncated = st + prop.rt >= end;
    if (truncated && config.end_policy == EndPolicy::Inconclusive) {
      if (!pending) pending = UnmatchedCause{st, true, st_idx};
      continue;
    }
    return make_violated(UnmatchedCause{st, false, st_idx},
                         "target not reached within RT of the trigger at t=" +
                             format_number(st));
  }
  if (pending) {
    return make_inconclusive(*pending,
                             "rise window of the trigger at t=" + format_number(pending->t) +
                                 " extends past |s|");
  }
  return make_holds();
}

Verdict check_overshoot(const OvershootProperty& prop, const Trace& trace,
                        const EvalConfig& config) {
  if (!(prop.oi > 0.0)) {
    throw Error(ErrorCode::InvalidThreshold, "OI must be positive");
  }
  const Signal& sig = trace.signal(prop.signal);
  const BooleanProjection trigger = project(prop.trigger, trace, config);
  const BooleanProjection target = target_event_projection(prop.target, trace, config);
  const bool over = prop.direction == OvershootProperty::Direction::Overshoot;
  const double end = trace.length();

  double limit = prop.bound_value;
  if (prop.relative) {
    limit = target_threshold(prop.target) + (over ? prop.bound_value : -prop.bound_value);
  }
  const bool unbounded_limit = std::isinf(limit);

  std::optional<UnmatchedCause> pending;
  for (std::size_t st_idx : occurrence_indices(trigger)) {
    const double st = trace.grid()[st_idx];
    bool matched = false;
    bool saw_reach = false;
    bool reach_pending = false;
    std::optional<ViolationPoint> last_excess;
    for (std::size_t k = st_idx; k < trace.size() && !matched; ++k) {
      if (trace.grid()[k] >= end) break;
      if (!target.at(k)) continue;
      if (prop.monotonic && !strictly_monotone(sig, st_idx, k, over)) continue;
      saw_reach = true;
      const double tk = trace.grid()[k];
      bool exceeded = false;
      for (std::size_t i = k; i < trace.size(); ++i) {
        const double ti = trace.grid()[i];
        if (ti > tk + prop.oi || ti >= end) break;
        const double v = sig.value_at_index(i);
        if (over ? v > limit : v < limit) {
          exceeded = true;
          last_excess = ViolationPoint{ti, v, i};
          break;
        }
      }
      if (exceeded) continue;
      const bool truncated = !unbounded_limit && tk + prop.oi >= end;
      if (truncated && config.end_policy == EndPolicy::Inconclusive) {
        reach_pending = true;
        continue;
      }
      matched = true;
    }
    if (matched) continue;
    if (config.end_policy == EndPolicy::Inconclusive && (reach_pending || !saw_reach)) {
      // Either the bound window is cut off, or the target event itself may
      // still occur beyond |s|.
      if (!pending) pending = UnmatchedCause{st, true, st_idx};
      continue;
    }
    if (last_excess) {
      return make_violated(*last_excess,
                           "signal exceeds the bound within the window after the trigger at t=" +
                               format_number(st));
    }
    return make_violated(UnmatchedCause{st, false, st_idx},
                         "target never reached after the trigger at t=" + format_number(st));
  }
  if (pending) {
    return make_inconclusive(*pending,
                             "window of the trigger at t=" + format_number(pending->t) +
                                 " extends past |s|");
  }
  return make_holds();
}

}  // namespace sigprop
