#include "sigprop/projection.hpp"

#include <cmath>

#include "sigprop/oscillation.hpp"
#include "sigprop/order.hpp"
#include "sigprop/spike.hpp"
#include "sigprop/transform.hpp"

namespace sigprop {

namespace {

void mask_domain(std::vector<char>& bits) {
  if (!bits.empty()) bits.back() = 0;
}

void mark_time(std::vector<char>& bits, const Trace& trace, double t) {
  const std::size_t n = trace.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(trace.grid()[i] - t) <= 1e-12) {
      bits[i] = 1;
      return;
    }
  }
}

void mark_range(std::vector<char>& bits, const Trace& trace, double lo, double hi) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const double t = trace.grid()[i];
    if (t >= lo && t <= hi) bits[i] = 1;
  }
}

std::vector<char> becomes_bits(const std::vector<char>& state) {
  std::vector<char> out(state.size(), 0);
  for (std::size_t i = 1; i < state.size(); ++i) {
    out[i] = state[i] && !state[i - 1];
  }
  return out;
}

std::vector<char> interval_mask(const std::vector<Interval>& intervals, const Trace& trace) {
  std::vector<char> mask(trace.size(), 1);
  if (intervals.empty()) return mask;
  std::fill(mask.begin(), mask.end(), 0);
  for (const Interval& iv : intervals) {
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const double t = trace.grid()[i];
      if (t >= iv.lo && t <= iv.hi) mask[i] = 1;
    }
  }
  return mask;
}

BooleanProjection project_data_assertion(const DataAssertion& da, OccurrenceKind kind,
                                         const Trace& trace, const EvalConfig& config) {
  std::vector<char> pred = predicate_bits(da.predicate, trace, config);
  std::vector<char> mask = interval_mask(da.intervals, trace);
  BooleanProjection proj;
  proj.kind = kind;
  if (kind == OccurrenceKind::State) {
    proj.bits = std::move(pred);
  } else {
    // "becomes": the predicate switches from false to true; an interval
    // boundary alone does not create an event.
    proj.bits = becomes_bits(pred);
  }
  for (std::size_t i = 0; i < proj.bits.size(); ++i) {
    proj.bits[i] = proj.bits[i] && mask[i];
  }
  return proj;
}

BooleanProjection project_spike(const SpikeProperty& prop, const SubProperty& sub,
                                const Trace& trace, const EvalConfig& config) {
  const Signal& sig = trace.signal(prop.spec.signal);
  const std::vector<SpikeFeatures> spikes = satisfying_spikes(sig, prop.spec, trace, config);
  BooleanProjection proj;
  proj.kind = sub.kind;
  proj.bits.assign(trace.size(), 0);
  for (const SpikeFeatures& f : spikes) {
    if (sub.kind == OccurrenceKind::State) {
      mark_range(proj.bits, trace, f.vp1, f.vp2);
    } else {
      switch (sub.spike_anchor) {
        case SpikeAnchor::Vp1: mark_time(proj.bits, trace, f.vp1); break;
        case SpikeAnchor::Peak: mark_time(proj.bits, trace, f.pp); break;
        case SpikeAnchor::Vp2: mark_time(proj.bits, trace, f.vp2); break;
      }
    }
  }
  return proj;
}

BooleanProjection project_oscillation(const OscillationProperty& prop, const SubProperty& sub,
                                      const Trace& trace, const EvalConfig& config) {
  const Signal& sig = trace.signal(prop.spec.signal);
  const Verdict verdict = check_oscillation(sig, prop.spec, trace, config);
  BooleanProjection proj;
  proj.kind = sub.kind;
  proj.bits.assign(trace.size(), 0);
  if (!verdict.holds()) return proj;
  const auto& stats = std::get<OscillationStats>(verdict.witness);
  if (sub.kind == OccurrenceKind::State) {
    mark_range(proj.bits, trace, stats.extrema.front().t, stats.extrema.back().t);
    return proj;
  }
  for (const Extremum& e : stats.extrema) {
    const bool want = sub.osc_anchor == OscillationAnchor::All ||
                      (sub.osc_anchor == OscillationAnchor::Minima &&
                       e.kind == ExtremumKind::Min) ||
                      (sub.osc_anchor == OscillationAnchor::Maxima &&
                       e.kind == ExtremumKind::Max);
    if (want) mark_time(proj.bits, trace, e.t);
  }
  return proj;
}

BooleanProjection project_functional(const FunctionalProperty& prop, const SubProperty& sub,
                                     const Trace& trace, const EvalConfig& config) {
  const Trace extended = extend_trace(trace, prop.target_name, prop.expr, config);
  SubProperty inner = sub;
  inner.body = prop.wrapped;
  BooleanProjection proj = project(inner, extended, config);
  proj.bits.resize(trace.size(), 0);  // pad a derivative-shortened grid
  return proj;
}

BooleanProjection project_order(const OrderProperty& prop, const SubProperty& sub,
                                const Trace& trace, const EvalConfig& config) {
  if (sub.kind != OccurrenceKind::Event) {
    throw Error(ErrorCode::NotProjectable,
                "an order relationship only projects as an event");
  }
  BooleanProjection cause = project(prop.cause, trace, config);
  BooleanProjection effect = project(prop.effect, trace, config);
  const std::vector<std::size_t> pairs =
      matched_effect_indices(prop.pattern, cause, effect, prop.bound, trace, config);
  BooleanProjection proj;
  proj.kind = OccurrenceKind::Event;
  proj.bits.assign(trace.size(), 0);
  for (std::size_t k : pairs) proj.bits[k] = 1;
  return proj;
}

}  // namespace

std::vector<char> predicate_bits(const Predicate& predicate, const Trace& trace,
                                 const EvalConfig& config) {
  const Signal lhs = apply_transform(predicate.lhs, trace, config, "lhs");
  const Signal rhs = apply_transform(predicate.rhs, trace, config, "rhs");
  const std::size_t n = std::min(lhs.size(), rhs.size());
  std::vector<char> bits(trace.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    bits[i] = rel_op_eval(predicate.op, lhs.value_at_index(i), rhs.value_at_index(i),
                          config.eq_tol);
  }
  return bits;
}

BooleanProjection project(const SubProperty& sub, const Trace& trace,
                          const EvalConfig& config) {
  const PropertyBody& body = *sub.body;
  BooleanProjection proj;
  if (const auto* da = std::get_if<DataAssertion>(&body.node)) {
    proj = project_data_assertion(*da, sub.kind, trace, config);
  } else if (const auto* sp = std::get_if<SpikeProperty>(&body.node)) {
    proj = project_spike(*sp, sub, trace, config);
  } else if (const auto* osc = std::get_if<OscillationProperty>(&body.node)) {
    proj = project_oscillation(*osc, sub, trace, config);
  } else if (const auto* fn = std::get_if<FunctionalProperty>(&body.node)) {
    proj = project_functional(*fn, sub, trace, config);
  } else if (const auto* ord = std::get_if<OrderProperty>(&body.node)) {
    proj = project_order(*ord, sub, trace, config);
  } else {
    throw Error(ErrorCode::NotProjectable,
                "sub-property type has no boolean projection");
  }
  mask_domain(proj.bits);
  return proj;
}

std::vector<std::size_t> rising_edges(const BooleanProjection& proj) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < proj.bits.size(); ++i) {
    if (proj.bits[i] && !proj.bits[i - 1]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> occurrence_indices(const BooleanProjection& proj) {
  if (proj.kind == OccurrenceKind::Event) return rising_edges(proj);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < proj.bits.size(); ++i) {
    if (proj.bits[i]) out.push_back(i);
  }
  return out;
}

}  // namespace sigprop
