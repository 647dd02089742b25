#include "sigprop/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sigprop/order.hpp"
#include "sigprop/oscillation.hpp"
#include "sigprop/projection.hpp"
#include "sigprop/spike.hpp"
#include "sigprop/transform.hpp"
#include "sigprop/transient.hpp"

namespace sigprop {

namespace {

Verdict evaluate_data_assertion(const DataAssertion& da, const Trace& trace,
                                const EvalConfig& config) {
  const Signal lhs = apply_transform(da.predicate.lhs, trace, config, "lhs");
  const Signal rhs = apply_transform(da.predicate.rhs, trace, config, "rhs");
  const std::size_t defined = std::min(lhs.size(), rhs.size());

  std::vector<Interval> intervals = da.intervals;
  if (intervals.empty()) {
    intervals.push_back({trace.grid().front(), trace.length()});
  }
  for (const Interval& iv : intervals) {
    for (std::size_t i = 0; i < defined; ++i) {
      const double t = trace.grid()[i];
      if (t < iv.lo || t > iv.hi) continue;
      if (i + 1 >= defined) break;  // final defined sample lies outside [0, |s|)
      const double l = lhs.value_at_index(i);
      const double r = rhs.value_at_index(i);
      if (!rel_op_eval(da.predicate.op, l, r, config.eq_tol)) {
        return make_violated(ViolationPoint{t, l, i},
                             "assertion fails at t=" + format_number(t));
      }
    }
  }
  return make_holds();
}

Verdict evaluate_body(const PropertyBody& body, const Trace& trace,
                      const EvalConfig& config) {
  if (const auto* da = std::get_if<DataAssertion>(&body.node)) {
    return evaluate_data_assertion(*da, trace, config);
  }
  if (const auto* sp = std::get_if<SpikeProperty>(&body.node)) {
    return detect_spike(trace.signal(sp->spec.signal), sp->spec, trace, config);
  }
  if (const auto* sp2 = std::get_if<SpikeTwoParamProperty>(&body.node)) {
    return check_spike_two_param(trace.signal(sp2->spec.signal), sp2->spec, trace, config);
  }
  if (const auto* osc = std::get_if<OscillationProperty>(&body.node)) {
    return check_oscillation(trace.signal(osc->spec.signal), osc->spec, trace, config);
  }
  if (const auto* fn = std::get_if<FunctionalProperty>(&body.node)) {
    const Trace extended = extend_trace(trace, fn->target_name, fn->expr, config);
    return evaluate_body(*fn->wrapped, extended, config);
  }
  if (const auto* ord = std::get_if<OrderProperty>(&body.node)) {
    const BooleanProjection cause = project(ord->cause, trace, config);
    const BooleanProjection effect = project(ord->effect, trace, config);
    return ord->pattern == OrderProperty::Pattern::Response
               ? check_response(cause, effect, ord->bound, trace, config)
               : check_precedence(cause, effect, ord->bound, trace, config);
  }
  if (const auto* rf = std::get_if<RiseFallProperty>(&body.node)) {
    return check_rise_time(*rf, trace, config);
  }
  if (const auto* os = std::get_if<OvershootProperty>(&body.node)) {
    return check_overshoot(*os, trace, config);
  }
  throw Error(ErrorCode::NotProjectable, "unreachable property body");
}

using json = nlohmann::ordered_json;

const char* kind_text(ExtremumKind kind) {
  return kind == ExtremumKind::Min ? "min" : "max";
}

json witness_json(const Witness& witness) {
  if (std::holds_alternative<std::monostate>(witness)) return nullptr;
  json j;
  if (const auto* p = std::get_if<ViolationPoint>(&witness)) {
    j["type"] = "point";
    j["index"] = p->index;
    j["t"] = p->t;
    j["value"] = p->value;
  } else if (const auto* f = std::get_if<SpikeFeatures>(&witness)) {
    j["type"] = "spike_features";
    j["vp1"] = f->vp1;
    j["pp"] = f->pp;
    j["vp2"] = f->vp2;
    j["a1"] = f->a1;
    j["a2"] = f->a2;
    j["a"] = f->a;
    j["sp1"] = f->sp1;
    j["sp2"] = f->sp2;
    j["w"] = f->w;
    j["w1"] = f->w1;
    j["w2"] = f->w2;
  } else if (const auto* s = std::get_if<OscillationStats>(&witness)) {
    j["type"] = "oscillation_stats";
    j["osc_n"] = s->osc_n;
    j["avg_amp_pp"] = s->avg_amp_pp;
    j["avg_period"] = s->avg_period;
    json extrema = json::array();
    for (const Extremum& e : s->extrema) {
      extrema.push_back({{"kind", kind_text(e.kind)}, {"index", e.index}, {"t", e.t},
                         {"v", e.v}});
    }
    j["extrema"] = std::move(extrema);
  } else if (const auto* u = std::get_if<UnmatchedCause>(&witness)) {
    j["type"] = "unmatched_cause";
    j["index"] = u->index;
    j["t"] = u->t;
    j["window_truncated"] = u->window_truncated;
  }
  return j;
}

json config_json(const EvalConfig& config) {
  json j;
  j["eq_tol"] = config.eq_tol;
  j["deriv_tol"] = config.deriv_tol;
  j["prominence"] = config.prominence;
  j["end_policy"] =
      config.end_policy == EndPolicy::Inconclusive ? "inconclusive" : "strict";
  j["interp"] = config.interp == InterpolationMode::Grid ? "grid" : "linear";
  j["threads"] = config.threads;
  return j;
}

}  // namespace

Verdict evaluate_property(const PropertyAst& prop, const Trace& trace,
                          const EvalConfig& config) {
  try {
    Verdict v = evaluate_body(*prop.body, trace, config);
    v.property = prop.name;
    v.config = config;
    return v;
  } catch (const Error& e) {
    throw Error(e.code(), "property '" + prop.name + "' (line " +
                              std::to_string(prop.span.line) + "): " + e.what());
  }
}

Report evaluate(const std::vector<PropertyAst>& props, const Trace& trace,
                const EvalConfig& config) {
  Report report;
  report.trace = {trace.source_path, trace.size(), trace.length()};
  report.config = config;
  report.verdicts.resize(props.size());

  const std::size_t workers =
      std::max<std::size_t>(1, std::min(config.threads, props.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < props.size(); ++i) {
      report.verdicts[i] = evaluate_property(props[i], trace, config);
    }
    return report;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= props.size()) return;
      try {
        report.verdicts[i] = evaluate_property(props[i], trace, config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return report;
}

std::string report_to_json(const Report& report) {
  json j;
  j["schema"] = 1;
  j["trace"] = {{"path", report.trace.path},
                {"samples", report.trace.samples},
                {"length", report.trace.length}};
  j["config"] = config_json(report.config);
  json props = json::array();
  for (const Verdict& v : report.verdicts) {
    json p;
    p["name"] = v.property;
    p["status"] = status_text(v.status);
    p["witness"] = witness_json(v.witness);
    if (!v.reason.empty()) p["reason"] = v.reason;
    props.push_back(std::move(p));
  }
  j["properties"] = std::move(props);
  return j.dump(2) + "\n";
}

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  out << "trace: " << report.trace.path << " (" << report.trace.samples
      << " samples, |s|=" << report.trace.length << ")\n";
  for (const Verdict& v : report.verdicts) {
    out << "  " << v.property << ": " << status_text(v.status);
    if (!v.reason.empty()) out << ": " << v.reason;
    out << "\n";
  }
  return out.str();
}

int report_exit_code(const Report& report) {
  bool violated = false;
  bool inconclusive = false;
  for (const Verdict& v : report.verdicts) {
    violated |= v.status == Status::Violated;
    inconclusive |= v.status == Status::Inconclusive;
  }
  if (violated) return 1;
  if (inconclusive) return 2;
  return 0;
}

}  // namespace sigprop
