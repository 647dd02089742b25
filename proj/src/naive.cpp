#include "sigprop/naive.hpp"

#include <cmath>
#include <optional>

namespace sigprop {

namespace {

constexpr std::size_t kMaxNaiveSamples = 10000;

// ---------------------------------------------------------------------------
// Pointwise expression and predicate evaluation (no column precomputation).

std::optional<double> expr_at(const TransformExpr& e, const Trace& trace, std::size_t i,
                              const EvalConfig& config) {
  if (i >= trace.size()) return std::nullopt;
  switch (e.op) {
    case TransformExpr::Op::Constant:
      return e.constant;
    case TransformExpr::Op::SignalRef:
      return trace.signal(e.signal).value_at_index(i);
    case TransformExpr::Op::Abs: {
      auto v = expr_at(e.children[0], trace, i, config);
      if (!v) return std::nullopt;
      return std::fabs(*v);
    }
    case TransformExpr::Op::Negate: {
      auto v = expr_at(e.children[0], trace, i, config);
      if (!v) return std::nullopt;
      return -*v;
    }
    case TransformExpr::Op::Derivative: {
      TransformExpr inner = e.order == 1 ? e.children[0]
                                         : TransformExpr::unary(TransformExpr::Op::Derivative,
                                                                e.children[0], e.order - 1);
      if (i + 1 >= trace.size()) return std::nullopt;
      auto a = expr_at(inner, trace, i, config);
      auto b = expr_at(inner, trace, i + 1, config);
      if (!a || !b) return std::nullopt;
      return (*b - *a) / (trace.grid()[i + 1] - trace.grid()[i]);
    }
    default: {
      auto l = expr_at(e.children[0], trace, i, config);
      auto r = expr_at(e.children[1], trace, i, config);
      if (!l || !r) return std::nullopt;
      switch (e.op) {
        case TransformExpr::Op::Add: return *l + *r;
        case TransformExpr::Op::Sub: return *l - *r;
        case TransformExpr::Op::Mul: return *l * *r;
        case TransformExpr::Op::Div:
          if (std::fabs(*r) <= config.eq_tol) {
            throw Error(ErrorCode::DivisionByZero,
                        "denominator is zero at t=" + std::to_string(trace.grid()[i]));
          }
          return *l / *r;
        default: return std::nullopt;
      }
    }
  }
}

std::optional<bool> pred_at(const Predicate& p, const Trace& trace, std::size_t i,
                            const EvalConfig& config) {
  auto l = expr_at(p.lhs, trace, i, config);
  auto r = expr_at(p.rhs, trace, i, config);
  if (!l || !r) return std::nullopt;
  return rel_op_eval(p.op, *l, *r, config.eq_tol);
}

bool in_domain(const Trace& trace, std::size_t i) { return i + 1 < trace.size(); }

bool in_intervals(const std::vector<Interval>& ivs, double t) {
  if (ivs.empty()) return true;
  for (const Interval& iv : ivs) {
    if (t >= iv.lo && t <= iv.hi) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Pointwise interior-extremum classification (plateau-aware, earliest sample
// of a flat run is canonical).

struct WindowView {
  std::vector<std::size_t> idx;  // grid indices inside the window
};

WindowView window_of(const Signal& sig, double lo, double hi) {
  WindowView w;
  const double end = sig.length();
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const double t = sig.time_at(i);
    if (t < lo || t > hi || t >= end) continue;
    w.idx.push_back(i);
  }
  return w;
}

// Classifies window position p; nullopt when not a canonical interior
// extremum under the analytical definition.
std::optional<ExtremumKind> classify_at(const Signal& sig, const WindowView& w,
                                        std::size_t p, const EvalConfig& config) {
  const double v = sig.value_at_index(w.idx[p]);
  if (p > 0 && std::fabs(sig.value_at_index(w.idx[p - 1]) - v) <= config.eq_tol) {
    return std::nullopt;  // not the earliest sample of its run
  }
  // Nearest distinct values on both sides.
  std::optional<double> left, right;
  for (std::size_t q = p; q-- > 0;) {
    const double u = sig.value_at_index(w.idx[q]);
    if (std::fabs(u - v) > config.eq_tol) {
      left = u;
      break;
    }
  }
  for (std::size_t q = p + 1; q < w.idx.size(); ++q) {
    const double u = sig.value_at_index(w.idx[q]);
    if (std::fabs(u - v) > config.eq_tol) {
      right = u;
      break;
    }
  }
  if (!left || !right) return std::nullopt;  // boundary run
  if (*left > v && *right > v) return ExtremumKind::Min;
  if (*left < v && *right < v) return ExtremumKind::Max;
  return std::nullopt;
}

std::vector<Extremum> naive_extrema(const Signal& sig, double lo, double hi,
                                    const EvalConfig& config) {
  const WindowView w = window_of(sig, lo, hi);
  std::vector<Extremum> out;
  for (std::size_t p = 0; p < w.idx.size(); ++p) {
    if (auto kind = classify_at(sig, w, p, config)) {
      out.push_back({*kind, w.idx[p], sig.time_at(w.idx[p]), sig.value_at_index(w.idx[p])});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spike, formula with the three extremum predicates.

double psi_apply(SpikeSpec::Psi psi, double a1, double a2) {
  if (psi == SpikeSpec::Psi::Min) return a1 < a2 ? a1 : a2;
  if (psi == SpikeSpec::Psi::Max) return a1 > a2 ? a1 : a2;
  return (a1 + a2) / 2.0;
}

bool feature_ok(const std::optional<FeatureConstraint>& c, double value,
                const EvalConfig& config) {
  return !c || rel_op_eval(c->op, value, c->threshold, config.eq_tol);
}

Verdict naive_spike(const SpikeProperty& prop, const Trace& trace, const EvalConfig& config) {
  const Signal& sig = trace.signal(prop.spec.signal);
  const ExtremumKind valley = prop.spec.polarity == SpikeSpec::Polarity::Upward
                                  ? ExtremumKind::Min
                                  : ExtremumKind::Max;
  const WindowView w = window_of(sig, prop.spec.window.lo, prop.spec.window.hi);

  for (std::size_t i = 0; i < w.idx.size(); ++i) {
    auto ki = classify_at(sig, w, i, config);
    if (!ki || *ki != valley) continue;
    for (std::size_t j = i + 1; j < w.idx.size(); ++j) {
      auto kj = classify_at(sig, w, j, config);
      if (!kj || *kj == valley) continue;
      for (std::size_t k = j + 1; k < w.idx.size(); ++k) {
        auto kk = classify_at(sig, w, k, config);
        if (!kk || *kk != valley) continue;
        const double vp1 = sig.time_at(w.idx[i]);
        const double pp = sig.time_at(w.idx[j]);
        const double vp2 = sig.time_at(w.idx[k]);
        const double a1 = std::fabs(sig.value_at_index(w.idx[j]) - sig.value_at_index(w.idx[i]));
        const double a2 = std::fabs(sig.value_at_index(w.idx[j]) - sig.value_at_index(w.idx[k]));
        const double a = psi_apply(prop.spec.psi, a1, a2);
        const double sp1 = std::fabs(a1 / (pp - vp1));
        const double sp2 = std::fabs(a2 / (vp2 - pp));
        const double width = vp2 - vp1;
        if (feature_ok(prop.spec.amplitude, a, config) &&
            feature_ok(prop.spec.slope1, sp1, config) &&
            feature_ok(prop.spec.slope2, sp2, config) &&
            feature_ok(prop.spec.width, width, config)) {
          return make_holds();
        }
      }
    }
  }
  return make_violated(std::monostate{}, "no satisfying extremum triple");
}

Verdict naive_spike_two_param(const SpikeTwoParamProperty& prop, const Trace& trace,
                              const EvalConfig&) {
  const Signal& sig = trace.signal(prop.spec.signal);
  auto deriv = [&](std::size_t i) -> std::optional<double> {
    if (!prop.spec.derivative_column.empty()) {
      return trace.signal(prop.spec.derivative_column).value_at_index(i);
    }
    if (i + 1 >= sig.size()) return std::nullopt;
    return (sig.value_at_index(i + 1) - sig.value_at_index(i)) /
           (sig.time_at(i + 1) - sig.time_at(i));
  };
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (!in_domain(trace, i)) break;
    auto d = deriv(i);
    if (!d || !(*d > prop.spec.m)) continue;
    for (std::size_t j = i; j < trace.size(); ++j) {
      if (!in_domain(trace, j) || trace.grid()[j] > trace.grid()[i] + prop.spec.w) break;
      auto dj = deriv(j);
      if (dj && *dj < -prop.spec.m) return make_holds();
    }
  }
  return make_violated(std::monostate{}, "no derivative excursion pair");
}

// ---------------------------------------------------------------------------
// Oscillation.

Verdict naive_oscillation(const OscillationProperty& prop, const Trace& trace,
                          const EvalConfig& config) {
  const OscillationSpec& spec = prop.spec;
  const Signal& sig = trace.signal(spec.signal);
  const std::vector<Extremum> ex =
      naive_extrema(sig, spec.window.lo, spec.window.hi, config);
  const std::size_t m = ex.size();
  if (m < 3) return make_violated(std::monostate{}, "fewer than three extrema");

  const long osc_n = static_cast<long>((m - 1) / 2);
  double avg_amp = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) avg_amp += std::fabs(ex[i].v - ex[i + 1].v);
  avg_amp /= static_cast<double>(m - 1);
  double avg_period = 0.0;
  for (long i = 1; i <= osc_n; ++i) {
    avg_period += std::fabs(ex[static_cast<std::size_t>(2 * i - 2)].t -
                            ex[static_cast<std::size_t>(2 * i)].t);
  }
  avg_period /= static_cast<double>(osc_n);

  const bool agg_p = spec.period_mode == OscillationSpec::PeriodMode::Average;
  const bool agg_a = spec.amplitude_mode == OscillationSpec::AmplitudeMode::AvgPeakToPeak;
  if (spec.period && agg_p &&
      !rel_op_eval(spec.period->op, avg_period, spec.period->threshold, config.eq_tol)) {
    return make_violated(std::monostate{}, "average period fails");
  }
  if (spec.amplitude && agg_a &&
      !rel_op_eval(spec.amplitude->op, avg_amp, spec.amplitude->threshold, config.eq_tol)) {
    return make_violated(std::monostate{}, "average amplitude fails");
  }
  for (std::size_t i = 0; i + 2 < m; ++i) {
    if (spec.period && !agg_p) {
      const double p = std::fabs(ex[i + 2].t - ex[i].t);
      if (!rel_op_eval(spec.period->op, p, spec.period->threshold, config.eq_tol)) {
        return make_violated(std::monostate{}, "cycle period fails");
      }
    }
    if (spec.amplitude && !agg_a) {
      double ampl;
      if (spec.amplitude_mode == OscillationSpec::AmplitudeMode::Reference) {
        ampl = std::max({std::fabs(ex[i].v - spec.reference),
                         std::fabs(ex[i + 1].v - spec.reference),
                         std::fabs(ex[i + 2].v - spec.reference)});
      } else {
        ampl = std::max(std::fabs(ex[i].v - ex[i + 1].v), std::fabs(ex[i + 1].v - ex[i + 2].v));
      }
      if (!rel_op_eval(spec.amplitude->op, ampl, spec.amplitude->threshold, config.eq_tol)) {
        return make_violated(std::monostate{}, "cycle amplitude fails");
      }
    }
  }

  if (spec.damping != OscillationSpec::Damping::None) {
    std::vector<double> diffs;
    for (std::size_t i = 0; i + 1 < m; ++i) diffs.push_back(std::fabs(ex[i].v - ex[i + 1].v));
    bool ok;
    if (spec.damping == OscillationSpec::Damping::Damped ||
        spec.damping == OscillationSpec::Damping::Driven) {
      const bool want_damped = spec.damping == OscillationSpec::Damping::Damped;
      ok = true;
      for (std::size_t j = 0; j + 1 < diffs.size(); ++j) {
        if (want_damped ? diffs[j] < diffs[j + 1] - config.eq_tol
                        : diffs[j] > diffs[j + 1] + config.eq_tol) {
          ok = false;
          break;
        }
      }
    } else {
      const bool want_damped = spec.damping == OscillationSpec::Damping::DampedTrend;
      const double n = static_cast<double>(diffs.size());
      double sx = 0, sy = 0, sxy = 0, sxx = 0;
      for (std::size_t j = 0; j < diffs.size(); ++j) {
        sx += static_cast<double>(j);
        sy += diffs[j];
        sxy += static_cast<double>(j) * diffs[j];
        sxx += static_cast<double>(j) * static_cast<double>(j);
      }
      const double den = n * sxx - sx * sx;
      const double slope = den == 0.0 ? 0.0 : (n * sxy - sx * sy) / den;
      ok = want_damped ? slope <= config.eq_tol : slope >= -config.eq_tol;
    }
    if (!ok) return make_violated(std::monostate{}, "damping trend fails");
  }
  return make_holds();
}

// ---------------------------------------------------------------------------
// Boolean projections.

struct NaiveProjection {
  OccurrenceKind kind;
  std::vector<char> bits;
};

NaiveProjection naive_project(const SubProperty& sub, const Trace& trace,
                              const EvalConfig& config);

std::vector<std::size_t> naive_occurrences(const NaiveProjection& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.bits.size(); ++i) {
    if (p.kind == OccurrenceKind::Event) {
      if (i >= 1 && p.bits[i] && !p.bits[i - 1]) out.push_back(i);
    } else if (p.bits[i]) {
      out.push_back(i);
    }
  }
  return out;
}

bool naive_bound_ok(const std::optional<DistanceBound>& bound, double d,
                    const EvalConfig& config) {
  return !bound || rel_op_eval(bound->op, d, bound->n, config.eq_tol);
}

bool naive_window_open(const std::optional<DistanceBound>& bound, double t, double end) {
  if (!bound) return true;
  if (bound->op == RelOp::Lt || bound->op == RelOp::Le || bound->op == RelOp::Eq) {
    return t + bound->n >= end;
  }
  return true;
}

Trace naive_extend(const Trace& trace, const std::string& name, const TransformExpr& expr,
                   const EvalConfig& config) {
  std::vector<double> values;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    auto v = expr_at(expr, trace, i, config);
    if (!v) break;
    values.push_back(*v);
  }
  if (values.size() < 2) {
    throw Error(ErrorCode::TooFewSamples, "transform result has fewer than 2 samples");
  }
  std::vector<double> grid(trace.grid().begin(),
                           trace.grid().begin() + static_cast<std::ptrdiff_t>(values.size()));
  Trace out(grid);
  for (const auto& n : trace.signal_names()) {
    if (n == name) continue;
    const auto& vs = trace.signal(n).values();
    out.add_signal(n, std::vector<double>(vs.begin(),
                                          vs.begin() + static_cast<std::ptrdiff_t>(values.size())));
  }
  out.add_signal(name, values);
  return out;
}

void naive_mark(std::vector<char>& bits, const Trace& trace, double t) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (std::fabs(trace.grid()[i] - t) <= 1e-12) bits[i] = 1;
  }
}

NaiveProjection naive_project(const SubProperty& sub, const Trace& trace,
                              const EvalConfig& config) {
  NaiveProjection proj;
  proj.kind = sub.kind;
  proj.bits.assign(trace.size(), 0);
  const PropertyBody& body = *sub.body;

  if (const auto* da = std::get_if<DataAssertion>(&body.node)) {
    for (std::size_t i = 0; i < trace.size(); ++i) {
      auto now = pred_at(da->predicate, trace, i, config);
      bool truth;
      if (sub.kind == OccurrenceKind::State) {
        truth = now.value_or(false);
      } else {
        auto before = i == 0 ? std::optional<bool>(false)
                             : pred_at(da->predicate, trace, i - 1, config);
        truth = i >= 1 && now.value_or(false) && !before.value_or(false);
      }
      proj.bits[i] = truth && in_intervals(da->intervals, trace.grid()[i]);
    }
  } else if (const auto* sp = std::get_if<SpikeProperty>(&body.node)) {
    const Signal& sig = trace.signal(sp->spec.signal);
    const WindowView w = window_of(sig, sp->spec.window.lo, sp->spec.window.hi);
    const ExtremumKind valley = sp->spec.polarity == SpikeSpec::Polarity::Upward
                                    ? ExtremumKind::Min
                                    : ExtremumKind::Max;
    for (std::size_t i = 0; i < w.idx.size(); ++i) {
      auto ki = classify_at(sig, w, i, config);
      if (!ki || *ki != valley) continue;
      for (std::size_t j = i + 1; j < w.idx.size(); ++j) {
        auto kj = classify_at(sig, w, j, config);
        if (!kj || *kj == valley) continue;
        for (std::size_t k = j + 1; k < w.idx.size(); ++k) {
          auto kk = classify_at(sig, w, k, config);
          if (!kk || *kk != valley) continue;
          const double a1 =
              std::fabs(sig.value_at_index(w.idx[j]) - sig.value_at_index(w.idx[i]));
          const double a2 =
              std::fabs(sig.value_at_index(w.idx[j]) - sig.value_at_index(w.idx[k]));
          const double a = psi_apply(sp->spec.psi, a1, a2);
          const double vp1 = sig.time_at(w.idx[i]);
          const double pp = sig.time_at(w.idx[j]);
          const double vp2 = sig.time_at(w.idx[k]);
          if (!feature_ok(sp->spec.amplitude, a, config) ||
              !feature_ok(sp->spec.slope1, a1 / (pp - vp1), config) ||
              !feature_ok(sp->spec.slope2, a2 / (vp2 - pp), config) ||
              !feature_ok(sp->spec.width, vp2 - vp1, config)) {
            continue;
          }
          if (sub.kind == OccurrenceKind::State) {
            for (std::size_t b = 0; b < trace.size(); ++b) {
              if (trace.grid()[b] >= vp1 && trace.grid()[b] <= vp2) proj.bits[b] = 1;
            }
          } else {
            const double anchor = sub.spike_anchor == SpikeAnchor::Vp1  ? vp1
                                  : sub.spike_anchor == SpikeAnchor::Vp2 ? vp2
                                                                          : pp;
            naive_mark(proj.bits, trace, anchor);
          }
        }
      }
    }
  } else if (const auto* osc = std::get_if<OscillationProperty>(&body.node)) {
    OscillationProperty inner = *osc;
    const Verdict v = naive_oscillation(inner, trace, config);
    if (v.holds()) {
      const Signal& sig = trace.signal(osc->spec.signal);
      const auto ex = naive_extrema(sig, osc->spec.window.lo, osc->spec.window.hi, config);
      if (sub.kind == OccurrenceKind::State) {
        for (std::size_t b = 0; b < trace.size(); ++b) {
          if (trace.grid()[b] >= ex.front().t && trace.grid()[b] <= ex.back().t) {
            proj.bits[b] = 1;
          }
        }
      } else {
        for (const Extremum& e : ex) {
          if (sub.osc_anchor == OscillationAnchor::All ||
              (sub.osc_anchor == OscillationAnchor::Minima && e.kind == ExtremumKind::Min) ||
              (sub.osc_anchor == OscillationAnchor::Maxima && e.kind == ExtremumKind::Max)) {
            naive_mark(proj.bits, trace, e.t);
          }
        }
      }
    }
  } else if (const auto* fn = std::get_if<FunctionalProperty>(&body.node)) {
    const Trace extended = naive_extend(trace, fn->target_name, fn->expr, config);
    SubProperty inner = sub;
    inner.body = fn->wrapped;
    NaiveProjection p = naive_project(inner, extended, config);
    proj.bits.assign(trace.size(), 0);
    std::copy(p.bits.begin(), p.bits.end(), proj.bits.begin());
  } else if (const auto* ord = std::get_if<OrderProperty>(&body.node)) {
    if (sub.kind != OccurrenceKind::Event) {
      throw Error(ErrorCode::NotProjectable, "order relationship projects as event only");
    }
    NaiveProjection cause = naive_project(ord->cause, trace, config);
    NaiveProjection effect = naive_project(ord->effect, trace, config);
    for (std::size_t ei : naive_occurrences(effect)) {
      for (std::size_t ci : naive_occurrences(cause)) {
        if (ci >= ei) break;
        if (naive_bound_ok(ord->bound, std::fabs(trace.grid()[ei] - trace.grid()[ci]),
                           config)) {
          proj.bits[ei] = 1;
          break;
        }
      }
    }
  } else {
    throw Error(ErrorCode::NotProjectable, "sub-property type has no boolean projection");
  }

  if (!proj.bits.empty()) proj.bits.back() = 0;
  return proj;
}

// ---------------------------------------------------------------------------
// Order relationships and transients.

Verdict naive_order(const OrderProperty& prop, const Trace& trace, const EvalConfig& config) {
  NaiveProjection cause = naive_project(prop.cause, trace, config);
  NaiveProjection effect = naive_project(prop.effect, trace, config);
  const double end = trace.length();

  if (prop.pattern == OrderProperty::Pattern::Response) {
    bool pending = false;
    for (std::size_t ci : naive_occurrences(cause)) {
      const double t = trace.grid()[ci];
      bool matched = false;
      for (std::size_t ei : naive_occurrences(effect)) {
        if (ei <= ci) continue;
        if (naive_bound_ok(prop.bound, std::fabs(trace.grid()[ei] - t), config)) {
          matched = true;
          break;
        }
      }
      if (matched) continue;
      if (config.end_policy == EndPolicy::Inconclusive &&
          naive_window_open(prop.bound, t, end)) {
        pending = true;
        continue;
      }
      return make_violated(std::monostate{}, "unmatched cause");
    }
    if (pending) return make_inconclusive(std::monostate{}, "window extends past |s|");
    return make_holds();
  }

  for (std::size_t ei : naive_occurrences(effect)) {
    const double t = trace.grid()[ei];
    bool matched = false;
    for (std::size_t ci : naive_occurrences(cause)) {
      if (ci >= ei) break;
      if (naive_bound_ok(prop.bound, std::fabs(trace.grid()[ci] - t), config)) {
        matched = true;
        break;
      }
    }
    if (!matched) return make_violated(std::monostate{}, "unmatched effect");
  }
  return make_holds();
}

bool naive_monotone(const Signal& sig, std::size_t from, std::size_t to, bool rising) {
  for (std::size_t j = from; j < to; ++j) {
    const double a = sig.value_at_index(j);
    const double b = sig.value_at_index(j + 1);
    if (rising ? !(a < b) : !(a > b)) return false;
  }
  return true;
}

NaiveProjection naive_target_event(const Predicate& target, const Trace& trace,
                                   const EvalConfig& config) {
  SubProperty sub;
  sub.kind = OccurrenceKind::Event;
  sub.body = make_body(PropertyBody{DataAssertion{target, {}}});
  return naive_project(sub, trace, config);
}

Verdict naive_rise_fall(const RiseFallProperty& prop, const Trace& trace,
                        const EvalConfig& config) {
  const Signal& sig = trace.signal(prop.signal);
  NaiveProjection trigger = naive_project(prop.trigger, trace, config);
  NaiveProjection target = naive_target_event(prop.target, trace, config);
  const bool rising = prop.direction == RiseFallProperty::Direction::Rise;
  const double end = trace.length();

  bool pending = false;
  for (std::size_t si : naive_occurrences(trigger)) {
    const double st = trace.grid()[si];
    bool matched = false;
    for (std::size_t k : naive_occurrences(target)) {
      if (k < si || trace.grid()[k] > st + prop.rt) continue;
      if (prop.monotonic && !naive_monotone(sig, si, k, rising)) continue;
      matched = true;
      break;
    }
    if (matched) continue;
    if (st + prop.rt >= end && config.end_policy == EndPolicy::Inconclusive) {
      pending = true;
      continue;
    }
    return make_violated(std::monostate{}, "target not reached in time");
  }
  if (pending) return make_inconclusive(std::monostate{}, "window extends past |s|");
  return make_holds();
}

Verdict naive_overshoot(const OvershootProperty& prop, const Trace& trace,
                        const EvalConfig& config) {
  const Signal& sig = trace.signal(prop.signal);
  NaiveProjection trigger = naive_project(prop.trigger, trace, config);
  NaiveProjection target = naive_target_event(prop.target, trace, config);
  const bool over = prop.direction == OvershootProperty::Direction::Overshoot;
  const double end = trace.length();

  double limit = prop.bound_value;
  if (prop.relative) {
    double threshold;
    if (prop.target.rhs.op == TransformExpr::Op::Constant) {
      threshold = prop.target.rhs.constant;
    } else {
      threshold = prop.target.lhs.constant;
    }
    limit = threshold + (over ? prop.bound_value : -prop.bound_value);
  }

  bool any_pending = false;
  for (std::size_t si : naive_occurrences(trigger)) {
    bool matched = false;
    bool saw = false;
    bool pending = false;
    bool excess = false;
    for (std::size_t k : naive_occurrences(target)) {
      if (k < si || matched) continue;
      if (prop.monotonic && !naive_monotone(sig, si, k, over)) continue;
      saw = true;
      const double tk = trace.grid()[k];
      bool bad = false;
      for (std::size_t i = k; i < trace.size(); ++i) {
        if (trace.grid()[i] > tk + prop.oi || trace.grid()[i] >= end) break;
        const double v = sig.value_at_index(i);
        if (over ? v > limit : v < limit) {
          bad = true;
          break;
        }
      }
      if (bad) {
        excess = true;
        continue;
      }
      if (!std::isinf(limit) && tk + prop.oi >= end &&
          config.end_policy == EndPolicy::Inconclusive) {
        pending = true;
        continue;
      }
      matched = true;
    }
    if (matched) continue;
    if (config.end_policy == EndPolicy::Inconclusive && (pending || !saw)) {
      any_pending = true;
      continue;
    }
    return make_violated(std::monostate{},
                         excess ? "bound exceeded in window" : "target never reached");
  }
  if (any_pending) return make_inconclusive(std::monostate{}, "window extends past |s|");
  return make_holds();
}

Verdict naive_body(const PropertyBody& body, const Trace& trace, const EvalConfig& config) {
  if (const auto* da = std::get_if<DataAssertion>(&body.node)) {
    std::vector<Interval> ivs = da->intervals;
    if (ivs.empty()) ivs.push_back({trace.grid().front(), trace.length()});
    for (const Interval& iv : ivs) {
      for (std::size_t i = 0; i < trace.size(); ++i) {
        const double t = trace.grid()[i];
        if (t < iv.lo || t > iv.hi || !in_domain(trace, i)) continue;
        auto truth = pred_at(da->predicate, trace, i, config);
        // The quantifier stops before the last defined sample: for a
        // derivative-shortened predicate, |s'| is the timestamp of its own
        // final sample.
        if (!truth || !pred_at(da->predicate, trace, i + 1, config)) continue;
        if (!*truth) {
          return make_violated(ViolationPoint{t, 0.0, i}, "assertion fails");
        }
      }
    }
    return make_holds();
  }
  if (const auto* sp = std::get_if<SpikeProperty>(&body.node)) {
    return naive_spike(*sp, trace, config);
  }
  if (const auto* sp2 = std::get_if<SpikeTwoParamProperty>(&body.node)) {
    return naive_spike_two_param(*sp2, trace, config);
  }
  if (const auto* osc = std::get_if<OscillationProperty>(&body.node)) {
    return naive_oscillation(*osc, trace, config);
  }
  if (const auto* fn = std::get_if<FunctionalProperty>(&body.node)) {
    const Trace extended = naive_extend(trace, fn->target_name, fn->expr, config);
    return naive_body(*fn->wrapped, extended, config);
  }
  if (const auto* ord = std::get_if<OrderProperty>(&body.node)) {
    return naive_order(*ord, trace, config);
  }
  if (const auto* rf = std::get_if<RiseFallProperty>(&body.node)) {
    return naive_rise_fall(*rf, trace, config);
  }
  if (const auto* os = std::get_if<OvershootProperty>(&body.node)) {
    return naive_overshoot(*os, trace, config);
  }
  throw Error(ErrorCode::NotProjectable, "unreachable property body");
}

}  // namespace

Verdict evaluate_naive(const PropertyAst& prop, const Trace& trace,
                       const EvalConfig& config) {
  if (trace.size() > kMaxNaiveSamples) {
    throw Error(ErrorCode::TraceTooLarge,
                "naive evaluation is limited to " + std::to_string(kMaxNaiveSamples) +
                    " samples");
  }
  Verdict v = naive_body(*prop.body, trace, config);
  v.property = prop.name;
  v.config = config;
  return v;
}

}  // namespace sigprop
