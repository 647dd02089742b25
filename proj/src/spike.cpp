#include "sigprop/spike.hpp"

#include <cmath>

namespace sigprop {

namespace {

double combine_amplitudes(SpikeSpec::Psi psi, double a1, double a2) {
  switch (psi) {
    case SpikeSpec::Psi::Min: return std::min(a1, a2);
    case SpikeSpec::Psi::Max: return std::max(a1, a2);
    case SpikeSpec::Psi::Mean: return 0.5 * (a1 + a2);
  }
  return 0.0;
}

bool constraint_ok(const std::optional<FeatureConstraint>& c, double value,
                   const EvalConfig& config) {
  if (!c) return true;
  return rel_op_eval(c->op, value, c->threshold, config.eq_tol);
}

struct TripleScan {
  std::vector<SpikeFeatures> satisfying;
  std::optional<SpikeFeatures> first_triple;
};

TripleScan scan_triples(const Signal& sig, const SpikeSpec& spec, const Trace& trace,
                        const EvalConfig& config, bool stop_at_first) {
  const ExtremumKind valley = spec.polarity == SpikeSpec::Polarity::Upward
                                  ? ExtremumKind::Min
                                  : ExtremumKind::Max;
  const ExtremumKind peak =
      valley == ExtremumKind::Min ? ExtremumKind::Max : ExtremumKind::Min;

  const std::vector<Extremum> extrema =
      find_alternating_extrema(sig, spec.window.lo, spec.window.hi, spec.method,
                               config.prominence, trace, config);

  TripleScan scan;
  for (std::size_t i = 0; i < extrema.size(); ++i) {
    if (extrema[i].kind != valley) continue;
    for (std::size_t j = i + 1; j < extrema.size(); ++j) {
      if (extrema[j].kind != peak) continue;
      for (std::size_t k = j + 1; k < extrema.size(); ++k) {
        if (extrema[k].kind != valley) continue;
        SpikeFeatures f = spike_features(extrema[i], extrema[j], extrema[k], spec.psi);
        if (!scan.first_triple) scan.first_triple = f;
        if (spike_constraints_hold(f, spec, config)) {
          scan.satisfying.push_back(f);
          if (stop_at_first) return scan;
        }
      }
    }
  }
  return scan;
}

}  // namespace

SpikeFeatures spike_features(const Extremum& vp1, const Extremum& pp,
                             const Extremum& vp2, SpikeSpec::Psi psi) {
  SpikeFeatures f;
  f.vp1 = vp1.t;
  f.pp = pp.t;
  f.vp2 = vp2.t;
  f.a1 = std::fabs(pp.v - vp1.v);
  f.a2 = std::fabs(pp.v - vp2.v);
  f.a = combine_amplitudes(psi, f.a1, f.a2);
  f.w1 = pp.t - vp1.t;
  f.w2 = vp2.t - pp.t;
  f.w = vp2.t - vp1.t;
  f.sp1 = f.a1 / f.w1;
  f.sp2 = f.a2 / f.w2;
  return f;
}

bool spike_constraints_hold(const SpikeFeatures& f, const SpikeSpec& spec,
                            const EvalConfig& config) {
  return constraint_ok(spec.amplitude, f.a, config) &&
         constraint_ok(spec.slope1, f.sp1, config) &&
         constraint_ok(spec.slope2, f.sp2, config) &&
         constraint_ok(spec.width, f.w, config);
}

Verdict detect_spike(const Signal& sig, const SpikeSpec& spec, const Trace& trace,
                     const EvalConfig& config) {
  const TripleScan scan = scan_triples(sig, spec, trace, config, /*stop_at_first=*/true);
  if (!scan.satisfying.empty()) {
    Verdict v = make_holds();
    v.witness = scan.satisfying.front();
    return v;
  }
  if (scan.first_triple) {
    return make_violated(*scan.first_triple, "no extremum triple satisfies the feature constraints");
  }
  return make_violated(std::monostate{}, "no ordered extremum triple in the observation window");
}

std::vector<SpikeFeatures> satisfying_spikes(const Signal& sig, const SpikeSpec& spec,
                                             const Trace& trace, const EvalConfig& config) {
  return scan_triples(sig, spec, trace, config, /*stop_at_first=*/false).satisfying;
}

Verdict check_spike_two_param(const Signal& sig, const SpikeTwoParamSpec& spec,
                              const Trace& trace, const EvalConfig&) {
  if (!(spec.m > 0.0) || !(spec.w > 0.0)) {
    throw Error(ErrorCode::InvalidThreshold, "spike parameters m and w must be positive");
  }
  std::vector<double> deriv_times;
  std::vector<double> deriv_values;
  if (spec.derivative_column.empty()) {
    Signal d = sig.finite_difference(1);
    deriv_times = d.times();
    deriv_values = d.values();
  } else {
    if (!trace.has_signal(spec.derivative_column)) {
      throw Error(ErrorCode::MissingDerivativeColumn,
                  "derivative column '" + spec.derivative_column + "' not present in trace");
    }
    const Signal& d = trace.signal(spec.derivative_column);
    deriv_times = d.times();
    deriv_values = d.values();
  }

  const double end = sig.length();
  for (std::size_t i = 0; i < deriv_times.size(); ++i) {
    if (deriv_times[i] >= end) break;
    if (!(deriv_values[i] > spec.m)) continue;
    for (std::size_t j = i; j < deriv_times.size(); ++j) {
      if (deriv_times[j] > deriv_times[i] + spec.w || deriv_times[j] >= end) break;
      if (deriv_values[j] < -spec.m) {
        Verdict v = make_holds();
        v.witness = ViolationPoint{deriv_times[i], deriv_values[i], i};
        return v;
      }
    }
  }
  return make_violated(std::monostate{},
                       "no derivative rise above m followed within w by a fall below -m");
}

}  // namespace sigprop
