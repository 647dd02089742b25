#include "sigprop/oscillation.hpp"

#include <cmath>

namespace sigprop {

namespace {

OscillationStats stats_lenient(const std::vector<Extremum>& extrema) {
  OscillationStats stats;
  stats.extrema = extrema;
  const std::size_t m = extrema.size();
  stats.osc_n = m == 0 ? 0 : static_cast<long>((m - 1) / 2);
  if (m >= 2) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      sum += std::fabs(extrema[i].v - extrema[i + 1].v);
    }
    stats.avg_amp_pp = sum / static_cast<double>(m - 1);
  }
  if (stats.osc_n >= 1) {
    double sum = 0.0;
    for (long i = 1; i <= stats.osc_n; ++i) {
      sum += std::fabs(extrema[static_cast<std::size_t>(2 * i - 2)].t -
                       extrema[static_cast<std::size_t>(2 * i)].t);
    }
    stats.avg_period = sum / static_cast<double>(stats.osc_n);
  }
  return stats;
}

double triple_amplitude(const OscillationSpec& spec, const Extremum& a, const Extremum& b,
                        const Extremum& c) {
  if (spec.amplitude_mode == OscillationSpec::AmplitudeMode::Reference) {
    return std::max({std::fabs(a.v - spec.reference), std::fabs(b.v - spec.reference),
                     std::fabs(c.v - spec.reference)});
  }
  return std::max(std::fabs(a.v - b.v), std::fabs(b.v - c.v));
}

}  // namespace

const char* damping_class_text(DampingClass c) {
  switch (c) {
    case DampingClass::Damped: return "damped";
    case DampingClass::Driven: return "driven";
    case DampingClass::Neither: return "neither";
    case DampingClass::Both: return "both";
  }
  return "?";
}

OscillationStats oscillation_stats(const std::vector<Extremum>& extrema) {
  if (extrema.size() < 2) {
    throw Error(ErrorCode::TooFewExtrema,
                "need at least 2 extrema, got " + std::to_string(extrema.size()));
  }
  return stats_lenient(extrema);
}

DampingClass classify_damping(const std::vector<Extremum>& extrema,
                              const EvalConfig& config) {
  if (extrema.size() < 3) {
    throw Error(ErrorCode::TooFewExtrema, "need at least 3 extrema to classify damping");
  }
  std::vector<double> diffs;
  for (std::size_t i = 0; i + 1 < extrema.size(); ++i) {
    diffs.push_back(std::fabs(extrema[i].v - extrema[i + 1].v));
  }
  bool non_increasing = true;
  bool non_decreasing = true;
  for (std::size_t j = 0; j + 1 < diffs.size(); ++j) {
    if (diffs[j] < diffs[j + 1] - config.eq_tol) non_increasing = false;
    if (diffs[j] > diffs[j + 1] + config.eq_tol) non_decreasing = false;
  }
  if (non_increasing && non_decreasing) return DampingClass::Both;
  if (non_increasing) return DampingClass::Damped;
  if (non_decreasing) return DampingClass::Driven;
  return DampingClass::Neither;
}

DampingClass classify_damping_trend(const std::vector<Extremum>& extrema,
                                    const EvalConfig& config) {
  if (extrema.size() < 3) {
    throw Error(ErrorCode::TooFewExtrema, "need at least 3 extrema to classify damping");
  }
  std::vector<double> diffs;
  for (std::size_t i = 0; i + 1 < extrema.size(); ++i) {
    diffs.push_back(std::fabs(extrema[i].v - extrema[i + 1].v));
  }
  const double n = static_cast<double>(diffs.size());
  double mean_x = (n - 1.0) / 2.0;
  double mean_y = 0.0;
  for (double d : diffs) mean_y += d;
  mean_y /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < diffs.size(); ++j) {
    const double dx = static_cast<double>(j) - mean_x;
    num += dx * (diffs[j] - mean_y);
    den += dx * dx;
  }
  const double slope = den == 0.0 ? 0.0 : num / den;
  if (std::fabs(slope) <= config.eq_tol) return DampingClass::Both;
  return slope < 0.0 ? DampingClass::Damped : DampingClass::Driven;
}

Verdict check_oscillation(const Signal& sig, const OscillationSpec& spec,
                          const Trace& trace, const EvalConfig& config) {
  EvalConfig local = config;
  if (spec.prominence) local.prominence = *spec.prominence;
  const std::vector<Extremum> extrema =
      find_alternating_extrema(sig, spec.window.lo, spec.window.hi, spec.method,
                               local.prominence, trace, local);

  if (extrema.size() < 3) {
    return make_violated(stats_lenient(extrema),
                         "no complete oscillation in the observation interval");
  }
  const OscillationStats stats = stats_lenient(extrema);

  const bool aggregate_period = spec.period_mode == OscillationSpec::PeriodMode::Average;
  const bool aggregate_amp =
      spec.amplitude_mode == OscillationSpec::AmplitudeMode::AvgPeakToPeak;

  if (spec.period && aggregate_period &&
      !rel_op_eval(spec.period->op, stats.avg_period, spec.period->threshold,
                   config.eq_tol)) {
    return make_violated(stats, "average period violates the constraint");
  }
  if (spec.amplitude && aggregate_amp &&
      !rel_op_eval(spec.amplitude->op, stats.avg_amp_pp, spec.amplitude->threshold,
                   config.eq_tol)) {
    return make_violated(stats, "average peak-to-peak amplitude violates the constraint");
  }

  for (std::size_t i = 0; i + 2 < extrema.size(); ++i) {
    const Extremum& a = extrema[i];
    const Extremum& b = extrema[i + 1];
    const Extremum& c = extrema[i + 2];
    if (spec.period && !aggregate_period) {
      const double osc_p = std::fabs(c.t - a.t);
      if (!rel_op_eval(spec.period->op, osc_p, spec.period->threshold, config.eq_tol)) {
        return make_violated(stats, "cycle period violates the constraint");
      }
    }
    if (spec.amplitude && !aggregate_amp) {
      const double osc_a = triple_amplitude(spec, a, b, c);
      if (!rel_op_eval(spec.amplitude->op, osc_a, spec.amplitude->threshold,
                       config.eq_tol)) {
        return make_violated(stats, "cycle amplitude violates the constraint");
      }
    }
  }

  if (spec.damping != OscillationSpec::Damping::None) {
    const bool trend = spec.damping == OscillationSpec::Damping::DampedTrend ||
                       spec.damping == OscillationSpec::Damping::DrivenTrend;
    const DampingClass cls = trend ? classify_damping_trend(extrema, config)
                                   : classify_damping(extrema, config);
    const bool want_damped = spec.damping == OscillationSpec::Damping::Damped ||
                             spec.damping == OscillationSpec::Damping::DampedTrend;
    const bool ok = cls == DampingClass::Both ||
                    (want_damped ? cls == DampingClass::Damped : cls == DampingClass::Driven);
    if (!ok) {
      return make_violated(stats, std::string("oscillation is not ") +
                                      (want_damped ? "damped" : "driven") + " (classified " +
                                      damping_class_text(cls) + ")");
    }
  }

  Verdict v = make_holds();
  v.witness = stats;
  return v;
}

}  // namespace sigprop
