#include "sigprop/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sigprop {

namespace {

// First/second derivative samples aligned with the signal grid; entries past
// `defined1`/`defined2` do not exist (forward differences shorten the grid).
struct DerivativeView {
  std::vector<double> d1;
  std::vector<double> d2;
  std::size_t defined1 = 0;
  std::size_t defined2 = 0;
};

DerivativeView make_derivatives(const Signal& sig, const ExtremaMethod& method,
                                const Trace& trace) {
  DerivativeView view;
  if (method.kind == ExtremaMethod::Kind::Precomputed) {
    for (const std::string* col : {&method.first_column, &method.second_column}) {
      if (col->empty() || !trace.has_signal(*col)) {
        throw Error(ErrorCode::MissingDerivativeColumn,
                    "derivative column '" + *col + "' not present in trace");
      }
    }
    view.d1 = trace.signal(method.first_column).values();
    view.d2 = trace.signal(method.second_column).values();
    view.defined1 = view.d1.size();
    view.defined2 = view.d2.size();
  } else {
    Signal first = sig.finite_difference(1);
    Signal second = sig.finite_difference(2);
    view.d1 = first.values();
    view.d2 = second.values();
    view.defined1 = view.d1.size();
    view.defined2 = view.d2.size();
  }
  return view;
}

bool derivative_extremum(const DerivativeView& view, std::size_t i, ExtremumKind kind,
                         const EvalConfig& config) {
  if (i >= view.defined1 || i >= view.defined2) return false;
  if (std::fabs(view.d1[i]) > config.deriv_tol) return false;
  return kind == ExtremumKind::Min ? view.d2[i] > config.deriv_tol
                                   : view.d2[i] < -config.deriv_tol;
}

bool analytical_extremum(const Signal& sig, std::size_t x,
                         const std::vector<std::size_t>& window, ExtremumKind kind) {
  const double vx = sig.value_at_index(x);
  for (std::size_t i : window) {
    if (i == x) continue;
    const double v = sig.value_at_index(i);
    if (kind == ExtremumKind::Min ? vx > v : vx < v) return false;
  }
  return true;
}

bool local_extremum(const Signal& sig, double x, double lo, double hi, ExtremumKind kind,
                    const ExtremaMethod& method, const Trace& trace,
                    const EvalConfig& config) {
  if (x < lo || x > hi) {
    throw Error(ErrorCode::OutOfDomain, "x outside [lo, hi]");
  }
  const std::size_t xi = sig.index_of_time(x);
  if (xi == Signal::npos) {
    throw Error(ErrorCode::OutOfDomain, "x is not a sample point");
  }
  if (method.kind == ExtremaMethod::Kind::Analytical) {
    return analytical_extremum(sig, xi, grid_indices_in(sig, lo, hi), kind);
  }
  return derivative_extremum(make_derivatives(sig, method, trace), xi, kind, config);
}

// Keep the more extreme of two same-kind extrema; ties keep the earlier.
bool prefer(const Extremum& challenger, const Extremum& incumbent) {
  if (challenger.kind == ExtremumKind::Min) {
    return challenger.v < incumbent.v;
  }
  return challenger.v > incumbent.v;
}

void push_alternating(std::vector<Extremum>& seq, const Extremum& e) {
  if (!seq.empty() && seq.back().kind == e.kind) {
    if (prefer(e, seq.back())) seq.back() = e;
    return;
  }
  seq.push_back(e);
}

// Removes adjacent pairs whose value swing is within `prominence`, smallest
// swing first. Removing a pair keeps the remaining kinds alternating.
void apply_prominence(std::vector<Extremum>& seq, double prominence) {
  while (seq.size() >= 2) {
    std::size_t best = seq.size();
    double best_swing = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const double swing = std::fabs(seq[i].v - seq[i + 1].v);
      if (swing < best_swing) {
        best_swing = swing;
        best = i;
      }
    }
    if (best == seq.size() || best_swing > prominence) break;
    seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(best),
              seq.begin() + static_cast<std::ptrdiff_t>(best) + 2);
  }
}

std::vector<Extremum> analytical_scan(const Signal& sig,
                                      const std::vector<std::size_t>& window,
                                      const EvalConfig& config) {
  // Compress the window into runs of (approximately) equal value; a run is an
  // extremum iff both neighbouring runs lie strictly on the same side.
  struct Run {
    std::size_t first;
    double value;
  };
  std::vector<Run> runs;
  for (std::size_t i : window) {
    const double v = sig.value_at_index(i);
    if (runs.empty() || std::fabs(v - runs.back().value) > config.eq_tol) {
      runs.push_back({i, v});
    }
  }
  std::vector<Extremum> seq;
  for (std::size_t r = 1; r + 1 < runs.size(); ++r) {
    const double prev = runs[r - 1].value;
    const double cur = runs[r].value;
    const double next = runs[r + 1].value;
    ExtremumKind kind;
    if (prev > cur && next > cur) {
      kind = ExtremumKind::Min;
    } else if (prev < cur && next < cur) {
      kind = ExtremumKind::Max;
    } else {
      continue;
    }
    seq.push_back({kind, runs[r].first, sig.time_at(runs[r].first), cur});
  }
  return seq;
}

std::vector<Extremum> derivative_scan(const Signal& sig,
                                      const std::vector<std::size_t>& window,
                                      const ExtremaMethod& method, const Trace& trace,
                                      const EvalConfig& config) {
  const DerivativeView view = make_derivatives(sig, method, trace);
  std::vector<Extremum> seq;
  for (std::size_t i : window) {
    ExtremumKind kind;
    if (derivative_extremum(view, i, ExtremumKind::Min, config)) {
      kind = ExtremumKind::Min;
    } else if (derivative_extremum(view, i, ExtremumKind::Max, config)) {
      kind = ExtremumKind::Max;
    } else {
      continue;
    }
    push_alternating(seq, {kind, i, sig.time_at(i), sig.value_at_index(i)});
  }
  return seq;
}

}  // namespace

bool is_local_min(const Signal& sig, double x, double lo, double hi,
                  const ExtremaMethod& method, const Trace& trace,
                  const EvalConfig& config) {
  return local_extremum(sig, x, lo, hi, ExtremumKind::Min, method, trace, config);
}

bool is_local_max(const Signal& sig, double x, double lo, double hi,
                  const ExtremaMethod& method, const Trace& trace,
                  const EvalConfig& config) {
  return local_extremum(sig, x, lo, hi, ExtremumKind::Max, method, trace, config);
}

std::vector<Extremum> find_alternating_extrema(const Signal& sig, double lo, double hi,
                                               const ExtremaMethod& method,
                                               double prominence, const Trace& trace,
                                               const EvalConfig& config) {
  if (prominence < 0.0) {
    throw Error(ErrorCode::InvalidThreshold, "prominence must be >= 0");
  }
  const std::vector<std::size_t> window = grid_indices_in(sig, lo, hi);
  std::vector<Extremum> seq =
      method.kind == ExtremaMethod::Kind::Analytical
          ? analytical_scan(sig, window, config)
          : derivative_scan(sig, window, method, trace, config);
  apply_prominence(seq, prominence);
  return seq;
}

}  // namespace sigprop
