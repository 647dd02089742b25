#pragma once

#include <string>
#include <vector>

#include "sigprop/config.hpp"
#include "sigprop/trace.hpp"

namespace sigprop {

/// How local extrema are identified:
///   Punctual:    forward finite differences of the signal itself.
///   Analytical:  value comparison against every point of the window.
///   Precomputed: first/second derivative columns supplied in the trace.
struct ExtremaMethod {
  enum class Kind { Punctual, Analytical, Precomputed };
  Kind kind = Kind::Analytical;
  std::string first_column;   // Precomputed only
  std::string second_column;  // Precomputed only

  static ExtremaMethod analytical() { return {}; }
  static ExtremaMethod punctual() { return {Kind::Punctual, "", ""}; }
  static ExtremaMethod precomputed(std::string first, std::string second) {
    return {Kind::Precomputed, std::move(first), std::move(second)};
  }

  bool operator==(const ExtremaMethod&) const = default;
};

enum class ExtremumKind { Min, Max };

struct Extremum {
  ExtremumKind kind;
  std::size_t index;  // grid index
  double t;
  double v;
};

/// True iff grid point x is a local minimum of sig over [lo, hi] under the
/// chosen definition. Analytical ties are allowed; derivative-based methods
/// test |s'| <= deriv_tol with a strict second-derivative sign.
bool is_local_min(const Signal& sig, double x, double lo, double hi,
                  const ExtremaMethod& method, const Trace& trace,
                  const EvalConfig& config);
bool is_local_max(const Signal& sig, double x, double lo, double hi,
                  const ExtremaMethod& method, const Trace& trace,
                  const EvalConfig& config);

/// Maximal time-ordered sequence of interior extrema in [lo, hi], strictly
/// alternating in kind, adjacent values differing by more than `prominence`.
/// A flat extremal run is represented by its earliest grid point. Boundary
/// runs (touching the window or the end of the domain) are not extrema.
std::vector<Extremum> find_alternating_extrema(const Signal& sig, double lo, double hi,
                                               const ExtremaMethod& method,
                                               double prominence, const Trace& trace,
                                               const EvalConfig& config);

}  // namespace sigprop
