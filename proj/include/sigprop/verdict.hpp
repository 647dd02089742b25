#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sigprop/config.hpp"
#include "sigprop/extrema.hpp"

namespace sigprop {

enum class Status { Holds, Violated, Inconclusive };

const char* status_text(Status s);

/// Features of one valley-peak-valley triple. For downward spikes the roles
/// of peak and valleys are swapped but the arithmetic is unchanged.
struct SpikeFeatures {
  double vp1 = 0.0, pp = 0.0, vp2 = 0.0;  // times
  double a1 = 0.0, a2 = 0.0, a = 0.0;     // half amplitudes, psi-combined
  double sp1 = 0.0, sp2 = 0.0;            // half slopes
  double w = 0.0, w1 = 0.0, w2 = 0.0;     // widths
};

struct OscillationStats {
  std::vector<Extremum> extrema;
  long osc_n = 0;          // complete oscillations: floor((M-1)/2)
  double avg_amp_pp = 0.0;
  double avg_period = 0.0;
};

/// A time point at which an assertion failed (or, for a holding existential
/// check, the witnessing instant).
struct ViolationPoint {
  double t = 0.0;
  double value = 0.0;
  std::size_t index = 0;  // grid index of t
};

/// A cause occurrence with no matching effect.
struct UnmatchedCause {
  double t = 0.0;
  bool window_truncated = false;
  std::size_t index = 0;  // grid index of t
};

using Witness =
    std::variant<std::monostate, ViolationPoint, SpikeFeatures, OscillationStats,
                 UnmatchedCause>;

struct Verdict {
  Status status = Status::Holds;
  Witness witness;
  std::string reason;     // human-readable cause for violated/inconclusive
  std::string property;   // filled in by the engine
  EvalConfig config;      // evaluation snapshot

  bool holds() const { return status == Status::Holds; }
};

Verdict make_holds();
Verdict make_violated(Witness witness, std::string reason);
Verdict make_inconclusive(Witness witness, std::string reason);

}  // namespace sigprop
