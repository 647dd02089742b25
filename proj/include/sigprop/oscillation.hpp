#pragma once

#include "sigprop/ast.hpp"
#include "sigprop/trace.hpp"
#include "sigprop/verdict.hpp"

namespace sigprop {

enum class DampingClass { Damped, Driven, Neither, Both };

const char* damping_class_text(DampingClass c);

/// Aggregate features over an alternating extrema sequence: average
/// peak-to-peak amplitude over adjacent pairs, average period over pairs of
/// same-kind extrema, and the number of complete oscillations.
OscillationStats oscillation_stats(const std::vector<Extremum>& extrema);

/// Damped iff consecutive peak-to-peak amplitudes are non-increasing, driven
/// iff non-decreasing, both iff all equal (within eq_tol).
DampingClass classify_damping(const std::vector<Extremum>& extrema,
                              const EvalConfig& config);

/// Statistical-trend variant: sign of the least-squares slope of the
/// consecutive peak-to-peak amplitudes.
DampingClass classify_damping_trend(const std::vector<Extremum>& extrema,
                                    const EvalConfig& config);

/// Requires at least one complete oscillation in the window and checks the
/// period/amplitude constraints per cycle or against the aggregate stats,
/// plus the optional damping classification.
Verdict check_oscillation(const Signal& sig, const OscillationSpec& spec,
                          const Trace& trace, const EvalConfig& config);

}  // namespace sigprop
