#pragma once

#include "sigprop/ast.hpp"
#include "sigprop/trace.hpp"
#include "sigprop/verdict.hpp"

namespace sigprop {

/// Features of the triple (vp1, pp, vp2); values read on the grid.
SpikeFeatures spike_features(const Extremum& vp1, const Extremum& pp,
                             const Extremum& vp2, SpikeSpec::Psi psi);

bool spike_constraints_hold(const SpikeFeatures& f, const SpikeSpec& spec,
                            const EvalConfig& config);

/// Checks for a spike whose features satisfy every present constraint.
/// Candidate triples are ordered (min,max,min) combinations (dual for
/// downward spikes) drawn from the alternating extrema sequence of the
/// observation window; the witness is the first satisfying triple by
/// (vp1, pp) time order.
Verdict detect_spike(const Signal& sig, const SpikeSpec& spec, const Trace& trace,
                     const EvalConfig& config);

/// Enumerates the candidate triples together with their verdict per triple;
/// used by event projections to locate every satisfying spike.
std::vector<SpikeFeatures> satisfying_spikes(const Signal& sig, const SpikeSpec& spec,
                                             const Trace& trace, const EvalConfig& config);

/// Two-parameter characterization: some instant with derivative above m is
/// followed within w by an instant with derivative below -m.
Verdict check_spike_two_param(const Signal& sig, const SpikeTwoParamSpec& spec,
                              const Trace& trace, const EvalConfig& config);

}  // namespace sigprop
