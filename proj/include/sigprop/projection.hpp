#pragma once

#include <vector>

#include "sigprop/ast.hpp"
#include "sigprop/trace.hpp"

namespace sigprop {

/// Boolean-valued signal over the trace grid, derived from a sub-property.
/// The bit at the final sample is always false: it lies outside [0, |s|).
struct BooleanProjection {
  OccurrenceKind kind = OccurrenceKind::State;
  std::vector<char> bits;

  std::size_t size() const { return bits.size(); }
  bool at(std::size_t i) const { return bits[i] != 0; }
};

/// Evaluates the event or state boolean projection of a projectable
/// sub-property: data assertion, spike, oscillation, functional relationship,
/// or (event-kind only) a nested order relationship.
BooleanProjection project(const SubProperty& sub, const Trace& trace,
                          const EvalConfig& config);

/// Grid indices i >= 1 with bits[i] and not bits[i-1].
std::vector<std::size_t> rising_edges(const BooleanProjection& proj);

/// Indices at which the projection "occurs": rising edges for event-kind
/// projections, every true sample for state-kind ones.
std::vector<std::size_t> occurrence_indices(const BooleanProjection& proj);

/// Raw truth bits of `predicate` over the trace grid (no domain masking);
/// indices beyond a derivative-shortened expression are false.
std::vector<char> predicate_bits(const Predicate& predicate, const Trace& trace,
                                 const EvalConfig& config);

}  // namespace sigprop
