#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sigprop/config.hpp"
#include "sigprop/extrema.hpp"

namespace sigprop {

/// Position of a construct in a property file, for diagnostics.
struct SourceSpan {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::size_t offset = 0;  // byte offset
  std::size_t length = 0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Pointwise expression over signal references and constants. Derivative
/// nodes shorten the grid of the resulting signal.
struct TransformExpr {
  enum class Op { Constant, SignalRef, Add, Sub, Mul, Div, Abs, Negate, Derivative };

  Op op = Op::Constant;
  double constant = 0.0;
  std::string signal;  // SignalRef
  int order = 1;       // Derivative
  std::vector<TransformExpr> children;

  static TransformExpr make_constant(double c);
  static TransformExpr make_signal(std::string name);
  static TransformExpr unary(Op op, TransformExpr child, int order = 1);
  static TransformExpr binary(Op op, TransformExpr lhs, TransformExpr rhs);
};

/// lhs ⋈ rhs over pointwise expressions.
struct Predicate {
  TransformExpr lhs;
  RelOp op = RelOp::Lt;
  TransformExpr rhs;
};

struct FeatureConstraint {
  RelOp op;
  double threshold;
};

struct SpikeSpec {
  enum class Psi { Min, Max, Mean };
  enum class Polarity { Upward, Downward };

  std::string signal;
  Interval window;
  Psi psi = Psi::Min;
  Polarity polarity = Polarity::Upward;
  std::optional<FeatureConstraint> amplitude;  // a
  std::optional<FeatureConstraint> slope1;     // sp1
  std::optional<FeatureConstraint> slope2;     // sp2
  std::optional<FeatureConstraint> width;      // w
  ExtremaMethod method = ExtremaMethod::analytical();
};

struct SpikeTwoParamSpec {
  std::string signal;
  double m = 0.0;
  double w = 0.0;
  std::string derivative_column;  // empty: use forward finite differences
};

struct OscillationSpec {
  enum class AmplitudeMode { Reference, PeakToPeak, AvgPeakToPeak };
  enum class PeriodMode { PerCycle, Average };
  enum class Damping { None, Damped, Driven, DampedTrend, DrivenTrend };

  std::string signal;
  Interval window;
  std::optional<FeatureConstraint> period;
  std::optional<FeatureConstraint> amplitude;
  AmplitudeMode amplitude_mode = AmplitudeMode::PeakToPeak;
  double reference = 0.0;  // AmplitudeMode::Reference only
  PeriodMode period_mode = PeriodMode::PerCycle;
  Damping damping = Damping::None;
  std::optional<double> prominence;  // overrides the config default
  ExtremaMethod method = ExtremaMethod::analytical();
};

struct DistanceBound {
  RelOp op;
  double n;
};

enum class OccurrenceKind { Event, State };

/// Instant a spike event projection marks for each satisfying triple.
enum class SpikeAnchor { Vp1, Peak, Vp2 };
/// Extrema an oscillation event projection marks.
enum class OscillationAnchor { Minima, Maxima, All };

struct PropertyBody;
using PropertyBodyPtr = std::shared_ptr<const PropertyBody>;

/// A projectable sub-property plus its occurrence interpretation.
struct SubProperty {
  OccurrenceKind kind = OccurrenceKind::Event;
  SpikeAnchor spike_anchor = SpikeAnchor::Peak;
  OscillationAnchor osc_anchor = OscillationAnchor::Maxima;
  PropertyBodyPtr body;
};

struct DataAssertion {
  Predicate predicate;
  std::vector<Interval> intervals;  // empty: untimed (whole domain)
};

struct SpikeProperty {
  SpikeSpec spec;
};

struct SpikeTwoParamProperty {
  SpikeTwoParamSpec spec;
};

struct OscillationProperty {
  OscillationSpec spec;
};

struct FunctionalProperty {
  std::string target_name;
  TransformExpr expr;
  PropertyBodyPtr wrapped;
};

struct OrderProperty {
  enum class Pattern { Response, Precedence };
  Pattern pattern;
  SubProperty cause;
  SubProperty effect;
  std::optional<DistanceBound> bound;
};

struct RiseFallProperty {
  enum class Direction { Rise, Fall };
  Direction direction = Direction::Rise;
  std::string signal;
  Predicate target;      // "reaches the target value", event interpretation
  SubProperty trigger;   // event-kind
  double rt = 0.0;
  bool monotonic = false;
};

struct OvershootProperty {
  enum class Direction { Overshoot, Undershoot };
  Direction direction = Direction::Overshoot;
  std::string signal;
  Predicate target;
  SubProperty trigger;
  double oi = 0.0;
  double bound_value = 0.0;  // s_max / s_min, or the delta in relative mode
  bool relative = false;     // bound relative to the target threshold
  bool monotonic = false;
};

struct PropertyBody {
  std::variant<DataAssertion, SpikeProperty, SpikeTwoParamProperty, OscillationProperty,
               FunctionalProperty, OrderProperty, RiseFallProperty, OvershootProperty>
      node;
};

struct PropertyAst {
  std::string name;
  SourceSpan span;
  PropertyBodyPtr body;
};

PropertyBodyPtr make_body(PropertyBody body);

}  // namespace sigprop
