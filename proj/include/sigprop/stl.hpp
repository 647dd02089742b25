#pragma once

#include <memory>
#include <string>

#include "sigprop/trace.hpp"

namespace sigprop {

struct StlFormula;
using StlPtr = std::shared_ptr<const StlFormula>;

/// STL with bounded future and past operators. Derived operators are the
/// usual expansions: F = true U phi, G = !F!phi, P = true S phi, H = !P!phi.
/// Intervals must satisfy 0 <= a < b (punctual intervals are rejected).
struct StlFormula {
  enum class Kind {
    Atom,         // signal op c
    Not,
    And,
    Or,
    Until,
    Since,
    Eventually,
    Globally,
    Once,
    Historically,
  };

  Kind kind = Kind::Atom;
  std::string signal;
  RelOp op = RelOp::Lt;
  double c = 0.0;
  double a = 0.0;  // interval lower bound
  double b = 0.0;  // interval upper bound
  StlPtr lhs;      // unary operand, or left operand of Until/Since
  StlPtr rhs;
};

StlPtr stl_atom(std::string signal, RelOp op, double c);
StlPtr stl_not(StlPtr f);
StlPtr stl_and(StlPtr l, StlPtr r);
StlPtr stl_or(StlPtr l, StlPtr r);
StlPtr stl_until(double a, double b, StlPtr l, StlPtr r);
StlPtr stl_since(double a, double b, StlPtr l, StlPtr r);
StlPtr stl_eventually(double a, double b, StlPtr f);
StlPtr stl_globally(double a, double b, StlPtr f);
StlPtr stl_once(double a, double b, StlPtr f);
StlPtr stl_historically(double a, double b, StlPtr f);

/// Swaps every future operator with its past mirror (U<->S, F<->P, G<->H);
/// used by the time-reversal duality checks.
StlPtr stl_temporal_mirror(const StlPtr& f);

/// Evaluates the formula at grid time t. Quantifiers range over the grid
/// points inside the (closed) interval; the oracle treats every sample as
/// defined. The Until clause requires the left operand on the closed
/// interval [t, t'], exactly as the semantics is printed.
bool eval_stl(const StlPtr& f, const Trace& trace, double t);

/// Trace satisfaction: evaluation at the first sample.
bool stl_satisfies(const StlPtr& f, const Trace& trace);

}  // namespace sigprop
