#pragma once

#include <cmath>
#include <cstddef>
#include <string>

namespace sigprop {

/// Policy for obligations whose matching window is cut off by the end of the
/// trace: report them as inconclusive (default) or treat them as violations.
enum class EndPolicy { Inconclusive, Strict };

enum class InterpolationMode { Grid, Linear };

/// Evaluation configuration shared by every checker. A snapshot of this
/// struct is embedded in each report so results stay reproducible.
struct EvalConfig {
  double eq_tol = 1e-9;      // |x-y| <= eq_tol means "equal"
  double deriv_tol = 1e-6;   // |s'| <= deriv_tol means "derivative is zero"
  double prominence = 0.0;   // minimum value swing between adjacent extrema
  EndPolicy end_policy = EndPolicy::Inconclusive;
  InterpolationMode interp = InterpolationMode::Grid;
  std::size_t threads = 1;   // property-level parallelism

  bool approx_eq(double x, double y) const { return std::fabs(x - y) <= eq_tol; }
};

/// Relational operators shared by the DSL, the checkers and the STL oracle.
enum class RelOp { Lt, Le, Eq, Ge, Gt, Ne };

const char* rel_op_text(RelOp op);
bool rel_op_eval(RelOp op, double lhs, double rhs, double eq_tol);

/// Shortest decimal form that round-trips through double.
std::string format_number(double v);

}  // namespace sigprop
