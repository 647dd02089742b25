#include "sigprop/transform.hpp"

#include <cmath>

namespace sigprop {

TransformExpr TransformExpr::make_constant(double c) {
  TransformExpr e;
  e.op = Op::Constant;
  e.constant = c;
  return e;
}

TransformExpr TransformExpr::make_signal(std::string name) {
  TransformExpr e;
  e.op = Op::SignalRef;
  e.signal = std::move(name);
  return e;
}

TransformExpr TransformExpr::unary(Op op, TransformExpr child, int order) {
  TransformExpr e;
  e.op = op;
  e.order = order;
  e.children.push_back(std::move(child));
  return e;
}

TransformExpr TransformExpr::binary(Op op, TransformExpr lhs, TransformExpr rhs) {
  TransformExpr e;
  e.op = op;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

PropertyBodyPtr make_body(PropertyBody body) {
  return std::make_shared<const PropertyBody>(std::move(body));
}

namespace {

// Values aligned with a prefix of the trace grid.
struct Column {
  std::vector<double> values;
};

Column eval_expr(const TransformExpr& expr, const Trace& trace, const EvalConfig& config) {
  switch (expr.op) {
    case TransformExpr::Op::Constant: {
      return {std::vector<double>(trace.size(), expr.constant)};
    }
    case TransformExpr::Op::SignalRef: {
      return {trace.signal(expr.signal).values()};
    }
    case TransformExpr::Op::Abs:
    case TransformExpr::Op::Negate: {
      Column c = eval_expr(expr.children[0], trace, config);
      for (double& v : c.values) {
        v = expr.op == TransformExpr::Op::Abs ? std::fabs(v) : -v;
      }
      return c;
    }
    case TransformExpr::Op::Derivative: {
      Column c = eval_expr(expr.children[0], trace, config);
      const auto& grid = trace.grid();
      for (int o = 0; o < expr.order; ++o) {
        if (c.values.size() < 2) {
          throw Error(ErrorCode::TooFewSamples, "derivative of a 1-sample expression");
        }
        std::vector<double> d(c.values.size() - 1);
        for (std::size_t i = 0; i + 1 < c.values.size(); ++i) {
          d[i] = (c.values[i + 1] - c.values[i]) / (grid[i + 1] - grid[i]);
        }
        c.values = std::move(d);
      }
      return c;
    }
    default: {
      Column lhs = eval_expr(expr.children[0], trace, config);
      Column rhs = eval_expr(expr.children[1], trace, config);
      const std::size_t n = std::min(lhs.values.size(), rhs.values.size());
      lhs.values.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double r = rhs.values[i];
        switch (expr.op) {
          case TransformExpr::Op::Add: lhs.values[i] += r; break;
          case TransformExpr::Op::Sub: lhs.values[i] -= r; break;
          case TransformExpr::Op::Mul: lhs.values[i] *= r; break;
          case TransformExpr::Op::Div:
            if (std::fabs(r) <= config.eq_tol) {
              throw Error(ErrorCode::DivisionByZero,
                          "denominator is zero at t=" + std::to_string(trace.grid()[i]));
            }
            lhs.values[i] /= r;
            break;
          default: break;
        }
      }
      return lhs;
    }
  }
}

}  // namespace

Signal apply_transform(const TransformExpr& expr, const Trace& trace,
                       const EvalConfig& config, const std::string& target_name) {
  Column c = eval_expr(expr, trace, config);
  if (c.values.size() < 2) {
    throw Error(ErrorCode::TooFewSamples, "transform result has fewer than 2 samples");
  }
  std::vector<double> times(trace.grid().begin(),
                            trace.grid().begin() + static_cast<std::ptrdiff_t>(c.values.size()));
  return Signal(target_name, std::move(times), std::move(c.values));
}

Trace extend_trace(const Trace& trace, const std::string& target_name,
                   const TransformExpr& expr, const EvalConfig& config) {
  Signal target = apply_transform(expr, trace, config, target_name);
  const std::size_t n = target.size();
  Trace out(target.times());
  for (const auto& name : trace.signal_names()) {
    if (name == target_name) continue;  // the let-binding shadows the column
    const auto& values = trace.signal(name).values();
    out.add_signal(name, std::vector<double>(values.begin(),
                                             values.begin() + static_cast<std::ptrdiff_t>(n)));
  }
  out.add_signal(target_name, target.values());
  out.source_path = trace.source_path;
  return out;
}

void collect_signal_refs(const TransformExpr& expr, std::vector<std::string>& out) {
  if (expr.op == TransformExpr::Op::SignalRef) out.push_back(expr.signal);
  for (const auto& child : expr.children) collect_signal_refs(child, out);
}

}  // namespace sigprop
