#include "sigprop/typecheck.hpp"

#include "sigprop/parser.hpp"
#include "sigprop/transform.hpp"

namespace sigprop {

namespace {

void check_expr(const TransformExpr& expr, const std::set<std::string>& signals) {
  std::vector<std::string> refs;
  collect_signal_refs(expr, refs);
  for (const auto& name : refs) {
    if (name != "time" && !signals.count(name)) {
      throw Error(ErrorCode::UnknownSignal, "unknown signal '" + name + "'");
    }
  }
}

void check_signal(const std::string& name, const std::set<std::string>& signals) {
  if (name != "time" && !signals.count(name)) {
    throw Error(ErrorCode::UnknownSignal, "unknown signal '" + name + "'");
  }
}

void check_method(const ExtremaMethod& method, const std::set<std::string>& signals) {
  if (method.kind != ExtremaMethod::Kind::Precomputed) return;
  for (const std::string* col : {&method.first_column, &method.second_column}) {
    if (!signals.count(*col)) {
      throw Error(ErrorCode::MissingDerivativeColumn,
                  "derivative column '" + *col + "' not present in trace");
    }
  }
}

void check_constraint_threshold(const char* what, const std::optional<FeatureConstraint>& c,
                                bool must_be_positive) {
  if (!c) return;
  if (must_be_positive && !(c->threshold > 0.0)) {
    throw Error(ErrorCode::InvalidThreshold,
                std::string(what) + " threshold must be positive");
  }
}

void check_window(const Interval& window) {
  if (!(window.lo < window.hi)) {
    throw Error(ErrorCode::InvalidThreshold, "observation window must satisfy lo < hi");
  }
  if (window.lo < 0.0) {
    throw Error(ErrorCode::InvalidThreshold, "observation window must be non-negative");
  }
}

void check_body(const PropertyBody& body, std::set<std::string> signals);

void check_sub(const SubProperty& sub, const std::set<std::string>& signals,
               bool require_event) {
  if (require_event && sub.kind != OccurrenceKind::Event) {
    throw Error(ErrorCode::NotProjectable, "this position requires an event occurrence");
  }
  const PropertyBody& body = *sub.body;
  const bool projectable = std::holds_alternative<DataAssertion>(body.node) ||
                           std::holds_alternative<SpikeProperty>(body.node) ||
                           std::holds_alternative<OscillationProperty>(body.node) ||
                           std::holds_alternative<FunctionalProperty>(body.node) ||
                           std::holds_alternative<OrderProperty>(body.node);
  if (!projectable) {
    throw Error(ErrorCode::NotProjectable, "sub-property type has no boolean projection");
  }
  if (std::holds_alternative<OrderProperty>(body.node) &&
      sub.kind != OccurrenceKind::Event) {
    throw Error(ErrorCode::NotProjectable,
                "a nested order relationship projects as an event only");
  }
  check_body(body, signals);
}

void check_body(const PropertyBody& body, std::set<std::string> signals) {
  if (const auto* da = std::get_if<DataAssertion>(&body.node)) {
    check_expr(da->predicate.lhs, signals);
    check_expr(da->predicate.rhs, signals);
    for (const Interval& iv : da->intervals) {
      if (iv.lo < 0.0) {
        throw Error(ErrorCode::InvalidThreshold, "assertion intervals must be non-negative");
      }
      if (iv.lo > iv.hi) {
        throw Error(ErrorCode::InvalidThreshold, "assertion interval bounds out of order");
      }
    }
  } else if (const auto* sp = std::get_if<SpikeProperty>(&body.node)) {
    check_signal(sp->spec.signal, signals);
    check_method(sp->spec.method, signals);
    check_window(sp->spec.window);
    if (!sp->spec.amplitude && !sp->spec.slope1 && !sp->spec.slope2 && !sp->spec.width) {
      throw Error(ErrorCode::InvalidThreshold,
                  "a spike property needs at least one feature constraint");
    }
  } else if (const auto* sp2 = std::get_if<SpikeTwoParamProperty>(&body.node)) {
    check_signal(sp2->spec.signal, signals);
    if (!sp2->spec.derivative_column.empty()) {
      if (!signals.count(sp2->spec.derivative_column)) {
        throw Error(ErrorCode::MissingDerivativeColumn,
                    "derivative column '" + sp2->spec.derivative_column +
                        "' not present in trace");
      }
    }
    if (!(sp2->spec.m > 0.0) || !(sp2->spec.w > 0.0)) {
      throw Error(ErrorCode::InvalidThreshold, "spike parameters m and w must be positive");
    }
  } else if (const auto* osc = std::get_if<OscillationProperty>(&body.node)) {
    check_signal(osc->spec.signal, signals);
    check_method(osc->spec.method, signals);
    check_window(osc->spec.window);
    if (!osc->spec.period && !osc->spec.amplitude) {
      throw Error(ErrorCode::InvalidThreshold,
                  "an oscillation property needs a period or amplitude constraint");
    }
    check_constraint_threshold("period", osc->spec.period, true);
    if (osc->spec.prominence && *osc->spec.prominence < 0.0) {
      throw Error(ErrorCode::InvalidThreshold, "prominence must be >= 0");
    }
  } else if (const auto* fn = std::get_if<FunctionalProperty>(&body.node)) {
    check_expr(fn->expr, signals);
    signals.insert(fn->target_name);
    check_body(*fn->wrapped, signals);
  } else if (const auto* ord = std::get_if<OrderProperty>(&body.node)) {
    check_sub(ord->cause, signals, false);
    check_sub(ord->effect, signals, false);
    if (ord->bound && ord->bound->n < 0.0) {
      throw Error(ErrorCode::InvalidThreshold, "distance bound must be >= 0");
    }
  } else if (const auto* rf = std::get_if<RiseFallProperty>(&body.node)) {
    check_signal(rf->signal, signals);
    check_expr(rf->target.lhs, signals);
    check_expr(rf->target.rhs, signals);
    check_sub(rf->trigger, signals, true);
    if (!(rf->rt > 0.0)) {
      throw Error(ErrorCode::InvalidThreshold, "RT must be positive");
    }
  } else if (const auto* os = std::get_if<OvershootProperty>(&body.node)) {
    check_signal(os->signal, signals);
    check_expr(os->target.lhs, signals);
    check_expr(os->target.rhs, signals);
    check_sub(os->trigger, signals, true);
    if (!(os->oi > 0.0)) {
      throw Error(ErrorCode::InvalidThreshold, "OI must be positive");
    }
    if (os->relative && os->target.rhs.op != TransformExpr::Op::Constant &&
        os->target.lhs.op != TransformExpr::Op::Constant) {
      throw Error(ErrorCode::InvalidThreshold,
                  "a relative bound needs a target predicate of the shape SIG op CONST");
    }
  }
}

// ---------------------------------------------------------------------------
// Signal binding.

using Renames = std::vector<std::pair<std::string, std::string>>;

std::string rename_of(const std::string& name, const Renames& renames) {
  for (const auto& [from, to] : renames) {
    if (from == name) return to;
  }
  return name;
}

TransformExpr rebind_expr(const TransformExpr& e, const Renames& renames) {
  TransformExpr out = e;
  if (out.op == TransformExpr::Op::SignalRef) out.signal = rename_of(out.signal, renames);
  for (auto& child : out.children) child = rebind_expr(child, renames);
  return out;
}

Predicate rebind_pred(const Predicate& p, const Renames& renames) {
  return {rebind_expr(p.lhs, renames), p.op, rebind_expr(p.rhs, renames)};
}

PropertyBodyPtr rebind_body(const PropertyBodyPtr& body, const Renames& renames);

SubProperty rebind_sub(const SubProperty& sub, const Renames& renames) {
  SubProperty out = sub;
  out.body = rebind_body(sub.body, renames);
  return out;
}

PropertyBodyPtr rebind_body(const PropertyBodyPtr& body, const Renames& renames) {
  PropertyBody out = *body;
  if (auto* da = std::get_if<DataAssertion>(&out.node)) {
    da->predicate = rebind_pred(da->predicate, renames);
  } else if (auto* sp = std::get_if<SpikeProperty>(&out.node)) {
    sp->spec.signal = rename_of(sp->spec.signal, renames);
    if (sp->spec.method.kind == ExtremaMethod::Kind::Precomputed) {
      sp->spec.method.first_column = rename_of(sp->spec.method.first_column, renames);
      sp->spec.method.second_column = rename_of(sp->spec.method.second_column, renames);
    }
  } else if (auto* sp2 = std::get_if<SpikeTwoParamProperty>(&out.node)) {
    sp2->spec.signal = rename_of(sp2->spec.signal, renames);
    if (!sp2->spec.derivative_column.empty()) {
      sp2->spec.derivative_column = rename_of(sp2->spec.derivative_column, renames);
    }
  } else if (auto* osc = std::get_if<OscillationProperty>(&out.node)) {
    osc->spec.signal = rename_of(osc->spec.signal, renames);
    if (osc->spec.method.kind == ExtremaMethod::Kind::Precomputed) {
      osc->spec.method.first_column = rename_of(osc->spec.method.first_column, renames);
      osc->spec.method.second_column = rename_of(osc->spec.method.second_column, renames);
    }
  } else if (auto* fn = std::get_if<FunctionalProperty>(&out.node)) {
    fn->expr = rebind_expr(fn->expr, renames);
    // The let-bound name shadows any binding of the same name inside.
    Renames inner;
    for (const auto& r : renames) {
      if (r.first != fn->target_name) inner.push_back(r);
    }
    fn->wrapped = rebind_body(fn->wrapped, inner);
  } else if (auto* ord = std::get_if<OrderProperty>(&out.node)) {
    ord->cause = rebind_sub(ord->cause, renames);
    ord->effect = rebind_sub(ord->effect, renames);
  } else if (auto* rf = std::get_if<RiseFallProperty>(&out.node)) {
    rf->signal = rename_of(rf->signal, renames);
    rf->target = rebind_pred(rf->target, renames);
    rf->trigger = rebind_sub(rf->trigger, renames);
  } else if (auto* os = std::get_if<OvershootProperty>(&out.node)) {
    os->signal = rename_of(os->signal, renames);
    os->target = rebind_pred(os->target, renames);
    os->trigger = rebind_sub(os->trigger, renames);
  }
  return make_body(std::move(out));
}

}  // namespace

void typecheck(const PropertyAst& prop, const std::set<std::string>& signals) {
  try {
    check_body(*prop.body, signals);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.code(), "property '" + prop.name + "': " + e.what(), prop.span);
  }
}

void typecheck(const std::vector<PropertyAst>& props, const std::set<std::string>& signals) {
  for (const auto& p : props) typecheck(p, signals);
}

PropertyAst bind_signals(const PropertyAst& prop,
                         const std::vector<std::pair<std::string, std::string>>& renames) {
  PropertyAst out = prop;
  out.body = rebind_body(prop.body, renames);
  return out;
}

}  // namespace sigprop
