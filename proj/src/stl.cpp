#include "sigprop/stl.hpp"

#include <cmath>

namespace sigprop {

namespace {

StlPtr make(StlFormula f) { return std::make_shared<const StlFormula>(std::move(f)); }

void check_interval(double a, double b) {
  if (!(a >= 0.0) || !(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::PunctualInterval,
                "temporal interval must satisfy 0 <= a < b with finite bounds");
  }
}

// Grid indices with lo <= t_i <= hi (no domain masking: the oracle reads
// every sample). A small slack keeps interval endpoints computed in floating
// point from dropping the sample they name.
std::pair<std::size_t, std::size_t> index_range(const Trace& trace, double lo, double hi) {
  constexpr double slack = 1e-9;
  const auto& g = trace.grid();
  std::size_t first = std::lower_bound(g.begin(), g.end(), lo - slack) - g.begin();
  std::size_t last = std::upper_bound(g.begin(), g.end(), hi + slack) - g.begin();
  return {first, last};
}

bool eval_at(const StlFormula& f, const Trace& trace, std::size_t i);

bool eval_until(const StlFormula& f, const Trace& trace, std::size_t i) {
  const double t = trace.grid()[i];
  auto [first, last] = index_range(trace, t + f.a, t + f.b);
  for (std::size_t tp = first; tp < last; ++tp) {
    if (!eval_at(*f.rhs, trace, tp)) continue;
    bool all = true;
    for (std::size_t ts = i; ts <= tp; ++ts) {
      if (!eval_at(*f.lhs, trace, ts)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool eval_since(const StlFormula& f, const Trace& trace, std::size_t i) {
  // The interval is read as [t-b, t-a]; as printed it would be empty.
  const double t = trace.grid()[i];
  auto [first, last] = index_range(trace, t - f.b, t - f.a);
  for (std::size_t tp = first; tp < last; ++tp) {
    if (!eval_at(*f.rhs, trace, tp)) continue;
    bool all = true;
    for (std::size_t ts = tp; ts <= i; ++ts) {
      if (!eval_at(*f.lhs, trace, ts)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool eval_at(const StlFormula& f, const Trace& trace, std::size_t i) {
  switch (f.kind) {
    case StlFormula::Kind::Atom: {
      const Signal& sig = trace.signal(f.signal);
      return rel_op_eval(f.op, sig.value_at_index(i), f.c, 1e-9);
    }
    case StlFormula::Kind::Not:
      return !eval_at(*f.lhs, trace, i);
    case StlFormula::Kind::And:
      return eval_at(*f.lhs, trace, i) && eval_at(*f.rhs, trace, i);
    case StlFormula::Kind::Or:
      return eval_at(*f.lhs, trace, i) || eval_at(*f.rhs, trace, i);
    case StlFormula::Kind::Until:
      return eval_until(f, trace, i);
    case StlFormula::Kind::Since:
      return eval_since(f, trace, i);
    case StlFormula::Kind::Eventually: {
      const double t = trace.grid()[i];
      auto [first, last] = index_range(trace, t + f.a, t + f.b);
      for (std::size_t tp = first; tp < last; ++tp) {
        if (eval_at(*f.lhs, trace, tp)) return true;
      }
      return false;
    }
    case StlFormula::Kind::Globally: {
      const double t = trace.grid()[i];
      auto [first, last] = index_range(trace, t + f.a, t + f.b);
      for (std::size_t tp = first; tp < last; ++tp) {
        if (!eval_at(*f.lhs, trace, tp)) return false;
      }
      return true;
    }
    case StlFormula::Kind::Once: {
      const double t = trace.grid()[i];
      auto [first, last] = index_range(trace, t - f.b, t - f.a);
      for (std::size_t tp = first; tp < last; ++tp) {
        if (eval_at(*f.lhs, trace, tp)) return true;
      }
      return false;
    }
    case StlFormula::Kind::Historically: {
      const double t = trace.grid()[i];
      auto [first, last] = index_range(trace, t - f.b, t - f.a);
      for (std::size_t tp = first; tp < last; ++tp) {
        if (!eval_at(*f.lhs, trace, tp)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

StlPtr stl_atom(std::string signal, RelOp op, double c) {
  StlFormula f;
  f.kind = StlFormula::Kind::Atom;
  f.signal = std::move(signal);
  f.op = op;
  f.c = c;
  return make(std::move(f));
}

StlPtr stl_not(StlPtr operand) {
  StlFormula f;
  f.kind = StlFormula::Kind::Not;
  f.lhs = std::move(operand);
  return make(std::move(f));
}

StlPtr stl_and(StlPtr l, StlPtr r) {
  StlFormula f;
  f.kind = StlFormula::Kind::And;
  f.lhs = std::move(l);
  f.rhs = std::move(r);
  return make(std::move(f));
}

StlPtr stl_or(StlPtr l, StlPtr r) {
  StlFormula f;
  f.kind = StlFormula::Kind::Or;
  f.lhs = std::move(l);
  f.rhs = std::move(r);
  return make(std::move(f));
}

namespace {

StlPtr make_temporal(StlFormula::Kind kind, double a, double b, StlPtr l, StlPtr r) {
  check_interval(a, b);
  StlFormula f;
  f.kind = kind;
  f.a = a;
  f.b = b;
  f.lhs = std::move(l);
  f.rhs = std::move(r);
  return make(std::move(f));
}

}  // namespace

StlPtr stl_until(double a, double b, StlPtr l, StlPtr r) {
  return make_temporal(StlFormula::Kind::Until, a, b, std::move(l), std::move(r));
}
StlPtr stl_since(double a, double b, StlPtr l, StlPtr r) {
  return make_temporal(StlFormula::Kind::Since, a, b, std::move(l), std::move(r));
}
StlPtr stl_eventually(double a, double b, StlPtr f) {
  return make_temporal(StlFormula::Kind::Eventually, a, b, std::move(f), nullptr);
}
StlPtr stl_globally(double a, double b, StlPtr f) {
  return make_temporal(StlFormula::Kind::Globally, a, b, std::move(f), nullptr);
}
StlPtr stl_once(double a, double b, StlPtr f) {
  return make_temporal(StlFormula::Kind::Once, a, b, std::move(f), nullptr);
}
StlPtr stl_historically(double a, double b, StlPtr f) {
  return make_temporal(StlFormula::Kind::Historically, a, b, std::move(f), nullptr);
}

StlPtr stl_temporal_mirror(const StlPtr& f) {
  if (!f) return nullptr;
  StlFormula out = *f;
  out.lhs = stl_temporal_mirror(f->lhs);
  out.rhs = stl_temporal_mirror(f->rhs);
  switch (f->kind) {
    case StlFormula::Kind::Until: out.kind = StlFormula::Kind::Since; break;
    case StlFormula::Kind::Since: out.kind = StlFormula::Kind::Until; break;
    case StlFormula::Kind::Eventually: out.kind = StlFormula::Kind::Once; break;
    case StlFormula::Kind::Once: out.kind = StlFormula::Kind::Eventually; break;
    case StlFormula::Kind::Globally: out.kind = StlFormula::Kind::Historically; break;
    case StlFormula::Kind::Historically: out.kind = StlFormula::Kind::Globally; break;
    default: break;
  }
  return make(std::move(out));
}

bool eval_stl(const StlPtr& f, const Trace& trace, double t) {
  const auto& g = trace.grid();
  auto it = std::lower_bound(g.begin(), g.end(), t - 1e-12);
  if (it == g.end() || std::fabs(*it - t) > 1e-12) {
    throw Error(ErrorCode::OutOfDomain, "t is not a grid point");
  }
  return eval_at(*f, trace, static_cast<std::size_t>(it - g.begin()));
}

bool stl_satisfies(const StlPtr& f, const Trace& trace) {
  return eval_stl(f, trace, trace.grid().front());
}

}  // namespace sigprop
