#include "sigprop/parser.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

namespace sigprop {

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double number = 0.0;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_ws();
    current_ = Token{};
    current_.span = here(1);
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        bump();
      }
      current_.kind = Tok::Ident;
      current_.text = text_.substr(start, pos_ - start);
      current_.span.length = pos_ - start;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
              text_[pos_] == 'e' || text_[pos_] == 'E' ||
              ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
               (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
        bump();
      }
      const std::string num = text_.substr(start, pos_ - start);
      char* end = nullptr;
      const double v = std::strtod(num.c_str(), &end);
      if (end != num.c_str() + num.size() || !std::isfinite(v)) {
        throw ParseError(ErrorCode::SyntaxError, "malformed number '" + num + "'",
                         current_.span);
      }
      current_.kind = Tok::Number;
      current_.text = num;
      current_.number = v;
      current_.span.length = pos_ - start;
      return;
    }
    // Punctuation, longest match first.
    for (const char* p : {"<=", ">=", "!="}) {
      if (text_.compare(pos_, 2, p) == 0) {
        current_.kind = Tok::Punct;
        current_.text = p;
        current_.span.length = 2;
        bump();
        bump();
        return;
      }
    }
    static const std::string singles = ":;,[](){}=+-*/<>";
    if (singles.find(c) != std::string::npos) {
      current_.kind = Tok::Punct;
      current_.text = std::string(1, c);
      current_.span.length = 1;
      bump();
      return;
    }
    throw ParseError(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'",
                     here(1));
  }

  void skip_ws() {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        bump();
      }
      if (pos_ < text_.size() && text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
        continue;
      }
      return;
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  SourceSpan here(std::size_t length) const { return {line_, column_, pos_, length}; }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  std::vector<PropertyAst> parse_file() {
    std::vector<PropertyAst> props;
    std::set<std::string> names;
    while (lex_.peek().kind != Tok::End) {
      PropertyAst prop = parse_property();
      if (!names.insert(prop.name).second) {
        throw ParseError(ErrorCode::DuplicatePropertyName,
                         "property '" + prop.name + "' is declared twice", prop.span);
      }
      props.push_back(std::move(prop));
    }
    return props;
  }

 private:
  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(ErrorCode::SyntaxError, message, lex_.peek().span);
  }

  Token expect_punct(const std::string& p) {
    if (lex_.peek().kind != Tok::Punct || lex_.peek().text != p) {
      fail("expected '" + p + "', got '" + lex_.peek().text + "'");
    }
    return lex_.take();
  }

  Token expect_keyword(const std::string& kw) {
    if (!at_keyword(kw)) fail("expected '" + kw + "', got '" + lex_.peek().text + "'");
    return lex_.take();
  }

  bool at_keyword(const std::string& kw) const {
    return lex_.peek().kind == Tok::Ident && lex_.peek().text == kw;
  }

  bool eat_keyword(const std::string& kw) {
    if (!at_keyword(kw)) return false;
    lex_.take();
    return true;
  }

  bool eat_punct(const std::string& p) {
    if (lex_.peek().kind != Tok::Punct || lex_.peek().text != p) return false;
    lex_.take();
    return true;
  }

  std::string expect_ident() {
    if (lex_.peek().kind != Tok::Ident) {
      fail("expected an identifier, got '" + lex_.peek().text + "'");
    }
    return lex_.take().text;
  }

  double expect_number() {
    bool neg = false;
    if (lex_.peek().kind == Tok::Punct && lex_.peek().text == "-") {
      lex_.take();
      neg = true;
    }
    if (lex_.peek().kind != Tok::Number) {
      fail("expected a number, got '" + lex_.peek().text + "'");
    }
    const double v = lex_.take().number;
    return neg ? -v : v;
  }

  RelOp expect_relop() {
    if (lex_.peek().kind != Tok::Punct) fail("expected a relational operator");
    const std::string p = lex_.take().text;
    if (p == "<") return RelOp::Lt;
    if (p == "<=") return RelOp::Le;
    if (p == "=") return RelOp::Eq;
    if (p == ">=") return RelOp::Ge;
    if (p == ">") return RelOp::Gt;
    if (p == "!=") return RelOp::Ne;
    fail("'" + p + "' is not a relational operator");
  }

  PropertyAst parse_property() {
    PropertyAst prop;
    prop.span = lex_.peek().span;
    expect_keyword("property");
    prop.name = expect_ident();
    expect_punct(":");
    prop.body = make_body(parse_body());
    expect_punct(";");
    return prop;
  }

  PropertyBody parse_body() {
    if (at_keyword("assert")) return parse_assert();
    if (at_keyword("spike")) return parse_spike();
    if (at_keyword("spike2")) return parse_spike2();
    if (at_keyword("oscillation")) return parse_oscillation();
    if (at_keyword("let")) return parse_let();
    if (at_keyword("whenever")) return parse_whenever();
    if (at_keyword("before")) return parse_before();
    if (at_keyword("rise") || at_keyword("fall")) return parse_rise_fall();
    if (at_keyword("overshoot") || at_keyword("undershoot")) return parse_overshoot();
    fail("expected a property body, got '" + lex_.peek().text + "'");
  }

  Interval parse_interval() {
    expect_punct("[");
    Interval iv;
    iv.lo = expect_number();
    expect_punct(",");
    iv.hi = expect_number();
    expect_punct("]");
    if (iv.lo > iv.hi) fail("interval bounds out of order");
    return iv;
  }

  PropertyBody parse_assert() {
    const SourceSpan span = lex_.peek().span;
    expect_keyword("assert");
    DataAssertion da;
    da.predicate = parse_predicate();
    if (eat_keyword("in")) {
      da.intervals.push_back(parse_interval());
      while (eat_punct(",")) da.intervals.push_back(parse_interval());
      check_disjoint(da.intervals, span);
    }
    return PropertyBody{std::move(da)};
  }

  void check_disjoint(const std::vector<Interval>& ivs, SourceSpan span) {
    std::vector<Interval> sorted = ivs;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i].lo <= sorted[i - 1].hi) {
        throw ParseError(ErrorCode::OverlappingIntervals,
                         "assertion intervals must be pairwise disjoint", span);
      }
    }
  }

  Predicate parse_predicate() {
    Predicate p;
    p.lhs = parse_expr();
    p.op = expect_relop();
    p.rhs = parse_expr();
    return p;
  }

  TransformExpr parse_expr() {
    TransformExpr lhs = parse_term();
    for (;;) {
      if (eat_punct("+")) {
        lhs = TransformExpr::binary(TransformExpr::Op::Add, std::move(lhs), parse_term());
      } else if (eat_punct("-")) {
        lhs = TransformExpr::binary(TransformExpr::Op::Sub, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  TransformExpr parse_term() {
    TransformExpr lhs = parse_factor();
    for (;;) {
      if (eat_punct("*")) {
        lhs = TransformExpr::binary(TransformExpr::Op::Mul, std::move(lhs), parse_factor());
      } else if (eat_punct("/")) {
        lhs = TransformExpr::binary(TransformExpr::Op::Div, std::move(lhs), parse_factor());
      } else {
        return lhs;
      }
    }
  }

  TransformExpr parse_factor() {
    if (eat_punct("-")) {
      return TransformExpr::unary(TransformExpr::Op::Negate, parse_factor());
    }
    if (eat_punct("(")) {
      TransformExpr e = parse_expr();
      expect_punct(")");
      return e;
    }
    if (at_keyword("abs")) {
      lex_.take();
      expect_punct("(");
      TransformExpr e = parse_expr();
      expect_punct(")");
      return TransformExpr::unary(TransformExpr::Op::Abs, std::move(e));
    }
    if (at_keyword("deriv")) {
      lex_.take();
      expect_punct("(");
      TransformExpr e = parse_expr();
      int order = 1;
      if (eat_punct(",")) {
        const double o = expect_number();
        order = static_cast<int>(o);
        if (order != 1 && order != 2) fail("derivative order must be 1 or 2");
      }
      expect_punct(")");
      return TransformExpr::unary(TransformExpr::Op::Derivative, std::move(e), order);
    }
    if (lex_.peek().kind == Tok::Number) {
      return TransformExpr::make_constant(lex_.take().number);
    }
    if (lex_.peek().kind == Tok::Ident) {
      return TransformExpr::make_signal(lex_.take().text);
    }
    fail("expected an expression, got '" + lex_.peek().text + "'");
  }

  std::optional<ExtremaMethod> parse_method_opt() {
    if (!eat_keyword("method")) return std::nullopt;
    if (eat_keyword("analytical")) return ExtremaMethod::analytical();
    if (eat_keyword("punctual")) return ExtremaMethod::punctual();
    if (eat_keyword("precomputed")) {
      expect_punct("(");
      std::string first = expect_ident();
      expect_punct(",");
      std::string second = expect_ident();
      expect_punct(")");
      return ExtremaMethod::precomputed(std::move(first), std::move(second));
    }
    fail("expected 'analytical', 'punctual' or 'precomputed(..)'");
  }

  PropertyBody parse_spike() {
    expect_keyword("spike");
    SpikeProperty sp;
    if (eat_keyword("down")) sp.spec.polarity = SpikeSpec::Polarity::Downward;
    expect_keyword("on");
    sp.spec.signal = expect_ident();
    expect_keyword("in");
    sp.spec.window = parse_interval();
    expect_keyword("with");
    parse_feature_constraint(sp.spec);
    while (eat_punct(",")) parse_feature_constraint(sp.spec);
    if (eat_keyword("psi")) {
      if (eat_keyword("min")) {
        sp.spec.psi = SpikeSpec::Psi::Min;
      } else if (eat_keyword("max")) {
        sp.spec.psi = SpikeSpec::Psi::Max;
      } else if (eat_keyword("mean")) {
        sp.spec.psi = SpikeSpec::Psi::Mean;
      } else {
        fail("expected 'min', 'max' or 'mean' after 'psi'");
      }
    }
    if (auto m = parse_method_opt()) sp.spec.method = *m;
    return PropertyBody{std::move(sp)};
  }

  void parse_feature_constraint(SpikeSpec& spec) {
    const std::string feature = expect_ident();
    FeatureConstraint c{expect_relop(), expect_number()};
    if (feature == "a") {
      spec.amplitude = c;
    } else if (feature == "sp1") {
      spec.slope1 = c;
    } else if (feature == "sp2") {
      spec.slope2 = c;
    } else if (feature == "w") {
      spec.width = c;
    } else {
      fail("unknown spike feature '" + feature + "' (expected a, sp1, sp2 or w)");
    }
  }

  PropertyBody parse_spike2() {
    expect_keyword("spike2");
    SpikeTwoParamProperty sp;
    expect_keyword("on");
    sp.spec.signal = expect_ident();
    expect_keyword("with");
    expect_keyword("m");
    expect_punct("=");
    sp.spec.m = expect_number();
    expect_punct(",");
    expect_keyword("w");
    expect_punct("=");
    sp.spec.w = expect_number();
    if (eat_keyword("deriv")) sp.spec.derivative_column = expect_ident();
    return PropertyBody{std::move(sp)};
  }

  PropertyBody parse_oscillation() {
    expect_keyword("oscillation");
    OscillationProperty osc;
    expect_keyword("on");
    osc.spec.signal = expect_ident();
    expect_keyword("in");
    osc.spec.window = parse_interval();
    expect_keyword("with");
    parse_osc_constraint(osc.spec);
    while (eat_punct(",")) parse_osc_constraint(osc.spec);
    if (eat_keyword("ref")) {
      osc.spec.amplitude_mode = OscillationSpec::AmplitudeMode::Reference;
      osc.spec.reference = expect_number();
    } else if (eat_keyword("avg_amp")) {
      osc.spec.amplitude_mode = OscillationSpec::AmplitudeMode::AvgPeakToPeak;
    }
    if (eat_keyword("avg_period")) {
      osc.spec.period_mode = OscillationSpec::PeriodMode::Average;
    }
    if (eat_keyword("damped")) {
      osc.spec.damping = OscillationSpec::Damping::Damped;
    } else if (eat_keyword("driven")) {
      osc.spec.damping = OscillationSpec::Damping::Driven;
    } else if (eat_keyword("damped_trend")) {
      osc.spec.damping = OscillationSpec::Damping::DampedTrend;
    } else if (eat_keyword("driven_trend")) {
      osc.spec.damping = OscillationSpec::Damping::DrivenTrend;
    }
    if (eat_keyword("prominence")) osc.spec.prominence = expect_number();
    if (auto m = parse_method_opt()) osc.spec.method = *m;
    return PropertyBody{std::move(osc)};
  }

  void parse_osc_constraint(OscillationSpec& spec) {
    const std::string which = expect_ident();
    FeatureConstraint c{expect_relop(), expect_number()};
    if (which == "period") {
      spec.period = c;
    } else if (which == "amplitude") {
      spec.amplitude = c;
    } else {
      fail("unknown oscillation constraint '" + which + "' (expected period or amplitude)");
    }
  }

  PropertyBody parse_let() {
    expect_keyword("let");
    FunctionalProperty fn;
    fn.target_name = expect_ident();
    expect_punct("=");
    fn.expr = parse_expr();
    expect_keyword("then");
    fn.wrapped = make_body(parse_body());
    return PropertyBody{std::move(fn)};
  }

  SubProperty parse_occurrence() {
    SubProperty sub;
    if (eat_keyword("event")) {
      sub.kind = OccurrenceKind::Event;
      if (eat_punct("(")) {
        const std::string anchor = expect_ident();
        if (anchor == "vp1") {
          sub.spike_anchor = SpikeAnchor::Vp1;
        } else if (anchor == "peak") {
          sub.spike_anchor = SpikeAnchor::Peak;
        } else if (anchor == "vp2") {
          sub.spike_anchor = SpikeAnchor::Vp2;
        } else if (anchor == "minima") {
          sub.osc_anchor = OscillationAnchor::Minima;
        } else if (anchor == "maxima") {
          sub.osc_anchor = OscillationAnchor::Maxima;
        } else if (anchor == "all") {
          sub.osc_anchor = OscillationAnchor::All;
        } else {
          fail("unknown event anchor '" + anchor + "'");
        }
        expect_punct(")");
      }
    } else if (eat_keyword("state")) {
      sub.kind = OccurrenceKind::State;
    } else {
      fail("expected 'event' or 'state'");
    }
    expect_punct("{");
    sub.body = make_body(parse_body());
    expect_punct("}");
    return sub;
  }

  SubProperty parse_trigger() {
    if (at_keyword("time")) {
      // Absolute-time trigger: projects the built-in clock signal through a
      // "time becomes >= T" event.
      lex_.take();
      Predicate p;
      p.lhs = TransformExpr::make_signal("time");
      p.op = expect_relop();
      p.rhs = TransformExpr::make_constant(expect_number());
      SubProperty sub;
      sub.kind = OccurrenceKind::Event;
      sub.body = make_body(PropertyBody{DataAssertion{std::move(p), {}}});
      return sub;
    }
    return parse_occurrence();
  }

  std::optional<DistanceBound> parse_bound_opt() {
    if (!eat_keyword("within")) return std::nullopt;
    DistanceBound b{expect_relop(), expect_number()};
    return b;
  }

  PropertyBody parse_whenever() {
    expect_keyword("whenever");
    OrderProperty ord;
    ord.pattern = OrderProperty::Pattern::Response;
    ord.cause = parse_occurrence();
    expect_keyword("then");
    ord.effect = parse_occurrence();
    ord.bound = parse_bound_opt();
    return PropertyBody{std::move(ord)};
  }

  PropertyBody parse_before() {
    expect_keyword("before");
    OrderProperty ord;
    ord.pattern = OrderProperty::Pattern::Precedence;
    ord.effect = parse_occurrence();
    expect_keyword("requires");
    ord.cause = parse_occurrence();
    ord.bound = parse_bound_opt();
    return PropertyBody{std::move(ord)};
  }

  PropertyBody parse_rise_fall() {
    RiseFallProperty rf;
    rf.direction = at_keyword("rise") ? RiseFallProperty::Direction::Rise
                                      : RiseFallProperty::Direction::Fall;
    lex_.take();
    expect_keyword("on");
    rf.signal = expect_ident();
    expect_keyword("to");
    rf.target = parse_predicate();
    expect_keyword("after");
    rf.trigger = parse_trigger();
    expect_keyword("within");
    rf.rt = expect_number();
    rf.monotonic = eat_keyword("monotonic");
    return PropertyBody{std::move(rf)};
  }

  PropertyBody parse_overshoot() {
    OvershootProperty os;
    os.direction = at_keyword("overshoot") ? OvershootProperty::Direction::Overshoot
                                           : OvershootProperty::Direction::Undershoot;
    lex_.take();
    expect_keyword("on");
    os.signal = expect_ident();
    expect_keyword("to");
    os.target = parse_predicate();
    expect_keyword("after");
    os.trigger = parse_trigger();
    expect_keyword(os.direction == OvershootProperty::Direction::Overshoot ? "max" : "min");
    os.bound_value = expect_number();
    os.relative = eat_keyword("relative");
    expect_keyword("over");
    os.oi = expect_number();
    os.monotonic = eat_keyword("monotonic");
    return PropertyBody{std::move(os)};
  }

  Lexer lex_;
};

// ---------------------------------------------------------------------------
// Pretty printer.

int precedence(TransformExpr::Op op) {
  switch (op) {
    case TransformExpr::Op::Add:
    case TransformExpr::Op::Sub:
      return 1;
    case TransformExpr::Op::Mul:
    case TransformExpr::Op::Div:
      return 2;
    default:
      return 3;
  }
}

void print_expr(std::ostringstream& out, const TransformExpr& e, int parent_prec) {
  const int prec = precedence(e.op);
  switch (e.op) {
    case TransformExpr::Op::Constant:
      out << format_number(e.constant);
      return;
    case TransformExpr::Op::SignalRef:
      out << e.signal;
      return;
    case TransformExpr::Op::Abs:
      out << "abs(";
      print_expr(out, e.children[0], 0);
      out << ")";
      return;
    case TransformExpr::Op::Derivative:
      out << "deriv(";
      print_expr(out, e.children[0], 0);
      if (e.order != 1) out << ", " << e.order;
      out << ")";
      return;
    case TransformExpr::Op::Negate:
      out << "-";
      print_expr(out, e.children[0], prec);
      return;
    default: {
      const bool parens = prec < parent_prec;
      if (parens) out << "(";
      print_expr(out, e.children[0], prec);
      switch (e.op) {
        case TransformExpr::Op::Add: out << " + "; break;
        case TransformExpr::Op::Sub: out << " - "; break;
        case TransformExpr::Op::Mul: out << " * "; break;
        case TransformExpr::Op::Div: out << " / "; break;
        default: break;
      }
      // Right operand of -/ / needs parens at equal precedence.
      print_expr(out, e.children[1], prec + 1);
      if (parens) out << ")";
      return;
    }
  }
}

std::string expr_text(const TransformExpr& e) {
  std::ostringstream out;
  print_expr(out, e, 0);
  return out.str();
}

std::string predicate_text(const Predicate& p) {
  return expr_text(p.lhs) + " " + rel_op_text(p.op) + " " + expr_text(p.rhs);
}

std::string interval_text(const Interval& iv) {
  return "[" + format_number(iv.lo) + ", " + format_number(iv.hi) + "]";
}

std::string constraint_text(const char* feature, const FeatureConstraint& c) {
  return std::string(feature) + " " + rel_op_text(c.op) + " " + format_number(c.threshold);
}

std::string method_text(const ExtremaMethod& m) {
  switch (m.kind) {
    case ExtremaMethod::Kind::Analytical: return "";
    case ExtremaMethod::Kind::Punctual: return " method punctual";
    case ExtremaMethod::Kind::Precomputed:
      return " method precomputed(" + m.first_column + ", " + m.second_column + ")";
  }
  return "";
}

std::string body_text(const PropertyBody& body);

std::string occurrence_text(const SubProperty& sub) {
  std::string head;
  if (sub.kind == OccurrenceKind::State) {
    head = "state";
  } else {
    head = "event";
    const bool is_spike = std::holds_alternative<SpikeProperty>(sub.body->node);
    const bool is_osc = std::holds_alternative<OscillationProperty>(sub.body->node);
    if (is_spike && sub.spike_anchor != SpikeAnchor::Peak) {
      head += sub.spike_anchor == SpikeAnchor::Vp1 ? "(vp1)" : "(vp2)";
    } else if (is_osc && sub.osc_anchor != OscillationAnchor::Maxima) {
      head += sub.osc_anchor == OscillationAnchor::Minima ? "(minima)" : "(all)";
    }
  }
  return head + " { " + body_text(*sub.body) + " }";
}

std::string bound_text(const std::optional<DistanceBound>& bound) {
  if (!bound) return "";
  return std::string(" within ") + rel_op_text(bound->op) + " " + format_number(bound->n);
}

std::string body_text(const PropertyBody& body) {
  std::ostringstream out;
  if (const auto* da = std::get_if<DataAssertion>(&body.node)) {
    out << "assert " << predicate_text(da->predicate);
    if (!da->intervals.empty()) {
      out << " in ";
      for (std::size_t i = 0; i < da->intervals.size(); ++i) {
        if (i) out << ", ";
        out << interval_text(da->intervals[i]);
      }
    }
  } else if (const auto* sp = std::get_if<SpikeProperty>(&body.node)) {
    const SpikeSpec& s = sp->spec;
    out << "spike";
    if (s.polarity == SpikeSpec::Polarity::Downward) out << " down";
    out << " on " << s.signal << " in " << interval_text(s.window) << " with ";
    std::vector<std::string> cons;
    if (s.amplitude) cons.push_back(constraint_text("a", *s.amplitude));
    if (s.slope1) cons.push_back(constraint_text("sp1", *s.slope1));
    if (s.slope2) cons.push_back(constraint_text("sp2", *s.slope2));
    if (s.width) cons.push_back(constraint_text("w", *s.width));
    for (std::size_t i = 0; i < cons.size(); ++i) {
      if (i) out << ", ";
      out << cons[i];
    }
    if (s.psi == SpikeSpec::Psi::Max) out << " psi max";
    if (s.psi == SpikeSpec::Psi::Mean) out << " psi mean";
    out << method_text(s.method);
  } else if (const auto* sp2 = std::get_if<SpikeTwoParamProperty>(&body.node)) {
    out << "spike2 on " << sp2->spec.signal << " with m = " << format_number(sp2->spec.m)
        << ", w = " << format_number(sp2->spec.w);
    if (!sp2->spec.derivative_column.empty()) out << " deriv " << sp2->spec.derivative_column;
  } else if (const auto* osc = std::get_if<OscillationProperty>(&body.node)) {
    const OscillationSpec& s = osc->spec;
    out << "oscillation on " << s.signal << " in " << interval_text(s.window) << " with ";
    std::vector<std::string> cons;
    if (s.period) cons.push_back(constraint_text("period", *s.period));
    if (s.amplitude) cons.push_back(constraint_text("amplitude", *s.amplitude));
    for (std::size_t i = 0; i < cons.size(); ++i) {
      if (i) out << ", ";
      out << cons[i];
    }
    if (s.amplitude_mode == OscillationSpec::AmplitudeMode::Reference) {
      out << " ref " << format_number(s.reference);
    } else if (s.amplitude_mode == OscillationSpec::AmplitudeMode::AvgPeakToPeak) {
      out << " avg_amp";
    }
    if (s.period_mode == OscillationSpec::PeriodMode::Average) out << " avg_period";
    switch (s.damping) {
      case OscillationSpec::Damping::Damped: out << " damped"; break;
      case OscillationSpec::Damping::Driven: out << " driven"; break;
      case OscillationSpec::Damping::DampedTrend: out << " damped_trend"; break;
      case OscillationSpec::Damping::DrivenTrend: out << " driven_trend"; break;
      case OscillationSpec::Damping::None: break;
    }
    if (s.prominence) out << " prominence " << format_number(*s.prominence);
    out << method_text(s.method);
  } else if (const auto* fn = std::get_if<FunctionalProperty>(&body.node)) {
    out << "let " << fn->target_name << " = " << expr_text(fn->expr) << " then "
        << body_text(*fn->wrapped);
  } else if (const auto* ord = std::get_if<OrderProperty>(&body.node)) {
    if (ord->pattern == OrderProperty::Pattern::Response) {
      out << "whenever " << occurrence_text(ord->cause) << " then "
          << occurrence_text(ord->effect);
    } else {
      out << "before " << occurrence_text(ord->effect) << " requires "
          << occurrence_text(ord->cause);
    }
    out << bound_text(ord->bound);
  } else if (const auto* rf = std::get_if<RiseFallProperty>(&body.node)) {
    out << (rf->direction == RiseFallProperty::Direction::Rise ? "rise" : "fall") << " on "
        << rf->signal << " to " << predicate_text(rf->target) << " after "
        << occurrence_text(rf->trigger) << " within " << format_number(rf->rt);
    if (rf->monotonic) out << " monotonic";
  } else if (const auto* os = std::get_if<OvershootProperty>(&body.node)) {
    const bool over = os->direction == OvershootProperty::Direction::Overshoot;
    out << (over ? "overshoot" : "undershoot") << " on " << os->signal << " to "
        << predicate_text(os->target) << " after " << occurrence_text(os->trigger) << " "
        << (over ? "max" : "min") << " " << format_number(os->bound_value);
    if (os->relative) out << " relative";
    out << " over " << format_number(os->oi);
    if (os->monotonic) out << " monotonic";
  }
  return out.str();
}

}  // namespace

std::vector<PropertyAst> parse(const std::string& text) {
  Parser parser(text);
  return parser.parse_file();
}

std::string pretty_print(const PropertyAst& prop) {
  return "property " + prop.name + ": " + body_text(*prop.body) + ";\n";
}

std::string pretty_print(const std::vector<PropertyAst>& props) {
  std::string out;
  for (const auto& p : props) out += pretty_print(p);
  return out;
}

}  // namespace sigprop
