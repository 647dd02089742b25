#include "sigprop/trace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sigprop {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedCsv: return "MalformedCsv";
    case ErrorCode::NonMonotoneTime: return "NonMonotoneTime";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::TooFewExtrema: return "TooFewExtrema";
    case ErrorCode::MissingDerivativeColumn: return "MissingDerivativeColumn";
    case ErrorCode::UnknownSignal: return "UnknownSignal";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotProjectable: return "NotProjectable";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::TraceTooLarge: return "TraceTooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicatePropertyName: return "DuplicatePropertyName";
    case ErrorCode::OverlappingIntervals: return "OverlappingIntervals";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::PunctualInterval: return "PunctualInterval";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

std::string format_number(double v) {
  char buf[64];
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

const char* rel_op_text(RelOp op) {
  switch (op) {
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
    case RelOp::Eq: return "=";
    case RelOp::Ge: return ">=";
    case RelOp::Gt: return ">";
    case RelOp::Ne: return "!=";
  }
  return "?";
}

bool rel_op_eval(RelOp op, double lhs, double rhs, double eq_tol) {
  switch (op) {
    case RelOp::Lt: return lhs < rhs;
    case RelOp::Le: return lhs <= rhs;
    case RelOp::Eq: return std::fabs(lhs - rhs) <= eq_tol;
    case RelOp::Ge: return lhs >= rhs;
    case RelOp::Gt: return lhs > rhs;
    case RelOp::Ne: return std::fabs(lhs - rhs) > eq_tol;
  }
  return false;
}

Signal::Signal(std::string name, std::vector<double> times, std::vector<double> values)
    : name_(std::move(name)), times_(std::move(times)), values_(std::move(values)) {
  if (times_.size() != values_.size()) {
    throw Error(ErrorCode::GridMismatch,
                "signal '" + name_ + "' has " + std::to_string(times_.size()) +
                    " timestamps but " + std::to_string(values_.size()) + " values");
  }
  if (times_.size() < 2) {
    throw Error(ErrorCode::TooFewSamples,
                "signal '" + name_ + "' needs at least 2 samples");
  }
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) {
      throw Error(ErrorCode::NonMonotoneTime,
                  "signal '" + name_ + "' time grid not strictly increasing at index " +
                      std::to_string(i));
    }
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::NonFiniteValue, "signal '" + name_ + "' has a non-finite value");
    }
  }
}

std::size_t Signal::index_of_time(double t, double tol) const {
  auto it = std::lower_bound(times_.begin(), times_.end(), t - tol);
  if (it == times_.end()) return npos;
  if (std::fabs(*it - t) <= tol) return static_cast<std::size_t>(it - times_.begin());
  return npos;
}

std::size_t Signal::lower_bound_index(double t) const {
  auto it = std::lower_bound(times_.begin(), times_.end(), t);
  return static_cast<std::size_t>(it - times_.begin());
}

double Signal::value_at(double t, InterpolationMode mode) const {
  if (t < 0.0) {
    throw Error(ErrorCode::OutOfDomain, "t < 0");
  }
  if (mode == InterpolationMode::Grid) {
    std::size_t i = index_of_time(t);
    if (i == npos) {
      throw Error(ErrorCode::OutOfDomain,
                  "t=" + std::to_string(t) + " is not a sample point of '" + name_ + "'");
    }
    return values_[i];
  }
  if (t >= length()) {
    throw Error(ErrorCode::OutOfDomain,
                "t=" + std::to_string(t) + " is beyond |" + name_ + "|=" +
                    std::to_string(length()));
  }
  std::size_t hi = lower_bound_index(t);
  if (hi < times_.size() && times_[hi] == t) return values_[hi];
  std::size_t lo = hi - 1;
  double u = (t - times_[lo]) / (times_[hi] - times_[lo]);
  return values_[lo] + u * (values_[hi] - values_[lo]);
}

Signal Signal::finite_difference(int order) const {
  if (order != 1 && order != 2) {
    throw Error(ErrorCode::InvalidThreshold, "derivative order must be 1 or 2");
  }
  if (size() < static_cast<std::size_t>(order) + 1) {
    throw Error(ErrorCode::TooFewSamples,
                "need at least " + std::to_string(order + 1) + " samples for order " +
                    std::to_string(order));
  }
  std::vector<double> ts(times_.begin(), times_.end() - 1);
  std::vector<double> vs(size() - 1);
  for (std::size_t i = 0; i + 1 < size(); ++i) {
    vs[i] = (values_[i + 1] - values_[i]) / (times_[i + 1] - times_[i]);
  }
  Signal first(name_ + "'", std::move(ts), std::move(vs));
  if (order == 1) return first;
  Signal second = first.finite_difference(1);
  return Signal(name_ + "''", second.times(), second.values());
}

Trace::Trace(std::vector<double> grid) : grid_(std::move(grid)) {
  if (grid_.size() < 2) {
    throw Error(ErrorCode::TooFewSamples, "trace grid needs at least 2 samples");
  }
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (!(grid_[i] > grid_[i - 1])) {
      throw Error(ErrorCode::NonMonotoneTime,
                  "trace grid not strictly increasing at index " + std::to_string(i));
    }
  }
}

void Trace::add_signal(std::string name, std::vector<double> values) {
  if (values.size() != grid_.size()) {
    throw Error(ErrorCode::GridMismatch,
                "signal '" + name + "' has " + std::to_string(values.size()) +
                    " values for a grid of " + std::to_string(grid_.size()));
  }
  std::string key = name;
  signals_.emplace(std::move(key), Signal(std::move(name), grid_, std::move(values)));
}

bool Trace::has_signal(const std::string& name) const {
  return signals_.count(name) > 0 || name == "time";
}

const Signal& Trace::signal(const std::string& name) const {
  auto it = signals_.find(name);
  if (it != signals_.end()) return it->second;
  if (name == "time") {
    if (!clock_) clock_ = std::make_unique<Signal>("time", grid_, grid_);
    return *clock_;
  }
  throw Error(ErrorCode::UnknownSignal, "trace has no signal '" + name + "'");
}

std::vector<std::string> Trace::signal_names() const {
  std::vector<std::string> names;
  names.reserve(signals_.size());
  for (const auto& [name, sig] : signals_) names.push_back(name);
  return names;
}

namespace {

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, delim)) cells.push_back(cell);
  if (!line.empty() && line.back() == delim) cells.emplace_back();
  return cells;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, std::size_t row, std::size_t col) {
  const std::string cell = trim(raw);
  if (cell.empty()) {
    throw Error(ErrorCode::MalformedCsv,
                "empty cell at row " + std::to_string(row) + ", column " + std::to_string(col));
  }
  char* end = nullptr;
  double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size()) {
    throw Error(ErrorCode::MalformedCsv,
                "cell '" + cell + "' at row " + std::to_string(row) + " is not a number");
  }
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::NonFiniteValue,
                "cell '" + cell + "' at row " + std::to_string(row) + " is not finite");
  }
  return v;
}

}  // namespace

Trace read_trace_csv(std::istream& in, const CsvOptions& options) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::MalformedCsv, "empty input");
  }
  std::vector<std::string> header = split_line(line, options.delimiter);
  for (auto& h : header) h = trim(h);
  if (header.size() < 2 || header[0] != "time") {
    throw Error(ErrorCode::MalformedCsv,
                "header must name a 'time' column plus at least one signal column");
  }

  std::vector<double> grid;
  std::vector<std::vector<double>> columns(header.size() - 1);
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_line(line, options.delimiter);
    if (cells.size() != header.size()) {
      throw Error(ErrorCode::MalformedCsv,
                  "row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                      " cells, expected " + std::to_string(header.size()));
    }
    double t = parse_cell(cells[0], row, 0);
    if (!grid.empty() && !(t > grid.back())) {
      throw Error(ErrorCode::NonMonotoneTime,
                  "timestamp " + cells[0] + " at row " + std::to_string(row) +
                      " does not increase");
    }
    grid.push_back(t);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      columns[c - 1].push_back(parse_cell(cells[c], row, c));
    }
  }
  if (grid.size() < 2) {
    throw Error(ErrorCode::TooFewSamples, "trace needs at least 2 rows");
  }
  Trace trace(std::move(grid));
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c].empty()) {
      throw Error(ErrorCode::MalformedCsv, "empty signal name in header");
    }
    trace.add_signal(header[c], std::move(columns[c - 1]));
  }
  return trace;
}

Trace load_trace(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open trace file '" + path + "'");
  }
  Trace trace = read_trace_csv(in, options);
  trace.source_path = path;
  return trace;
}

void write_trace_csv(const Trace& trace, std::ostream& out, const CsvOptions& options) {
  const auto names = trace.signal_names();
  out << "time";
  for (const auto& n : names) out << options.delimiter << n;
  out << "\n";
  char buf[64];
  for (std::size_t i = 0; i < trace.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", trace.grid()[i]);
    out << buf;
    for (const auto& n : names) {
      std::snprintf(buf, sizeof buf, "%.17g", trace.signal(n).value_at_index(i));
      out << options.delimiter << buf;
    }
    out << "\n";
  }
}

void save_trace(const Trace& trace, const std::string& path, const CsvOptions& options) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::Io, "cannot write trace file '" + path + "'");
  }
  write_trace_csv(trace, out, options);
}

std::vector<std::size_t> grid_indices_in(const Signal& sig, double lo, double hi) {
  std::vector<std::size_t> out;
  const auto& ts = sig.times();
  const double end = sig.length();
  for (std::size_t i = sig.lower_bound_index(lo); i < ts.size(); ++i) {
    if (ts[i] > hi) break;
    if (ts[i] >= end) break;
    out.push_back(i);
  }
  return out;
}

}  // namespace sigprop
