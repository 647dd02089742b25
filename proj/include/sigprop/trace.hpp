#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sigprop/config.hpp"
#include "sigprop/errors.hpp"

namespace sigprop {

/// One named, finite, sampled real-valued series. Samples are immutable after
/// construction. The domain of definition is [0, length()): queries at
/// t >= length() are undefined rather than extrapolated.
class Signal {
 public:
  Signal(std::string name, std::vector<double> times, std::vector<double> values);

  const std::string& name() const { return name_; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return times_.size(); }

  /// |s|: the last timestamp. The sample at |s| exists as data but lies
  /// outside the domain of definition used by quantifiers and interpolation.
  double length() const { return times_.back(); }

  double time_at(std::size_t i) const { return times_[i]; }
  double value_at_index(std::size_t i) const { return values_[i]; }

  double value_at(double t, InterpolationMode mode) const;

  /// Index of the sample with timestamp t (within tol), or npos.
  std::size_t index_of_time(double t, double tol = 1e-12) const;

  /// First index with time >= t (lower bound on the grid).
  std::size_t lower_bound_index(double t) const;

  /// Forward finite difference of the given order, computed with the local
  /// sample spacing. The result lives on the same grid minus the last
  /// `order` points; second order differences the first-order signal.
  Signal finite_difference(int order) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::string name_;
  std::vector<double> times_;
  std::vector<double> values_;
};

/// A set of signals sharing one strictly increasing time grid.
class Trace {
 public:
  Trace() = default;
  explicit Trace(std::vector<double> grid);

  void add_signal(std::string name, std::vector<double> values);

  const std::vector<double>& grid() const { return grid_; }
  std::size_t size() const { return grid_.size(); }
  double length() const { return grid_.back(); }

  bool has_signal(const std::string& name) const;
  /// Looks up a signal column. The name `time` resolves to the built-in
  /// clock signal (the grid itself) unless a real column shadows it.
  const Signal& signal(const std::string& name) const;

  std::vector<std::string> signal_names() const;

  std::string source_path;

 private:
  std::vector<double> grid_;
  std::map<std::string, Signal> signals_;
  mutable std::unique_ptr<Signal> clock_;
};

struct CsvOptions {
  char delimiter = ',';
};

/// Loads a trace from CSV: header row `time,<sig>,...`, strictly increasing
/// timestamps, every cell a finite real.
Trace load_trace(const std::string& path, const CsvOptions& options = {});
Trace read_trace_csv(std::istream& in, const CsvOptions& options = {});

/// Writes a trace back to CSV with 17 significant digits, so that reloading
/// reproduces every sample bit-for-bit.
void save_trace(const Trace& trace, const std::string& path,
                const CsvOptions& options = {});
void write_trace_csv(const Trace& trace, std::ostream& out,
                     const CsvOptions& options = {});

/// Grid indices i with lo <= t_i <= hi and t_i < |s|, i.e. the sample points
/// an SFO quantifier ranges over for the closed interval [lo, hi].
std::vector<std::size_t> grid_indices_in(const Signal& sig, double lo, double hi);

}  // namespace sigprop
