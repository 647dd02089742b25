#pragma once

// In-memory evaluation traces: hand-picked waveforms digitized from control
// points (piecewise-linear resampling onto a regular grid) plus parametric
// sine traces.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "sigprop/trace.hpp"

namespace fixtures {

using ControlPoints = std::vector<std::pair<double, double>>;

struct Series {
  std::string name;
  ControlPoints points;
};

inline double interp_points(const ControlPoints& pts, double t) {
  if (t <= pts.front().first) return pts.front().second;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (t <= pts[i].first) {
      const auto& [t0, v0] = pts[i - 1];
      const auto& [t1, v1] = pts[i];
      return v0 + (t - t0) / (t1 - t0) * (v1 - v0);
    }
  }
  return pts.back().second;
}

inline sigprop::Trace digitize(double dt, double t0, double t1,
                               const std::vector<Series>& series) {
  const auto n = static_cast<std::size_t>(std::llround((t1 - t0) / dt)) + 1;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = t0 + static_cast<double>(i) * dt;
  sigprop::Trace trace(grid);
  for (const Series& s : series) {
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = interp_points(s.points, grid[i]);
    trace.add_signal(s.name, std::move(values));
  }
  return trace;
}

// Forward differences of a column, padded at the end so the column spans the
// full grid (the pad value is never read by a quantifier).
inline void add_derivative_column(sigprop::Trace& trace, const std::string& of,
                                  const std::string& name) {
  const sigprop::Signal& sig = trace.signal(of);
  std::vector<double> d(trace.size(), 0.0);
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    d[i] = (sig.value_at_index(i + 1) - sig.value_at_index(i)) /
           (trace.grid()[i + 1] - trace.grid()[i]);
  }
  trace.add_signal(name, std::move(d));
}

// Two signals for the time-constrained assertion example; s1 stays below the
// threshold of 3 inside [2,6] and [10,15], s2 does not.
inline sigprop::Trace assertion_pair() {
  return digitize(0.5, 0.0, 24.0,
                  {{"s1",
                    {{0, 3.5}, {1, 2.9}, {3, 1.5}, {6, 2.5}, {10, 1.4}, {15, 2.5},
                     {17, 2.5}, {19, 3.5}, {21, 2.5}, {24, 2.5}}},
                   {"s2",
                    {{0, 2.8}, {2, 4.5}, {4, 2.7}, {6, 3.5}, {8, 2.8}, {10, 2.8},
                     {15, 3.2}, {18, 2.3}, {20, 2.6}, {23, 2.6}, {24, 2.6}}}});
}

// Spike feature example: s1 has the triple (10, 20, 30) with values (1, 2, 1);
// s2 has (10, 25, 35) with values (1.5, 3, 2).
inline sigprop::Trace spike_pair() {
  return digitize(1.0, 0.0, 46.0,
                  {{"s1",
                    {{0, 1.17}, {8, 1.17}, {9, 1.09}, {10, 1.0}, {12, 1.1}, {14, 1.3},
                     {18, 1.8}, {20, 2.0}, {22, 1.85}, {25, 1.5}, {28, 1.2}, {30, 1.0},
                     {32, 1.3}, {46, 1.3}}},
                   {"s2",
                    {{0, 1.6}, {9, 1.6}, {10, 1.5}, {12, 1.6}, {16, 2.0}, {25, 3.0},
                     {35, 2.0}, {37, 2.6}, {43, 2.5}, {46, 2.5}}}});
}

// Same shape, different peak height: the two-parameter characterization fires
// on both, the feature-based one only on s2. Derivative columns included.
inline sigprop::Trace slope_spike_pair() {
  sigprop::Trace trace =
      digitize(1.0, 0.0, 52.0,
               {{"s1",
                 {{0, 0.26}, {4, 0.22}, {5, 0.2}, {15, 0.2}, {20, 1.0}, {21, 1.2},
                  {25, 1.65}, {30, 1.9}, {35, 1.4}, {39, 0.7}, {41, 0.2}, {45, 0.2},
                  {48, 0.22}, {52, 0.26}}},
                {"s2",
                 {{0, 0.26}, {4, 0.22}, {5, 0.2}, {15, 0.2}, {20, 1.0}, {21, 1.2},
                  {23, 1.65}, {30, 3.0}, {36, 1.6}, {39, 0.7}, {41, 0.2}, {45, 0.2},
                  {48, 0.22}, {52, 0.26}}}});
  add_derivative_column(trace, "s1", "s1_prime");
  add_derivative_column(trace, "s2", "s2_prime");
  return trace;
}

// A signal that becomes >= 2 exactly once, at t = 6.
inline sigprop::Trace threshold_step() {
  return digitize(1.0, 0.0, 14.0,
                  {{"s",
                    {{0, 0.8}, {1, 0.8}, {2, 1.1}, {4, 1.0}, {6, 2.0}, {8, 1.4},
                     {10, 1.4}, {11, 1.2}, {14, 1.2}}}});
}

// Response example: s1 spikes with its peak at t = 20, s2 drops below 0.5 at
// t = 27.
inline sigprop::Trace response_pair() {
  return digitize(1.0, 0.0, 38.0,
                  {{"s1",
                    {{0, 1.17}, {8, 1.17}, {9, 1.09}, {10, 1.0}, {12, 1.1}, {15, 1.4},
                     {20, 2.0}, {27, 1.2}, {30, 1.0}, {32, 1.2}, {34, 1.22},
                     {38, 1.22}}},
                   {"s2",
                    {{0, 0.7}, {4, 0.7}, {5, 0.65}, {8, 0.6}, {24, 0.6}, {25, 0.55},
                     {26, 0.55}, {27, 0.49}, {28, 0.4}, {29, 0.35}, {30, 0.3},
                     {38, 0.3}}}});
}

// Rise-time example: the trigger fires at t = 4; s1 reaches 2 at t = 9, s2
// only at t = 13.
inline sigprop::Trace rise_pair() {
  return digitize(1.0, 0.0, 15.0,
                  {{"s_tr",
                    {{0, 0.7}, {3, 0.7}, {4, 1.1}, {5, 1.25}, {6, 1.4}, {7, 1.7},
                     {8, 2.1}, {9, 2.5}, {10, 2.75}, {11, 3.0}, {12, 4.0}, {13, 4.5},
                     {14, 5.0}, {15, 5.5}}},
                   {"s1",
                    {{0, 1.0}, {2, 1.0}, {3, 0.8}, {4, 0.58}, {5, 0.75}, {6, 1.0},
                     {7, 1.33}, {8, 1.67}, {9, 2.0}, {10, 2.2}, {11, 2.4}, {12, 2.5},
                     {15, 2.5}}},
                   {"s2",
                    {{0, 0.6}, {1, 0.2}, {2, 0.7}, {3, 0.55}, {4, 0.4}, {5, 0.6},
                     {6, 0.8}, {7, 1.0}, {8, 1.25}, {9, 1.5}, {10, 1.6}, {11, 1.85},
                     {12, 1.9}, {13, 2.1}, {15, 2.1}}}});
}

// Overshoot example: the trigger fires at t = 2; s1 reaches the target 1 at
// t = 7 and stays below 3, s2 reaches it at t = 5 and exceeds 3 at t = 11.
inline sigprop::Trace overshoot_pair() {
  return digitize(1.0, 0.0, 14.0,
                  {{"s_tr",
                    {{0, 0.85}, {1, 0.8}, {2, 1.05}, {3, 1.2}, {4, 1.18}, {5, 1.3},
                     {6, 1.7}, {7, 2.0}, {8, 2.4}, {9, 2.7}, {10, 3.1}, {11, 3.4},
                     {12, 3.5}, {13, 3.6}, {14, 3.7}}},
                   {"s1",
                    {{0, 0.55}, {1, 0.5}, {2, 0.2}, {3, 0.3}, {4, 0.4}, {5, 0.6},
                     {6, 0.8}, {7, 1.0}, {8, 1.3}, {9, 1.55}, {10, 1.8}, {11, 1.9},
                     {14, 1.9}}},
                   {"s2",
                    {{0, 0.85}, {1, 0.8}, {2, 0.5}, {3, 0.6}, {4, 0.8}, {5, 1.0},
                     {6, 1.35}, {7, 1.7}, {8, 2.1}, {9, 2.4}, {10, 2.75}, {11, 3.2},
                     {12, 3.3}, {14, 3.3}}}});
}

// Exponential pair with a pointwise difference of exactly 1.
inline sigprop::Trace exp_offset_pair() {
  const std::size_t n = 41;
  std::vector<double> grid(n), s1(n), s2(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = static_cast<double>(i);
    s1[i] = 3.0 - 4.0 * std::exp(-0.2 * grid[i]);
    s2[i] = 2.0 - 4.0 * std::exp(-0.2 * grid[i]);
  }
  sigprop::Trace trace(grid);
  trace.add_signal("s1", std::move(s1));
  trace.add_signal("s2", std::move(s2));
  return trace;
}

// sin(t/divisor) + 1 sampled at dt over [0, t1].
inline sigprop::Trace sine_trace(double divisor, double dt = 0.01, double t1 = 60.0,
                                 const std::string& name = "s") {
  const auto n = static_cast<std::size_t>(std::llround(t1 / dt)) + 1;
  std::vector<double> grid(n), values(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = static_cast<double>(i) * dt;
    values[i] = std::sin(grid[i] / divisor) + 1.0;
  }
  sigprop::Trace trace(grid);
  trace.add_signal(name, std::move(values));
  return trace;
}

inline sigprop::Trace make_trace(const std::vector<double>& grid,
                                 const std::vector<std::pair<std::string, std::vector<double>>>& cols) {
  sigprop::Trace trace(grid);
  for (const auto& [name, values] : cols) trace.add_signal(name, values);
  return trace;
}

}  // namespace fixtures
