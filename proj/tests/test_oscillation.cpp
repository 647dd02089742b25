#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sigprop/oscillation.hpp"
#include "support/fixtures.hpp"

using namespace sigprop;

namespace {

const EvalConfig cfg{};
const double kPi = std::acos(-1.0);

OscillationSpec posc_spec(const std::string& signal) {
  OscillationSpec spec;
  spec.signal = signal;
  spec.window = {0, 60};
  spec.period = FeatureConstraint{RelOp::Lt, 20.0};
  spec.amplitude = FeatureConstraint{RelOp::Lt, 3.0};
  spec.amplitude_mode = OscillationSpec::AmplitudeMode::Reference;
  spec.reference = 1.0;
  return spec;
}

std::vector<Extremum> extrema_values(std::initializer_list<double> values) {
  std::vector<Extremum> out;
  std::size_t i = 0;
  for (double v : values) {
    out.push_back({i % 2 ? ExtremumKind::Max : ExtremumKind::Min, i, static_cast<double>(i),
                   v});
    ++i;
  }
  return out;
}

}  // namespace

TEST_CASE("sin(t/2)+1 satisfies period < 20, amplitude < 3 with period near 4*pi") {
  Trace trace = fixtures::sine_trace(2.0);
  Verdict v = check_oscillation(trace.signal("s"), posc_spec("s"), trace, cfg);
  REQUIRE(v.holds());
  const auto& stats = std::get<OscillationStats>(v.witness);
  CHECK(std::fabs(stats.avg_period - 4.0 * kPi) <= 2 * 0.01);
  CHECK(stats.osc_n >= 4);
}

TEST_CASE("sin(t/6)+1 violates the same property: period 12*pi exceeds 20") {
  Trace trace = fixtures::sine_trace(6.0);
  Verdict v = check_oscillation(trace.signal("s"), posc_spec("s"), trace, cfg);
  CHECK(v.status == Status::Violated);
}

TEST_CASE("a constant signal has no complete oscillation") {
  Trace trace = fixtures::make_trace({0, 1, 2, 3, 4}, {{"s", {1, 1, 1, 1, 1}}});
  OscillationSpec spec = posc_spec("s");
  spec.window = {0, 4};
  Verdict v = check_oscillation(trace.signal("s"), spec, trace, cfg);
  CHECK(v.status == Status::Violated);
  CHECK(std::get<OscillationStats>(v.witness).extrema.empty());
}

TEST_CASE("oscillation stats arithmetic") {
  SUBCASE("extrema values (1,2,1) give an average peak-to-peak amplitude of 1") {
    OscillationStats stats = oscillation_stats(extrema_values({1, 2, 1}));
    CHECK(stats.avg_amp_pp == doctest::Approx(1.0));
    CHECK(stats.osc_n == 1);
  }
  SUBCASE("extrema times (0,5,10,15,20) give oscN=2 and average period 10") {
    std::vector<Extremum> ex;
    for (int i = 0; i < 5; ++i) {
      ex.push_back({i % 2 ? ExtremumKind::Max : ExtremumKind::Min,
                    static_cast<std::size_t>(i), 5.0 * i, i % 2 ? 2.0 : 0.0});
    }
    OscillationStats stats = oscillation_stats(ex);
    CHECK(stats.osc_n == 2);
    CHECK(stats.avg_period == doctest::Approx(10.0));
  }
  SUBCASE("sampled sine: amplitude 2 +- 0.01, period 4*pi +- 0.05") {
    Trace trace = fixtures::sine_trace(2.0);
    const auto ex = find_alternating_extrema(trace.signal("s"), 0, 60,
                                             ExtremaMethod::analytical(), 0, trace, cfg);
    OscillationStats stats = oscillation_stats(ex);
    CHECK(std::fabs(stats.avg_amp_pp - 2.0) <= 0.01);
    CHECK(std::fabs(stats.avg_period - 4.0 * kPi) <= 0.05);
  }
  SUBCASE("too few extrema") {
    CHECK_THROWS_WITH_AS(oscillation_stats(extrema_values({1})),
                         doctest::Contains("TooFewExtrema"), Error);
  }
}

TEST_CASE("stats invariants hold on every holding verdict") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> lattice(-4, 4);
  int seen = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = 8 + static_cast<int>(rng() % 40);
    std::vector<double> grid, values;
    for (int i = 0; i < n; ++i) {
      grid.push_back(i);
      values.push_back(0.5 * lattice(rng));
    }
    Trace trace = fixtures::make_trace(grid, {{"s", values}});
    OscillationSpec spec;
    spec.signal = "s";
    spec.window = {0, static_cast<double>(n - 1)};
    spec.amplitude = FeatureConstraint{RelOp::Ge, 0.0};
    spec.amplitude_mode = OscillationSpec::AmplitudeMode::PeakToPeak;
    Verdict v = check_oscillation(trace.signal("s"), spec, trace, cfg);
    if (!v.holds()) continue;
    ++seen;
    const auto& stats = std::get<OscillationStats>(v.witness);
    const std::size_t m = stats.extrema.size();
    REQUIRE(m >= 3);
    CHECK(stats.osc_n == static_cast<long>((m - 1) / 2));
    double amp = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      amp += std::fabs(stats.extrema[i].v - stats.extrema[i + 1].v);
    }
    CHECK(stats.avg_amp_pp == doctest::Approx(amp / (m - 1)).epsilon(1e-12));
    double period = 0;
    for (long i = 1; i <= stats.osc_n; ++i) {
      period += std::fabs(stats.extrema[2 * i - 2].t - stats.extrema[2 * i].t);
    }
    CHECK(stats.avg_period == doctest::Approx(period / stats.osc_n).epsilon(1e-12));
  }
  CHECK(seen > 30);
}

TEST_CASE("reference amplitude of a sine with ref at the mean recovers the peak amplitude") {
  Trace trace = fixtures::sine_trace(2.0);
  OscillationSpec spec = posc_spec("s");
  spec.amplitude = FeatureConstraint{RelOp::Le, 1.0 + 1e-4};
  Verdict v = check_oscillation(trace.signal("s"), spec, trace, cfg);
  CHECK(v.holds());  // every |s(p)-1| is 1 up to sampling error
  spec.amplitude = FeatureConstraint{RelOp::Ge, 1.0 - 1e-4};
  CHECK(check_oscillation(trace.signal("s"), spec, trace, cfg).holds());
}

TEST_CASE("damping classification") {
  SUBCASE("diffs (3,2,1.5) are damped") {
    CHECK(classify_damping(extrema_values({3, 0, 2, 0.5}), cfg) == DampingClass::Damped);
  }
  SUBCASE("the reversed sequence is driven") {
    CHECK(classify_damping(extrema_values({0.5, 2, 0, 3}), cfg) == DampingClass::Driven);
  }
  SUBCASE("equal swings are both") {
    CHECK(classify_damping(extrema_values({0, 2, 0, 2}), cfg) == DampingClass::Both);
  }
  SUBCASE("a mixed profile is neither") {
    CHECK(classify_damping(extrema_values({0, 3, 1, 5, 0}), cfg) == DampingClass::Neither);
  }
  SUBCASE("too few extrema") {
    CHECK_THROWS_AS(classify_damping(extrema_values({1, 2}), cfg), Error);
  }
}

TEST_CASE("reversing the extrema swaps damped and driven") {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> dist(0.0, 3.0);
  for (int round = 0; round < 200; ++round) {
    const int m = 3 + static_cast<int>(rng() % 6);
    std::vector<Extremum> ex;
    for (int i = 0; i < m; ++i) {
      ex.push_back({i % 2 ? ExtremumKind::Max : ExtremumKind::Min,
                    static_cast<std::size_t>(i), static_cast<double>(i), dist(rng)});
    }
    std::vector<Extremum> rev(ex.rbegin(), ex.rend());
    const DampingClass a = classify_damping(ex, cfg);
    const DampingClass b = classify_damping(rev, cfg);
    switch (a) {
      case DampingClass::Damped: CHECK(b == DampingClass::Driven); break;
      case DampingClass::Driven: CHECK(b == DampingClass::Damped); break;
      default: CHECK(a == b); break;
    }
  }
}

TEST_CASE("trend classification uses the least-squares slope") {
  // Swings 3, 1, 2: not monotone, but the fitted slope is negative.
  const auto ex = extrema_values({3, 0, 1, 3});
  CHECK(classify_damping(ex, cfg) == DampingClass::Neither);
  CHECK(classify_damping_trend(ex, cfg) == DampingClass::Damped);
}

TEST_CASE("a damped ringing signal classifies as damped through the property check") {
  // e^(-t/20) * sin(t) + 1 over [0, 30].
  const double dt = 0.01;
  const std::size_t n = 3001;
  std::vector<double> grid(n), values(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = i * dt;
    values[i] = std::exp(-grid[i] / 20.0) * std::sin(grid[i]) + 1.0;
  }
  Trace trace = fixtures::make_trace(grid, {{"s", values}});
  OscillationSpec spec;
  spec.signal = "s";
  spec.window = {0, 30};
  spec.period = FeatureConstraint{RelOp::Lt, 8.0};
  spec.damping = OscillationSpec::Damping::Damped;
  CHECK(check_oscillation(trace.signal("s"), spec, trace, cfg).holds());
  spec.damping = OscillationSpec::Damping::Driven;
  CHECK(check_oscillation(trace.signal("s"), spec, trace, cfg).status == Status::Violated);
}

TEST_CASE("the punctual-derivative method finds the sine oscillation end to end") {
  Trace trace = fixtures::sine_trace(2.0);
  OscillationSpec spec = posc_spec("s");
  spec.method = ExtremaMethod::punctual();
  EvalConfig tuned = cfg;
  tuned.deriv_tol = 0.002;
  Verdict v = check_oscillation(trace.signal("s"), spec, trace, tuned);
  REQUIRE(v.holds());
  const auto& stats = std::get<OscillationStats>(v.witness);
  CHECK(std::fabs(stats.avg_period - 4.0 * kPi) <= 0.1);
}
