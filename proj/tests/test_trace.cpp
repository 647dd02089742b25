#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "sigprop/trace.hpp"
#include "support/fixtures.hpp"

using namespace sigprop;

TEST_CASE("loads a minimal well-formed csv") {
  std::istringstream in("time,s\n0,1\n1,1\n2,1\n");
  Trace trace = read_trace_csv(in);
  CHECK(trace.size() == 3);
  CHECK(trace.signal("s").value_at_index(2) == 1.0);
  CHECK(trace.length() == 2.0);
}

TEST_CASE("rejects non-monotone timestamps") {
  std::istringstream in("time,s\n0,1\n2,1\n1,1\n");
  CHECK_THROWS_WITH_AS(read_trace_csv(in), doctest::Contains("NonMonotoneTime"), Error);
}

TEST_CASE("rejects malformed rows and non-finite cells") {
  std::istringstream bad_arity("time,s\n0,1\n1\n");
  CHECK_THROWS_AS(read_trace_csv(bad_arity), Error);

  std::istringstream bad_header("t,s\n0,1\n1,1\n");
  CHECK_THROWS_AS(read_trace_csv(bad_header), Error);

  std::istringstream nan_cell("time,s\n0,1\n1,nan\n");
  CHECK_THROWS_WITH_AS(read_trace_csv(nan_cell), doctest::Contains("NonFiniteValue"), Error);
}

TEST_CASE("csv round-trip is bit exact") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  std::vector<double> grid, values;
  for (int i = 0; i < 40; ++i) {
    grid.push_back(i * 0.1 + 0.01 * dist(rng));
    values.push_back(dist(rng) / 3.0);
  }
  std::sort(grid.begin(), grid.end());
  Trace trace = fixtures::make_trace(grid, {{"s", values}});

  std::ostringstream out;
  write_trace_csv(trace, out);
  std::istringstream in(out.str());
  Trace reloaded = read_trace_csv(in);
  REQUIRE(reloaded.size() == trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    CHECK(reloaded.grid()[i] == trace.grid()[i]);
    CHECK(reloaded.signal("s").value_at_index(i) == trace.signal("s").value_at_index(i));
  }
}

TEST_CASE("value_at reads samples and interpolates") {
  Trace trace = fixtures::make_trace({0, 1}, {{"s", {0, 2}}});
  const Signal& s = trace.signal("s");
  CHECK(s.value_at(1.0, InterpolationMode::Grid) == 2.0);
  CHECK(s.value_at(0.5, InterpolationMode::Linear) == doctest::Approx(1.0));
  CHECK(s.value_at(0.0, InterpolationMode::Linear) == 0.0);

  CHECK_THROWS_WITH_AS(s.value_at(2.0, InterpolationMode::Linear),
                       doctest::Contains("OutOfDomain"), Error);
  CHECK_THROWS_AS(s.value_at(0.5, InterpolationMode::Grid), Error);
  CHECK_THROWS_AS(s.value_at(1.0, InterpolationMode::Linear), Error);  // t = |s|
}

TEST_CASE("linear value_at is Lipschitz in the segment slopes") {
  Trace trace = fixtures::assertion_pair();
  const Signal& s = trace.signal("s1");
  double max_slope = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    max_slope = std::max(max_slope,
                         std::fabs((s.value_at_index(i + 1) - s.value_at_index(i)) /
                                   (s.time_at(i + 1) - s.time_at(i))));
  }
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> pick(0.0, s.length() - 0.11);
  for (int k = 0; k < 200; ++k) {
    const double t = pick(rng);
    const double h = 0.1;
    const double a = s.value_at(t, InterpolationMode::Linear);
    const double b = s.value_at(t + h, InterpolationMode::Linear);
    CHECK(std::fabs(a - b) <= max_slope * h + 1e-12);
  }
}

TEST_CASE("finite differences") {
  SUBCASE("constant signal has zero derivative") {
    Trace trace = fixtures::make_trace({0, 1, 2, 3}, {{"s", {5, 5, 5, 5}}});
    Signal d = trace.signal("s").finite_difference(1);
    for (double v : d.values()) CHECK(v == 0.0);
    CHECK(d.size() == 3);
  }
  SUBCASE("ramp 2t has derivative exactly 2 and second derivative 0") {
    Trace trace = fixtures::make_trace({0, 1, 2, 3, 4}, {{"s", {0, 2, 4, 6, 8}}});
    Signal d1 = trace.signal("s").finite_difference(1);
    for (double v : d1.values()) CHECK(v == 2.0);
    Signal d2 = trace.signal("s").finite_difference(2);
    for (double v : d2.values()) CHECK(v == 0.0);
    CHECK(d2.size() == 3);
  }
  SUBCASE("derivative of c*t is exactly c on a non-uniform grid") {
    std::vector<double> grid{0, 0.5, 0.7, 1.9, 2.0, 3.25};
    const double c = -1.75;
    std::vector<double> values;
    for (double t : grid) values.push_back(c * t);
    Trace trace = fixtures::make_trace(grid, {{"s", values}});
    Signal d = trace.signal("s").finite_difference(1);
    for (double v : d.values()) CHECK(v == doctest::Approx(c).epsilon(1e-12));
  }
  SUBCASE("sampled sine matches the analytic cosine within 0.01") {
    Trace trace = fixtures::sine_trace(1.0, 0.01, 6.0);
    Signal d = trace.signal("s").finite_difference(1);
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(std::fabs(d.value_at_index(i) - std::cos(d.time_at(i))) <= 0.01);
    }
  }
  SUBCASE("too few samples") {
    Trace trace = fixtures::make_trace({0, 1}, {{"s", {1, 2}}});
    CHECK_THROWS_WITH_AS(trace.signal("s").finite_difference(2),
                         doctest::Contains("TooFewSamples"), Error);
  }
}

TEST_CASE("grid quantification excludes the final sample and clips to the window") {
  Trace trace = fixtures::make_trace({0, 1, 2, 3}, {{"s", {1, 2, 3, 4}}});
  const Signal& s = trace.signal("s");
  CHECK(grid_indices_in(s, 0, 3) == std::vector<std::size_t>{0, 1, 2});
  CHECK(grid_indices_in(s, 1.2, 2.7) == std::vector<std::size_t>{2});
  CHECK(grid_indices_in(s, 5, 9).empty());
}

TEST_CASE("the built-in clock signal mirrors the grid") {
  Trace trace = fixtures::make_trace({0, 0.5, 1.5}, {{"s", {1, 2, 3}}});
  const Signal& clock = trace.signal("time");
  CHECK(clock.value_at_index(2) == 1.5);
  CHECK_THROWS_WITH_AS(trace.signal("nope"), doctest::Contains("UnknownSignal"), Error);
}
