#include "doctest.h"

#include <cmath>

#include "latcon/analysis.hpp"

using namespace latcon;

TEST_CASE("aitken") {
  auto c = aitken({3.5, 3.5, 3.5, 3.5, 3.5});
  REQUIRE(c.values.size() == 3);
  for (double v : c.values) CHECK(v == 3.5);
  CHECK(c.flagged.empty());

  std::vector<double> geo;
  for (int n = 0; n <= 6; ++n) geo.push_back(2.0 + std::pow(3.0, -n));
  auto g = aitken(geo);
  CHECK(g.values.size() == geo.size() - 2);
  CHECK(std::abs(g.values.back() - 2.0) < 1e-6);

  std::vector<double> alt;
  for (int n = 0; n < 8; ++n) alt.push_back(std::pow(-2.0, n) * (n + 1));
  auto a = aitken(alt);
  CHECK(a.values.size() == alt.size() - 2);
  for (double v : a.values) CHECK(std::isfinite(v));

  // A straight line has no geometric error term: the second difference vanishes.
  auto line = aitken({1.0, 2.0, 3.0, 4.0});
  CHECK(line.flagged == std::vector<int>{2, 3});
  CHECK(line.values == std::vector<double>{3.0, 4.0});

  CHECK_THROWS_AS(aitken({1.0, 2.0}), DomainError);
}

TEST_CASE("richardson removes polynomial corrections exactly") {
  std::vector<int> ns{4, 8};
  std::vector<double> s1;
  for (int n : ns) s1.push_back(1.25 + 3.0 / n);
  auto r1 = richardson(ns, s1, 1);
  REQUIRE(r1.values.size() == 1);
  CHECK(r1.values[0] == doctest::Approx(1.25).epsilon(1e-14));

  std::vector<int> ms{5, 6, 7, 8, 9};
  std::vector<double> s2;
  for (int n : ms) s2.push_back(0.5 - 2.0 / n + 7.0 / (n * n));
  auto r2 = richardson(ms, s2, 2);
  REQUIRE(r2.values.size() == 3);
  for (double v : r2.values) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));

  std::vector<double> s3;
  for (int n : ms) s3.push_back(9.0 + 1.0 / (n * n) - 4.0 / (double(n) * n * n * n));
  auto r3 = richardson(ms, s3, 2, 2.0);
  for (double v : r3.values) CHECK(v == doctest::Approx(9.0).epsilon(1e-12));

  CHECK_THROWS_AS(richardson({1, 2}, {1.0, 2.0}, 2), DomainError);
}

TEST_CASE("richardson_estimate reports the trailing term") {
  std::vector<int> ns{6, 7, 8, 9, 10};
  std::vector<double> s;
  for (int n : ns) s.push_back(2.0 + 1.0 / n);
  auto r = richardson_estimate("test", ns, s, 1);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.raw == s);
  CHECK(r.error_proxy < 1e-12);
  r.set_target(2.0);
  REQUIRE(r.residual);
  CHECK(std::abs(*r.residual) < 1e-12);
}

TEST_CASE("exponent fits") {
  std::vector<int> ns;
  std::vector<double> c, s;
  for (int n = 1; n <= 20; ++n) {
    ns.push_back(n);
    c.push_back(std::pow(3.0, n) * std::sqrt(double(n)));
    s.push_back(0.7 * std::pow(double(n), 1.5));
  }
  auto g = fit_exponent(ns, c, FitMode::Growth, 3.0);
  CHECK(std::abs(g.exponent - 1.5) < 1e-6);
  CHECK(g.amplitude == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(g.window_lo == 11);
  CHECK(g.window_hi == 20);
  CHECK(g.residual >= 0.0);
  CHECK(g.residual < 1e-9);

  auto v = fit_exponent(ns, s, FitMode::Displacement);
  CHECK(std::abs(v.exponent - 0.75) < 1e-9);
  CHECK(v.amplitude == doctest::Approx(0.7).epsilon(1e-9));

  CHECK_THROWS_AS(fit_exponent(ns, c, FitMode::Growth), DomainError);
  CHECK_THROWS_AS(fit_exponent({1, 2, 3}, {1.0, 2.0, 3.0}, FitMode::Displacement), DomainError);
  auto bad = s;
  bad[15] = -1.0;
  CHECK_THROWS_AS(fit_exponent(ns, bad, FitMode::Displacement), DomainError);
}

TEST_CASE("fit exponent is unchanged by rescaling the data") {
  std::vector<int> ns;
  std::vector<double> c, scaled, logs, scaled_logs;
  for (int n = 1; n <= 16; ++n) {
    ns.push_back(n);
    double v = std::pow(2.5, n) * std::pow(double(n), 0.3) * (1.0 + 0.2 / n);
    c.push_back(v);
    scaled.push_back(8.0 * v);
    logs.push_back(std::log(v));
    scaled_logs.push_back(std::log(v) + 3.0 * std::log(2.0));
  }
  auto a = fit_exponent(ns, c, FitMode::Growth, 2.5);
  auto b = fit_exponent(ns, scaled, FitMode::Growth, 2.5);
  CHECK(b.exponent == doctest::Approx(a.exponent).epsilon(1e-12));
  CHECK(b.amplitude == doctest::Approx(8.0 * a.amplitude).epsilon(1e-12));
  auto la = fit_exponent_log(ns, logs, FitMode::Growth, 2.5);
  auto lb = fit_exponent_log(ns, scaled_logs, FitMode::Growth, 2.5);
  CHECK(la.exponent == doctest::Approx(a.exponent).epsilon(1e-12));
  CHECK(lb.exponent == doctest::Approx(la.exponent).epsilon(1e-12));
}
