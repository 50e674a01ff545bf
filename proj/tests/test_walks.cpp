#include "doctest.h"

#include "golden.hpp"
#include "latcon/walks.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {

WalkOptions opts(unsigned threads, bool dihedral = true) {
  WalkOptions o;
  o.threads = threads;
  o.dihedral = dihedral;
  return o;
}

}  // namespace

TEST_CASE("walk counts match brute force") {
  for (auto [dim, max_n] : {std::pair{2, 8}, {3, 6}, {4, 4}}) {
    auto census = enumerate_saw(dim, max_n, opts(2));
    for (int n = 0; n <= max_n; ++n) {
      auto o = oracle::saw(dim, n);
      CHECK(census.counts.at(n) == o.count);
      CHECK(census.sq_disp_sums.at(n) == o.sq_sum);
    }
  }
}

TEST_CASE("first three counts follow the closed forms") {
  for (int d = 2; d <= 6; ++d) {
    auto census = enumerate_saw(d, 2, opts(1));
    CHECK(census.counts.at(0) == 1);
    CHECK(census.counts.at(1) == 2 * d);
    CHECK(census.counts.at(2) == 2 * d * (2 * d - 1));
    CHECK(mean_square_displacement(census, 1) == 1);
  }
}

TEST_CASE("mean square displacement") {
  auto census = enumerate_saw(2, 3, opts(1));
  CHECK(mean_square_displacement(census, 0) == 0);
  CHECK(mean_square_displacement(census, 2) == Rational(8, 3));
  CHECK(census.sq_disp_sums.at(2) == golden::value("saw_d2_sq_disp_n2"));
  CHECK(mean_square_displacement(census, 3) == Rational(41, 9));
}

TEST_CASE("tabulated counts") {
  auto d2 = golden::sequence("saw_d2");
  auto c2 = enumerate_saw(2, static_cast<int>(d2.size()) - 1, opts(2));
  for (std::size_t n = 0; n < d2.size(); ++n) CHECK(c2.counts.at(int(n)) == d2[n]);
  auto d3 = golden::sequence("saw_d3");
  auto c3 = enumerate_saw(3, static_cast<int>(d3.size()) - 1, opts(2));
  for (std::size_t n = 0; n < d3.size(); ++n) CHECK(c3.counts.at(int(n)) == d3[n]);
}

TEST_CASE("symmetry reduction and thread count do not change the census") {
  for (int dim : {2, 3}) {
    int max_n = dim == 2 ? 12 : 8;
    auto a = enumerate_saw(dim, max_n, opts(1, true));
    auto b = enumerate_saw(dim, max_n, opts(1, false));
    auto c = enumerate_saw(dim, max_n, opts(4, true));
    CHECK(a.counts.values == b.counts.values);
    CHECK(a.sq_disp_sums.values == b.sq_disp_sums.values);
    CHECK(a.counts.values == c.counts.values);
    CHECK(a.sq_disp_sums.values == c.sq_disp_sums.values);
  }
}

TEST_CASE("counts are submultiplicative and respect the lattice symmetry orbits") {
  // Straight walks form one orbit of size 2d; every other walk lies in an
  // orbit of size 8 (d=2), or 24 or 48 (d=3).
  auto census = enumerate_saw(2, 14, opts(2));
  for (int m = 1; m <= 14; ++m) {
    CHECK((census.counts.at(m) - 4) % 8 == 0);
    for (int k = 1; m + k <= 14; ++k)
      CHECK(census.counts.at(m + k) <= census.counts.at(m) * census.counts.at(k));
  }
  auto d3 = enumerate_saw(3, 8, opts(2));
  for (int m = 1; m <= 8; ++m) CHECK((d3.counts.at(m) - 6) % 24 == 0);
}

TEST_CASE("connective constant and exponent estimates") {
  auto census = enumerate_saw(2, 16, opts(2));
  auto mu = mu_estimate(census);
  CHECK(mu.value > 2.62002);
  CHECK(mu.value < 2.6939);
  CHECK(std::abs(mu.value - 2.6381585) < 0.02);
  for (int n : mu.indices) CHECK(n % 2 == 0);

  auto nu = fit_nu(census);
  CHECK(nu.window_lo == 9);
  CHECK(nu.window_hi == 16);
  CHECK(nu.exponent > 0.6);
  CHECK(nu.exponent < 0.85);

  auto small = enumerate_saw(2, 6, opts(1));
  CHECK_THROWS_AS(mu_estimate(small), DomainError);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(enumerate_saw(0, 4), DomainError);
  CHECK_THROWS_AS(enumerate_saw(2, -1), DomainError);
  WalkOptions tiny;
  tiny.budget = WorkBudget(1e3);
  CHECK_THROWS_AS(enumerate_saw(2, 20, tiny), BudgetExceeded);
}
