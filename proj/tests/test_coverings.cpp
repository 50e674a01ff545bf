#include "doctest.h"

#include "golden.hpp"
#include "latcon/coverings.hpp"
#include "oracles.hpp"

using namespace latcon;

TEST_CASE("matching counts equal the edge-subset scan") {
  for (int rows = 1; rows <= 4; ++rows)
    for (int cols = 1; cols <= 4; ++cols) {
      INFO(rows << " x " << cols);
      CHECK(count_grid_matchings(rows, cols, false) == oracle::grid_matchings(rows, cols, true));
      CHECK(count_grid_matchings(rows, cols, true) == oracle::grid_matchings(rows, cols, false));
    }
  CHECK(count_grid_matchings(3, 5, true) == oracle::grid_matchings(3, 5, false));
  CHECK(count_grid_matchings(2, 7, false) == oracle::grid_matchings(2, 7, true));
}

TEST_CASE("printed and frozen counts") {
  CHECK(count_monomer_dimer(1) == golden::at("monomer_dimer", 1));
  CHECK(count_monomer_dimer(2) == golden::at("monomer_dimer", 2));
  CHECK(count_monomer_dimer(3) == golden::value("monomer_dimer_3"));
  CHECK(count_dimer_coverings_3d(2) == golden::at("dimer_3d", 2));
  CHECK(count_dimer_coverings_3d(3) == 0);
  CHECK(count_dimer_coverings_2d(2) == golden::at("dimer_2d", 2));
  CHECK(count_dimer_coverings_2d(4) == golden::at("dimer_2d", 4));
  CHECK(count_dimer_coverings_2d(8) == golden::value("dimer_2d_8"));
  for (int n : {1, 3, 5, 7, 9}) CHECK(count_dimer_coverings_2d(n) == 0);
}

TEST_CASE("scan order does not matter") {
  CoveringOptions col;
  col.column_major = true;
  for (int n = 1; n <= 8; ++n) {
    CHECK(count_dimer_coverings_2d(n) == count_dimer_coverings_2d(n, col));
    CHECK(count_monomer_dimer(n) == count_monomer_dimer(n, col));
  }
  CHECK(count_grid_matchings(3, 6, false, col) == count_grid_matchings(3, 6, false));
  CHECK(count_dimer_coverings_3d(2, col) == 9);
}

TEST_CASE("structural relations") {
  for (int n = 1; n <= 8; ++n) CHECK(count_monomer_dimer(n) >= count_dimer_coverings_2d(n));
  // Odd for n <= 3, but not in general.
  for (int n = 1; n <= 3; ++n) CHECK(count_monomer_dimer(n) % 2 == 1);
  CHECK(count_monomer_dimer(4) == oracle::grid_matchings(4, 4, false));
  CHECK(count_monomer_dimer(4) % 2 == 0);
}

TEST_CASE("product formula") {
  CHECK(kasteleyn_count(2, 2).rounded == 2);
  CHECK(kasteleyn_count(4, 4).rounded == 36);
  for (int n = 2; n <= 12; n += 2) {
    auto k = kasteleyn_count(n, n);
    CHECK(k.rounded == count_dimer_coverings_2d(n));
    CHECK(k.distance_to_integer < 1e-20);
  }
  CHECK(kasteleyn_count(3, 4).rounded == count_grid_matchings(3, 4, false));
  CHECK_THROWS_AS(kasteleyn_count(3, 3), DomainError);
}

TEST_CASE("Catalan's constant and the dimer constant") {
  HighReal bound;
  HighReal g = catalan_constant(&bound);
  HighReal ref("0.915965594177219015054603514932384110774");
  CHECK(static_cast<double>(abs(g - ref)) < 1e-30);
  CHECK(static_cast<double>(bound) < 1e-30);
  HighReal d("1.79162281206959342");
  CHECK(static_cast<double>(abs(dimer_constant_2d() - d)) < 1e-17);
}

TEST_CASE("estimates") {
  SeriesTable geometric;
  for (int n = 2; n <= 12; n += 2) {
    BigCount v = 1;
    for (int i = 0; i < n * n / 2; ++i) v *= 3;
    geometric.values[n] = v;
  }
  CHECK(dimer_entropy_from_counts(geometric).value == doctest::Approx(3.0).epsilon(1e-12));

  SeriesTable powers;
  for (int n = 1; n <= 10; ++n) powers.values[n] = BigCount(1) << (n * n);
  CHECK(kappa_from_counts(powers).value == doctest::Approx(2.0).epsilon(1e-12));

  auto dimer = dimer_entropy_estimate(8);
  for (std::size_t i = 1; i < dimer.raw.size(); ++i) CHECK(dimer.raw[i] > dimer.raw[i - 1]);

  auto kappa = kappa_estimate(10);
  CHECK(std::abs(kappa.value - 1.940215351) < 0.01);
  CHECK(std::abs(kappa.value - 1.940215351) < std::abs(kappa.raw.back() - 1.940215351));

  CHECK_THROWS_AS(dimer_entropy_estimate(7), DomainError);
  CHECK_THROWS_AS(kappa_estimate(8), DomainError);
}

TEST_CASE("three-dimensional constant is flagged at finite size") {
  SeriesTable h;
  h.values[2] = 9;
  h.values[4] = BigCount("5051532105");
  auto r = lambda_estimate(h);
  CHECK(r.raw.back() == doctest::Approx(2.0 / 64.0 * std::log(5051532105.0)).epsilon(1e-12));
  CHECK(r.has_flag("outside-rigorous-interval"));
}
