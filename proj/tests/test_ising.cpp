#include "doctest.h"

#include "latcon/ising.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {

LatticeSpec torus(int dim, int side) {
  return {dim, side, Boundary::Torus, dim == 2 ? Adjacency::SquareNN : Adjacency::CubicNN};
}

void check_against_cycle_space(const LatticeSpec& spec, int max_bonds) {
  Lattice lat(spec);
  auto brute = oracle::even_subgraphs(lat);
  auto counts = count_even_subgraphs(lat, max_bonds);
  REQUIRE(counts.size() == static_cast<std::size_t>(max_bonds) + 1);
  for (int r = 1; r <= max_bonds; ++r) {
    INFO("r = " << r);
    CHECK(counts[r] == brute[r]);
  }
}

}  // namespace

TEST_CASE("even subgraph counts match the cycle-space scan") {
  check_against_cycle_space(torus(2, 4), 12);
  check_against_cycle_space(torus(3, 2), 10);
  check_against_cycle_space(torus(2, 3), 14);
  check_against_cycle_space({2, 5, Boundary::Free, Adjacency::SquareNN}, 16);
}

TEST_CASE("drawing counts on larger tori") {
  auto d2 = count_even_drawings(torus(2, 10), 8);
  const BigCount n2 = 100;
  CHECK(d2.counts.at(4) == n2);
  CHECK(d2.counts.at(6) == 2 * n2);
  CHECK(d2.counts.at(8) == n2 * (n2 + 9) / 2);
  for (int r : {1, 2, 3, 5, 7}) CHECK(d2.counts.at(r) == 0);
  CHECK_FALSE(d2.winding_warning);

  auto d3 = count_even_drawings(torus(3, 8), 6);
  const BigCount n3 = 512;
  CHECK(d3.counts.at(4) == 3 * n3);
  CHECK(d3.counts.at(6) == 22 * n3);
}

TEST_CASE("free energy coefficients") {
  auto d2 = beta_from_counts(count_even_drawings(torus(2, 10), 8));
  CHECK(d2.coefficients.at(4) == 1);
  CHECK(d2.coefficients.at(6) == 2);
  CHECK(d2.coefficients.at(8) == Rational(9, 2));
  for (int k : {4, 6, 8}) CHECK(d2.coefficients.at(k) == beta_polynomial(2, k));

  auto d3 = beta_from_counts(count_even_drawings(torus(3, 8), 6));
  CHECK(d3.coefficients.at(6) == 22);
  for (int k : {4, 6}) CHECK(d3.coefficients.at(k) == beta_polynomial(3, k));
}

TEST_CASE("coefficients do not depend on the torus size once it exceeds r") {
  auto a = beta_from_counts(count_even_drawings(torus(2, 10), 9));
  auto b = beta_from_counts(count_even_drawings(torus(2, 12), 9));
  CHECK(a.coefficients == b.coefficients);
}

TEST_CASE("closed forms") {
  CHECK(beta_polynomial(2, 4) == 1);
  CHECK(beta_polynomial(3, 6) == 22);
  for (int k : {4, 6, 8, 10}) CHECK(beta_polynomial(1, k) == 0);
  CHECK_THROWS_AS(beta_polynomial(2, 5), DomainError);
}

TEST_CASE("small tori warn about winding cycles") {
  auto c = count_even_drawings(torus(2, 4), 6);
  CHECK(c.winding_warning);
  CHECK_FALSE(c.warnings.empty());
  CHECK(c.counts.at(4) == oracle::even_subgraphs(Lattice(torus(2, 4)))[4]);
  CHECK_THROWS_AS(count_even_drawings({2, 4, Boundary::Free, Adjacency::SquareNN}, 4), DomainError);
  CHECK_THROWS_AS(count_even_drawings(torus(2, 4), 0), DomainError);
}
