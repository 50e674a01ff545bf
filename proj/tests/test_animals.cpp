#include "doctest.h"

#include "golden.hpp"
#include "latcon/animals.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {

AnimalOptions opts(unsigned threads) {
  AnimalOptions o;
  o.threads = threads;
  return o;
}

}  // namespace

TEST_CASE("polyomino counts match the set-growth oracle") {
  auto census = count_polyominoes(8, opts(2));
  auto brute = oracle::polyominoes(8);
  for (int n = 1; n <= 8; ++n) CHECK(census.counts.at(n) == brute[n]);
  CHECK(census.counts.at(1) == 1);
  CHECK(census.counts.at(2) == 2);
  CHECK(census.counts.at(3) == 6);
}

TEST_CASE("tabulated polyomino counts") {
  auto expected = golden::sequence("polyominoes");
  int max_n = static_cast<int>(expected.size()) - 1;
  auto census = count_polyominoes(max_n, opts(2));
  for (int n = 1; n <= max_n; ++n) CHECK(census.counts.at(n) == expected[n]);
}

TEST_CASE("census does not depend on threads or split depth") {
  auto a = count_polyominoes(12, opts(1));
  auto b = count_polyominoes(12, opts(4));
  AnimalOptions deep = opts(3);
  deep.split_depth = 8;
  auto c = count_polyominoes(12, deep);
  CHECK(a.counts.values == b.counts.values);
  CHECK(a.counts.values == c.counts.values);
}

TEST_CASE("bounding-box tally") {
  auto census = count_polyominoes(9, opts(1));
  auto boxes = count_polyominoes_by_box(9, opts(1));
  std::vector<BigCount> per_order(10);
  for (const auto& [key, count] : boxes) {
    auto [n, w, h] = key;
    per_order[n] += count;
    CHECK(w + h - 1 <= n);
    CHECK(w * h >= n);
    auto mirrored = boxes.find({n, h, w});
    REQUIRE(mirrored != boxes.end());
    CHECK(mirrored->second == count);
  }
  for (int n = 1; n <= 9; ++n) CHECK(per_order[n] == census.counts.at(n));
  CHECK(boxes.at({4, 4, 1}) == 1);
  CHECK(boxes.at({4, 2, 2}) == 1);
}

TEST_CASE("growth constant") {
  AnimalCensus geometric;
  geometric.max_order = 12;
  for (int n = 1; n <= 12; ++n) geometric.counts.values[n] = BigCount(1) << n;
  CHECK(alpha_estimate(geometric).value == doctest::Approx(2.0).epsilon(1e-13));

  auto census = count_polyominoes(14, opts(2));
  auto alpha = alpha_estimate(census);
  CHECK(alpha.value > 3.791);
  CHECK(alpha.value < 4.649551);
  CHECK(std::abs(alpha.value - 4.06265) <= 0.15);
  CHECK_FALSE(alpha.has_flag("ratio-above-upper-bound"));

  CHECK_THROWS_AS(alpha_estimate(count_polyominoes(6, opts(1))), DomainError);
  CHECK_THROWS_AS(count_polyominoes(0), DomainError);
}
