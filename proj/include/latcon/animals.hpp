#pragma once

// Fixed site polyominoes (lattice animals on the square lattice) by
// Redelmeier's untried-set enumeration.

#include <map>
#include <tuple>

#include "latcon/core.hpp"

namespace latcon {

struct AnimalCensus {
  int max_order = 0;
  SeriesTable counts;  // n -> A(n)
};

struct AnimalOptions {
  unsigned threads = default_threads();
  int split_depth = 5;
  WorkBudget budget = WorkBudget::from_environment();
};

AnimalCensus count_polyominoes(int max_order, const AnimalOptions& options = {});

/// (order, bounding-box width, bounding-box height) -> number of fixed
/// polyominoes whose bounding box has exactly that shape.
using BoxTally = std::map<std::tuple<int, int, int>, std::uint64_t>;
BoxTally count_polyominoes_by_box(int max_order, const AnimalOptions& options = {});

/// Growth constant from A(n+1)/A(n), Richardson-accelerated in 1/n.
/// Flags "ratio-above-upper-bound" when a ratio at n >= 10 exceeds the
/// published upper bound, and "ratio-above-upper-bound-small-n" below that.
EstimateReport alpha_estimate(const AnimalCensus& census, int order = 2);

}  // namespace latcon
