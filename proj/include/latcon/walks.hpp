#pragma once

// Exact enumeration of self-avoiding walks from the origin of the infinite
// d-dimensional hypercubic lattice.

#include "latcon/analysis.hpp"
#include "latcon/core.hpp"

namespace latcon {

struct WalkCensus {
  int dim = 0;
  int max_len = 0;
  SeriesTable counts;        // n -> c(n)
  SeriesTable sq_disp_sums;  // n -> sum over walks of |w(n)|^2
};

struct WalkOptions {
  unsigned threads = default_threads();
  /// Count only walks whose first deviation from the +e0 axis is +e1 and
  /// weight by 2(d-1); otherwise only the first step is fixed.
  bool dihedral = true;
  /// Depth at which the search tree is cut into independent tasks.
  int split_depth = 4;
  WorkBudget budget = WorkBudget::from_environment();
};

WalkCensus enumerate_saw(int dim, int max_len, const WalkOptions& options = {});

/// Exact s(n) = sq_disp_sums[n] / counts[n].
Rational mean_square_displacement(const WalkCensus& census, int n);

/// Connective constant from sqrt(c(n)/c(n-2)) over the n sharing the parity
/// of max_len, Richardson-accelerated in 1/n.
EstimateReport mu_estimate(const WalkCensus& census, int order = 2);

/// gamma from ln(c(n)/mu^n) against ln n on the upper half of n >= 1.
FitResult fit_gamma(const WalkCensus& census, double mu);
/// nu from ln s(n) against ln n on the upper half of n >= 1.
FitResult fit_nu(const WalkCensus& census);

}  // namespace latcon
