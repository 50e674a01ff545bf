#pragma once

// Dimer and monomer-dimer statistics on free-boundary grids.

#include "latcon/core.hpp"

namespace latcon {

enum class CoveringKind { DimerOnly2D, MonomerDimer2D, DimerOnly3D };

struct CoveringCensus {
  CoveringKind kind = CoveringKind::DimerOnly2D;
  SeriesTable counts;  // n -> count on the n x n (x n) free lattice
};

struct CoveringOptions {
  /// Process cells column-major instead of row-major.
  bool column_major = false;
  WorkBudget budget = WorkBudget::from_environment();
};

/// Matchings of the rows x cols grid graph by cell-by-cell profile DP.
/// With monomers allowed every (possibly empty) matching counts; otherwise
/// only perfect matchings.
BigCount count_grid_matchings(int rows, int cols, bool allow_monomers,
                              const CoveringOptions& options = {});

/// f(n): dimer coverings of the n x n grid.
BigCount count_dimer_coverings_2d(int n, const CoveringOptions& options = {});
/// g(n): monomer-dimer arrangements of the n x n grid.
BigCount count_monomer_dimer(int n, const CoveringOptions& options = {});
/// h(n): dimer coverings of the n x n x n grid.
BigCount count_dimer_coverings_3d(int n, const CoveringOptions& options = {});

CoveringCensus covering_census(CoveringKind kind, int n_max, const CoveringOptions& options = {});

struct KasteleynValue {
  HighReal value;
  BigCount rounded;
  double distance_to_integer = 0.0;
};

/// prod_{j<=m, k<=n} (4cos^2(j pi/(m+1)) + 4cos^2(k pi/(n+1)))^(1/4), in
/// 50-digit arithmetic. Throws DomainError for odd m*n and ConsistencyError
/// when the value is not within 0.25 of an integer.
KasteleynValue kasteleyn_count(int m, int n);

/// Catalan's constant by the alternating series with Cohen-Villegas-Zagier
/// acceleration; `error_bound` receives the truncation bound.
HighReal catalan_constant(HighReal* error_bound = nullptr);
/// exp(2G/pi).
HighReal dimer_constant_2d();

/// f(n)^{2/N} over even n <= n_max, Richardson in 1/n.
EstimateReport dimer_entropy_estimate(int n_max, const CoveringOptions& options = {});
/// Same extrapolation over caller-supplied (n, f(n)) data.
EstimateReport dimer_entropy_from_counts(const SeriesTable& counts);

/// g(n)^{1/N} for n <= n_max, Richardson in 1/n.
EstimateReport kappa_estimate(int n_max, const CoveringOptions& options = {});
EstimateReport kappa_from_counts(const SeriesTable& counts);

/// (2/N) ln h(n) for available even n; flagged low-confidence, and
/// "outside-rigorous-interval" when the last value misses the bounds.
EstimateReport lambda_estimate(const SeriesTable& h_counts);
EstimateReport lambda_estimate(const CoveringOptions& options = {});

}  // namespace latcon
