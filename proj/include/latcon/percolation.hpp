#pragma once

// Site and bond percolation on free-boundary n x n grids: exact cluster
// labeling, Monte Carlo cluster statistics, crossing-probability thresholds,
// and the exactly known mean cluster densities.

#include <cstdint>
#include <optional>
#include <vector>

#include "latcon/core.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

enum class PercMode { Site, Bond };
enum class PercLattice { Square, Triangular };

std::string to_string(PercMode m);
std::string to_string(PercLattice l);

struct SiteConfig {
  LatticeSpec spec;                    // 2D, Free, SquareNN
  std::vector<std::uint8_t> occupancy; // row-major, n*n

  /// Builds a config from a square 0/1 matrix.
  static SiteConfig from_matrix(const std::vector<std::vector<int>>& rows);
  void validate() const;
};

struct BondConfig {
  LatticeSpec spec;                         // 2D, Free, SquareNN or Triangular
  std::vector<std::uint8_t> bond_occupancy; // indexed like bonds(spec)

  /// Builds a square-lattice config from the interleaved array layout: 2n-1
  /// rows alternating n-1 horizontal bonds of lattice row i and n vertical
  /// bonds between rows i and i+1.
  static BondConfig from_array(const std::vector<std::vector<int>>& rows);
  void validate() const;
};

struct ClusterStats {
  std::vector<std::int64_t> cluster_sizes;  // ascending; bonds in bond mode
  std::int64_t zero_clusters = 0;           // bond mode only
  std::int64_t total_clusters = 0;
  std::int64_t sites_in_clusters = 0;
};

ClusterStats label_clusters_site(const SiteConfig& config);
ClusterStats label_clusters_bond(const BondConfig& config);

/// (sum of sizes) / (number of positive-size clusters); nullopt when there
/// are none.
std::optional<Rational> mean_cluster_size(const ClusterStats& stats);

struct MonteCarloOptions {
  unsigned threads = default_threads();
  WorkBudget budget = WorkBudget::from_environment();
};

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
  std::int64_t skipped = 0;  // samples without clusters (mean cluster size)
};

/// Mean of total_clusters / n^2. Deterministic in (seed, trials) for any
/// thread count.
MonteCarloEstimate mean_cluster_density(PercMode mode, PercLattice lattice, double p, int n,
                                        std::int64_t trials, std::uint64_t seed,
                                        const MonteCarloOptions& options = {});

/// Mean over samples of the mean cluster size (0-clusters excluded).
MonteCarloEstimate mean_cluster_size(PercMode mode, PercLattice lattice, double p, int n,
                                     std::int64_t trials, std::uint64_t seed,
                                     const MonteCarloOptions& options = {});

struct DensityExtrapolation {
  std::vector<int> sides;
  std::vector<MonteCarloEstimate> raw;
  double value = 0.0;      // polynomial extrapolation in 1/n to n -> infinity
  double std_error = 0.0;  // propagated from the raw standard errors
};

/// Cluster densities at each side (same seed per side) extrapolated in 1/n
/// through all points, removing the free-boundary surface terms.
DensityExtrapolation extrapolate_cluster_density(PercMode mode, PercLattice lattice, double p,
                                                 const std::vector<int>& sides,
                                                 std::int64_t trials, std::uint64_t seed,
                                                 const MonteCarloOptions& options = {});

/// (3 sqrt 3 - 5) / 2.
HighReal exact_kb_half_closed();

struct KbIntegralResult {
  HighReal value;
  double truncation_bound = 0.0;   // bound on the dropped tail of the x integral
  double quadrature_error = 0.0;   // largest Gauss-Kronrod error estimate
  double derivative_spread = 0.0;  // change between the last two extrapolants
};

/// -(1/8) cot y d/dy { (1/y) int sech(pi x / 2y) ln((cosh x - cos 2y)/(cosh x - 1)) dx }
/// at y = pi/3, integrating x over [-truncation, truncation].
KbIntegralResult kb_half_integral(double truncation = 40.0, double step = 1e-3);
HighReal exact_kb_half_integral();

/// 35/4 - (3/2) csc(pi/18), checked against the cube-root form; throws
/// ConsistencyError if they differ by more than 1e-12.
HighReal exact_kb_triangular();

/// 2 sin(pi/18).
HighReal pc_bond_triangular();

/// Per-side crossing points (R_n(p) = 1/2 by bisection on the empirical
/// left-right crossing probability) fitted by p_n = p_c + a n^(-3/4).
EstimateReport estimate_pc(PercMode mode, PercLattice lattice, const std::vector<int>& sides,
                           std::int64_t trials, std::uint64_t seed,
                           const MonteCarloOptions& options = {});

}  // namespace latcon
