#pragma once

// Row transfer operators for the hard-core models (free boundary) and the
// square ice model (torus), with exact counts and entropy constants.

#include <string>

#include "latcon/core.hpp"

namespace latcon {

enum class EntropyModel { Ice, HardSquare, HardHexagon, King };

std::string to_string(EntropyModel m);

struct EntropyOptions {
  unsigned threads = default_threads();
  WorkBudget budget = WorkBudget::from_environment();
};

/// Binary rows x cols arrays with no adjacent pair of 1s under the model's
/// adjacency. Model must be a hard-core model.
BigCount count_hard_configs(EntropyModel model, int rows, int cols,
                            const EntropyOptions& options = {});
inline BigCount count_hard_configs(EntropyModel model, int n, const EntropyOptions& options = {}) {
  return count_hard_configs(model, n, n, options);
}

/// theta(n): ice-rule orientations of the n x n torus, Tr(T^n).
BigCount count_ice_states(int n, const EntropyOptions& options = {});

/// Ice states whose two winding arrow fluxes are both divisible by 3; these
/// are exactly the orientations that lift to face 3-colorings.
BigCount count_ice_states_coloring_sector(int n, const EntropyOptions& options = {});

/// Proper 3-colorings of the faces of the n x n torus.
BigCount count_three_colorings(int n, const EntropyOptions& options = {});

struct EigenResult {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Dominant eigenvalue of the width-n row transfer operator by power
/// iteration (Rayleigh quotient ratio tolerance 1e-12). Hard models use a
/// free strip; ice uses a periodic row.
EigenResult dominant_eigenvalue(EntropyModel model, int width);

/// Reachability check on the explicit operator (hard models: whole state
/// space; ice: each conserved up-arrow sector). Width <= 12.
bool transfer_irreducible(EntropyModel model, int width);

/// Hard models: ratios Lambda(n+1)/Lambda(n), Aitken-accelerated.
/// Ice: Lambda(n)^(1/n) over even n, Richardson in 1/n^2.
EstimateReport entropy_constant(EntropyModel model, int n_max, const EntropyOptions& options = {});

/// Value of the degree-24 hard hexagon polynomial at x divided by
/// sum |a_i| x^i, evaluated in 50-digit arithmetic.
HighReal hexagon_minpoly_residual(const HighReal& x);

}  // namespace latcon
