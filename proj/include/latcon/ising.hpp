#pragma once

// Even polygonal drawings (even-degree bond subsets) on the d-dimensional
// torus and the high-temperature free-energy coefficients derived from them.

#include <map>
#include <string>
#include <vector>

#include "latcon/core.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

struct DrawingCensus {
  LatticeSpec spec;
  int max_bonds = 0;
  SeriesTable counts;  // r -> B(r), r = 1..max_bonds
  /// side <= max_bonds: cycles winding around the torus may contribute.
  bool winding_warning = false;
  std::vector<std::string> warnings;
};

struct IsingOptions {
  WorkBudget budget = WorkBudget::from_environment();
};

/// Connected even subgraphs with at most max_bonds bonds, each listed once.
struct PolymerList {
  std::vector<int> size;            // bonds per polymer, nondecreasing
  std::vector<int> vertex_offset;   // CSR into vertices
  std::vector<int> vertices;        // sorted vertex set of each polymer
};

/// Every vertex-connected even subgraph of the lattice graph with at most
/// max_bonds bonds, found by closed-trail search from its minimum vertex.
PolymerList enumerate_polymers(const Lattice& lattice, int max_bonds);

/// B(r) for r = 1..max_bonds on any lattice graph (torus or free).
std::vector<BigCount> count_even_subgraphs(const Lattice& lattice, int max_bonds,
                                           const IsingOptions& options = {});

DrawingCensus count_even_drawings(const LatticeSpec& spec, int max_bonds,
                                  const IsingOptions& options = {});

struct BetaSeries {
  std::map<int, Rational> coefficients;  // k -> beta_k, k = 1..max_bonds
  std::vector<std::string> warnings;
};

/// Coefficients of (1/N) log(1 + sum_r B(r) z^r) as an exact formal series.
BetaSeries beta_from_counts(const DrawingCensus& census);

/// Closed-form beta_k(d) for k in {4, 6, 8, 10}.
Rational beta_polynomial(int dim, int k);

}  // namespace latcon
