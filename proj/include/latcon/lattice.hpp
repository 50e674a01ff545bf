#pragma once

// Hypercubic lattice geometry: sites, neighbor offsets, wraparound and
// bond indexing. Sites are flat row-major integers internally (the first
// coordinate varies slowest); coordinate tuples are the external form.
//
// On a torus of side 2 the +e and -e neighbors coincide; both are kept, so
// the graph is a multigraph with two parallel bonds per adjacent pair and
// every site still has 2d neighbor entries.

#include <cstdint>
#include <string>
#include <vector>

namespace latcon {

enum class Boundary { Torus, Free };
enum class Adjacency { SquareNN, Triangular, King, CubicNN };

struct LatticeSpec {
  int dim = 2;
  int side = 1;
  Boundary boundary = Boundary::Free;
  Adjacency adjacency = Adjacency::SquareNN;

  /// Throws DomainError for an inconsistent spec.
  void validate() const;
  std::int64_t site_count() const;
};

std::string to_string(Boundary b);
std::string to_string(Adjacency a);

struct Site {
  std::vector<int> coords;
  friend bool operator==(const Site&, const Site&) = default;
  friend auto operator<=>(const Site&, const Site&) = default;
};

struct Bond {
  Site a;
  Site b;
  int index = 0;
};

/// Neighbor offsets in output order: +e0, -e0, +e1, -e1, ..., then the
/// diagonals (Triangular: (+1,+1), (-1,-1); King additionally (+1,-1), (-1,+1)).
std::vector<std::vector<int>> neighbor_offsets(const LatticeSpec& spec);

/// The forward half of neighbor_offsets; each bond is generated once from
/// its origin site along one of these.
std::vector<std::vector<int>> forward_offsets(const LatticeSpec& spec);

std::vector<Site> neighbors(const LatticeSpec& spec, const Site& s);
std::vector<Bond> bonds(const LatticeSpec& spec);

/// Precomputed flat adjacency for hot loops. Immutable after construction.
class Lattice {
 public:
  struct Incidence {
    int site;
    int bond;
  };

  explicit Lattice(LatticeSpec spec);

  const LatticeSpec& spec() const { return spec_; }
  int site_count() const { return static_cast<int>(adj_offset_.size()) - 1; }
  int bond_count() const { return static_cast<int>(bond_ends_.size()); }

  int flat(const Site& s) const;
  Site site(int flat_index) const;

  /// Incident (neighbor, bond) pairs of a site in neighbor_offsets order.
  std::vector<Incidence> incident(int s) const;
  const Incidence* incident_begin(int s) const { return &adj_[adj_offset_[s]]; }
  const Incidence* incident_end(int s) const { return &adj_[adj_offset_[s + 1]]; }
  int degree(int s) const { return adj_offset_[s + 1] - adj_offset_[s]; }

  /// Bond endpoints as flat site indices (origin first).
  std::pair<int, int> bond_ends(int bond) const { return bond_ends_[bond]; }
  /// Origin site and forward-offset slot of a bond.
  std::pair<int, int> bond_origin(int bond) const { return bond_origin_[bond]; }
  /// Inverse of bond_origin; -1 when the bond is absent (free boundary edge).
  int bond_index(int origin, int forward_slot) const;

 private:
  LatticeSpec spec_;
  std::vector<int> adj_offset_;
  std::vector<Incidence> adj_;
  std::vector<std::pair<int, int>> bond_ends_;
  std::vector<std::pair<int, int>> bond_origin_;
  std::vector<int> bond_lookup_;  // origin * forward_count + slot
  int forward_count_ = 0;
};

}  // namespace latcon
