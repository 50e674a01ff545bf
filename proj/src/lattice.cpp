#include "latcon/lattice.hpp"

#include "latcon/core.hpp"

namespace latcon {

std::string to_string(Boundary b) { return b == Boundary::Torus ? "torus" : "free"; }

std::string to_string(Adjacency a) {
  switch (a) {
    case Adjacency::SquareNN: return "square";
    case Adjacency::Triangular: return "triangular";
    case Adjacency::King: return "king";
    case Adjacency::CubicNN: return "cubic";
  }
  return "?";
}

void LatticeSpec::validate() const {
  if (dim < 1) throw DomainError("lattice dimension must be positive");
  if (side < 1) throw DomainError("lattice side must be positive");
  if (adjacency == Adjacency::SquareNN && dim != 2)
    throw DomainError("square adjacency requires dim = 2");
  if ((adjacency == Adjacency::Triangular || adjacency == Adjacency::King) && dim != 2)
    throw DomainError("triangular and king adjacency require dim = 2");
  if (boundary == Boundary::Torus && side < 2)
    throw DomainError("torus side must be at least 2");
  double n = 1;
  for (int k = 0; k < dim; ++k) n *= side;
  if (n > 2e9) throw DomainError("lattice too large");
}

std::int64_t LatticeSpec::site_count() const {
  std::int64_t n = 1;
  for (int k = 0; k < dim; ++k) n *= side;
  return n;
}

std::vector<std::vector<int>> neighbor_offsets(const LatticeSpec& spec) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k < spec.dim; ++k) {
    std::vector<int> plus(spec.dim, 0), minus(spec.dim, 0);
    plus[k] = 1;
    minus[k] = -1;
    out.push_back(plus);
    out.push_back(minus);
  }
  if (spec.adjacency == Adjacency::Triangular || spec.adjacency == Adjacency::King) {
    out.push_back({1, 1});
    out.push_back({-1, -1});
  }
  if (spec.adjacency == Adjacency::King) {
    out.push_back({1, -1});
    out.push_back({-1, 1});
  }
  return out;
}

std::vector<std::vector<int>> forward_offsets(const LatticeSpec& spec) {
  auto all = neighbor_offsets(spec);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < all.size(); i += 2) out.push_back(all[i]);
  return out;
}

namespace {

bool in_range(const LatticeSpec& spec, const Site& s) {
  if (static_cast<int>(s.coords.size()) != spec.dim) return false;
  for (int c : s.coords)
    if (c < 0 || c >= spec.side) return false;
  return true;
}

// Applies an offset; returns false when it leaves a free lattice.
bool shift(const LatticeSpec& spec, const Site& s, const std::vector<int>& off, Site& out) {
  out.coords.resize(spec.dim);
  for (int k = 0; k < spec.dim; ++k) {
    int c = s.coords[k] + off[k];
    if (spec.boundary == Boundary::Torus) {
      c = ((c % spec.side) + spec.side) % spec.side;
    } else if (c < 0 || c >= spec.side) {
      return false;
    }
    out.coords[k] = c;
  }
  return true;
}

}  // namespace

std::vector<Site> neighbors(const LatticeSpec& spec, const Site& s) {
  spec.validate();
  if (!in_range(spec, s)) throw DomainError("site out of range");
  std::vector<Site> out;
  Site t;
  for (const auto& off : neighbor_offsets(spec))
    if (shift(spec, s, off, t)) out.push_back(t);
  return out;
}

std::vector<Bond> bonds(const LatticeSpec& spec) {
  Lattice lat(spec);
  std::vector<Bond> out;
  out.reserve(lat.bond_count());
  for (int b = 0; b < lat.bond_count(); ++b) {
    auto [u, v] = lat.bond_ends(b);
    out.push_back(Bond{lat.site(u), lat.site(v), b});
  }
  return out;
}

Lattice::Lattice(LatticeSpec spec) : spec_(spec) {
  spec_.validate();
  const int n = static_cast<int>(spec_.site_count());
  const auto fwd = forward_offsets(spec_);
  const auto all = neighbor_offsets(spec_);
  forward_count_ = static_cast<int>(fwd.size());

  bond_lookup_.assign(static_cast<std::size_t>(n) * forward_count_, -1);
  Site s, t;
  for (int u = 0; u < n; ++u) {
    s = site(u);
    for (int k = 0; k < forward_count_; ++k) {
      if (!shift(spec_, s, fwd[k], t)) continue;
      bond_lookup_[static_cast<std::size_t>(u) * forward_count_ + k] =
          static_cast<int>(bond_ends_.size());
      bond_ends_.emplace_back(u, flat(t));
      bond_origin_.emplace_back(u, k);
    }
  }

  adj_offset_.assign(n + 1, 0);
  for (int u = 0; u < n; ++u) {
    s = site(u);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!shift(spec_, s, all[i], t)) continue;
      int v = flat(t);
      int slot = static_cast<int>(i / 2);
      // Even entries are forward offsets owned by u; odd entries are the
      // forward bond owned by the neighbor.
      int bond = (i % 2 == 0) ? bond_index(u, slot) : bond_index(v, slot);
      adj_.push_back({v, bond});
    }
    adj_offset_[u + 1] = static_cast<int>(adj_.size());
  }
}

int Lattice::flat(const Site& s) const {
  if (!in_range(spec_, s)) throw DomainError("site out of range");
  int idx = 0;
  for (int k = 0; k < spec_.dim; ++k) idx = idx * spec_.side + s.coords[k];
  return idx;
}

Site Lattice::site(int flat_index) const {
  Site s;
  s.coords.assign(spec_.dim, 0);
  for (int k = spec_.dim - 1; k >= 0; --k) {
    s.coords[k] = flat_index % spec_.side;
    flat_index /= spec_.side;
  }
  return s;
}

std::vector<Lattice::Incidence> Lattice::incident(int s) const {
  return {incident_begin(s), incident_end(s)};
}

int Lattice::bond_index(int origin, int forward_slot) const {
  if (origin < 0 || origin >= site_count() || forward_slot < 0 || forward_slot >= forward_count_)
    throw DomainError("bond origin out of range");
  return bond_lookup_[static_cast<std::size_t>(origin) * forward_count_ + forward_slot];
}

}  // namespace latcon
