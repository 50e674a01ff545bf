#include "latcon/ising.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace latcon {

namespace {

struct RawPolymer {
  int size;
  int anchor;
  std::vector<int> vertices;
};

class TrailSearch {
 public:
  TrailSearch(const Lattice& lat, int max_bonds)
      : lat_(lat), max_(max_bonds), dist_(lat.site_count(), -1), used_(lat.bond_count(), 0) {}

  void run(int anchor, std::vector<RawPolymer>& out) {
    anchor_ = anchor;
    found_.clear();
    bfs();
    trail_.clear();
    extend(anchor);
    for (const auto& bonds : found_) {
      std::vector<int> verts;
      verts.reserve(2 * bonds.size());
      for (int b : bonds) {
        auto [u, v] = lat_.bond_ends(b);
        verts.push_back(u);
        verts.push_back(v);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      out.push_back({static_cast<int>(bonds.size()), anchor, std::move(verts)});
    }
    for (int v : touched_) dist_[v] = -1;
    touched_.clear();
  }

 private:
  // Distances from the anchor inside the vertex set {v >= anchor}.
  void bfs() {
    const int limit = max_ / 2;
    std::vector<int> frontier{anchor_};
    dist_[anchor_] = 0;
    touched_.push_back(anchor_);
    for (int depth = 0; depth < limit && !frontier.empty(); ++depth) {
      std::vector<int> next;
      for (int u : frontier) {
        for (auto it = lat_.incident_begin(u); it != lat_.incident_end(u); ++it) {
          int w = it->site;
          if (w < anchor_ || dist_[w] >= 0) continue;
          dist_[w] = depth + 1;
          touched_.push_back(w);
          next.push_back(w);
        }
      }
      frontier.swap(next);
    }
  }

  void extend(int v) {
    const int len = static_cast<int>(trail_.size());
    if (len > 0 && v == anchor_) {
      std::vector<int> bonds(trail_);
      std::sort(bonds.begin(), bonds.end());
      found_.insert(std::move(bonds));
    }
    if (len == max_) return;
    for (auto it = lat_.incident_begin(v); it != lat_.incident_end(v); ++it) {
      int w = it->site;
      int b = it->bond;
      if (used_[b] || w < anchor_) continue;
      int dw = dist_[w];
      if (dw < 0 || len + 1 + dw > max_) continue;
      used_[b] = 1;
      trail_.push_back(b);
      extend(w);
      trail_.pop_back();
      used_[b] = 0;
    }
  }

  const Lattice& lat_;
  int max_;
  int anchor_ = 0;
  std::vector<int> dist_;
  std::vector<int> touched_;
  std::vector<std::uint8_t> used_;
  std::vector<int> trail_;
  std::set<std::vector<int>> found_;
};

// Counts sets of pairwise vertex-disjoint polymers with a given total size.
class FamilyCounter {
 public:
  explicit FamilyCounter(const PolymerList& p, int sites) : p_(p), mark_(sites, 0) {
    const int count = static_cast<int>(p.size.size());
    int max_size = count ? p.size.back() : 0;
    range_lo_.assign(max_size + 2, count);
    range_hi_.assign(max_size + 2, count);
    for (int s = max_size; s >= 0; --s) {
      auto lo = std::lower_bound(p.size.begin(), p.size.end(), s);
      auto hi = std::upper_bound(p.size.begin(), p.size.end(), s);
      range_lo_[s] = static_cast<int>(lo - p.size.begin());
      range_hi_[s] = static_cast<int>(hi - p.size.begin());
    }
    // Per-vertex polymer lists, ids ascending.
    std::vector<int> deg(sites + 1, 0);
    for (int i = 0; i < count; ++i)
      for (int k = p.vertex_offset[i]; k < p.vertex_offset[i + 1]; ++k) ++deg[p.vertices[k] + 1];
    std::partial_sum(deg.begin(), deg.end(), deg.begin());
    by_vertex_offset_ = deg;
    by_vertex_.assign(deg.back(), 0);
    std::vector<int> fill(deg.begin(), deg.end() - 1);
    for (int i = 0; i < count; ++i)
      for (int k = p.vertex_offset[i]; k < p.vertex_offset[i + 1]; ++k)
        by_vertex_[fill[p.vertices[k]]++] = i;
    stamp_.assign(count, 0);
  }

  BigCount families(int total) {
    marked_.clear();
    return recurse(-1, total);
  }

 private:
  BigCount recurse(int last, int remaining) {
    BigCount result = 0;
    const int max_size = static_cast<int>(range_lo_.size()) - 2;
    if (remaining <= max_size) result += count_last(last, remaining);
    const int first = last + 1;
    const int count = static_cast<int>(p_.size.size());
    for (int id = first; id < count; ++id) {
      int s = p_.size[id];
      if (s >= remaining) break;
      if (remaining - s < s) break;  // later members are at least as large
      if (!disjoint(id)) continue;
      place(id, 1);
      result += recurse(id, remaining - s);
      place(id, 0);
    }
    return result;
  }

  // Polymers of size s with id > last that avoid every marked vertex.
  BigCount count_last(int last, int s) {
    int lo = std::max(range_lo_[s], last + 1);
    int hi = range_hi_[s];
    if (lo >= hi) return 0;
    std::int64_t total = hi - lo;
    ++epoch_;
    std::int64_t touching = 0;
    for (int v : marked_) {
      auto b = by_vertex_.begin() + by_vertex_offset_[v];
      auto e = by_vertex_.begin() + by_vertex_offset_[v + 1];
      for (auto it = std::lower_bound(b, e, lo); it != e && *it < hi; ++it) {
        if (stamp_[*it] == epoch_) continue;
        stamp_[*it] = epoch_;
        ++touching;
      }
    }
    return BigCount(total - touching);
  }

  bool disjoint(int id) const {
    for (int k = p_.vertex_offset[id]; k < p_.vertex_offset[id + 1]; ++k)
      if (mark_[p_.vertices[k]]) return false;
    return true;
  }

  void place(int id, std::uint8_t on) {
    for (int k = p_.vertex_offset[id]; k < p_.vertex_offset[id + 1]; ++k) {
      int v = p_.vertices[k];
      mark_[v] = on;
      if (on) {
        marked_.push_back(v);
      }
    }
    if (!on) marked_.resize(marked_.size() - (p_.vertex_offset[id + 1] - p_.vertex_offset[id]));
  }

  const PolymerList& p_;
  std::vector<std::uint8_t> mark_;
  std::vector<int> marked_;
  std::vector<int> range_lo_, range_hi_;
  std::vector<int> by_vertex_offset_, by_vertex_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

PolymerList enumerate_polymers(const Lattice& lattice, int max_bonds) {
  if (max_bonds < 1) throw DomainError("enumerate_polymers: max_bonds must be positive");
  std::vector<RawPolymer> raw;
  TrailSearch search(lattice, max_bonds);
  for (int a = 0; a < lattice.site_count(); ++a) search.run(a, raw);
  std::stable_sort(raw.begin(), raw.end(),
                   [](const RawPolymer& x, const RawPolymer& y) { return x.size < y.size; });
  PolymerList out;
  out.vertex_offset.push_back(0);
  for (auto& r : raw) {
    out.size.push_back(r.size);
    out.vertices.insert(out.vertices.end(), r.vertices.begin(), r.vertices.end());
    out.vertex_offset.push_back(static_cast<int>(out.vertices.size()));
  }
  return out;
}

std::vector<BigCount> count_even_subgraphs(const Lattice& lattice, int max_bonds,
                                           const IsingOptions& options) {
  if (max_bonds < 1) throw DomainError("count_even_subgraphs: max_bonds must be positive");
  // Closed trails of length r from a vertex: at most (2d-1)^r per anchor.
  int deg = lattice.site_count() ? lattice.degree(0) : 0;
  options.budget.check(static_cast<double>(lattice.site_count()) *
                           std::pow(std::max(1, deg - 1), max_bonds * 0.75),
                       "count_even_drawings");
  PolymerList polymers = enumerate_polymers(lattice, max_bonds);
  FamilyCounter counter(polymers, lattice.site_count());
  std::vector<BigCount> out(max_bonds + 1, 0);
  for (int r = 1; r <= max_bonds; ++r) out[r] = counter.families(r);
  return out;
}

DrawingCensus count_even_drawings(const LatticeSpec& spec, int max_bonds,
                                  const IsingOptions& options) {
  if (spec.boundary != Boundary::Torus)
    throw DomainError("count_even_drawings: torus boundary required");
  if (spec.adjacency != Adjacency::SquareNN && spec.adjacency != Adjacency::CubicNN)
    throw DomainError("count_even_drawings: hypercubic adjacency required");
  Lattice lattice(spec);
  DrawingCensus census;
  census.spec = spec;
  census.max_bonds = max_bonds;
  census.counts.model = "even_polygonal_drawings";
  census.counts.params["dim"] = std::to_string(spec.dim);
  census.counts.params["side"] = std::to_string(spec.side);
  census.counts.params["boundary"] = "torus";
  auto counts = count_even_subgraphs(lattice, max_bonds, options);
  for (int r = 1; r <= max_bonds; ++r) census.counts.values[r] = counts[r];
  if (spec.side <= max_bonds) {
    census.winding_warning = true;
    census.warnings.push_back("side " + std::to_string(spec.side) + " <= max_bonds " +
                              std::to_string(max_bonds) +
                              ": winding cycles contribute; counts differ from the "
                              "thermodynamic polynomials");
  }
  return census;
}

BetaSeries beta_from_counts(const DrawingCensus& census) {
  const int R = census.max_bonds;
  // X(z) = sum_{r>=1} B(r) z^r; log(1 + X) = sum_m (-1)^{m+1} X^m / m.
  std::vector<Rational> x(R + 1, 0), power(R + 1, 0), log_series(R + 1, 0);
  for (int r = 1; r <= R; ++r) x[r] = Rational(census.counts.at(r));
  power = x;
  for (int m = 1; m <= R; ++m) {
    Rational sign = (m % 2 == 1) ? Rational(1, m) : Rational(-1, m);
    bool any = false;
    for (int k = 1; k <= R; ++k) {
      if (power[k] != 0) any = true;
      log_series[k] += sign * power[k];
    }
    if (!any) break;
    std::vector<Rational> next(R + 1, 0);
    for (int i = 1; i <= R; ++i) {
      if (power[i] == 0) continue;
      for (int j = 1; i + j <= R; ++j)
        if (x[j] != 0) next[i + j] += power[i] * x[j];
    }
    power.swap(next);
  }
  BetaSeries out;
  Rational sites(census.spec.site_count());
  for (int k = 1; k <= R; ++k) out.coefficients[k] = log_series[k] / sites;
  out.warnings = census.warnings;
  return out;
}

Rational beta_polynomial(int dim, int k) {
  const Rational d(dim);
  const Rational base = d * (d - 1);
  switch (k) {
    case 4: return base / 2;
    case 6: return base * (8 * d - 13) / 3;
    case 8: return base * (108 * d * d - 424 * d + 425) / 4;
    case 10:
      return Rational(2, 15) * base * (2976 * d * d * d - 19814 * d * d + 44956 * d - 34419);
    default: throw DomainError("beta_polynomial: k must be 4, 6, 8 or 10");
  }
}

}  // namespace latcon
