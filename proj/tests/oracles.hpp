#pragma once

// Brute-force reference counts. Deliberately naive: each uses a different
// mechanism from the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "latcon/lattice.hpp"

namespace oracle {

struct WalkTotals {
  std::uint64_t count = 0;
  std::uint64_t sq_sum = 0;
};

// Every one of the (2d)^n step strings, checked for self-intersection.
inline WalkTotals saw(int dim, int n) {
  WalkTotals out;
  const int dirs = 2 * dim;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= dirs;
  std::vector<int> digits(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      digits[i] = static_cast<int>(c % dirs);
      c /= dirs;
    }
    std::set<std::vector<int>> seen;
    std::vector<int> pos(dim, 0);
    seen.insert(pos);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      pos[digits[i] / 2] += digits[i] % 2 ? -1 : 1;
      ok = seen.insert(pos).second;
    }
    if (!ok) continue;
    ++out.count;
    for (int x : pos) out.sq_sum += static_cast<std::uint64_t>(x * x);
  }
  return out;
}

// Fixed polyominoes by growing translation-normalized cell sets level by level.
inline std::vector<std::uint64_t> polyominoes(int max_n) {
  using Cell = std::pair<int, int>;
  using Shape = std::vector<Cell>;
  auto normalize = [](Shape s) {
    int mx = s[0].first, my = s[0].second;
    for (auto [x, y] : s) {
      mx = std::min(mx, x);
      my = std::min(my, y);
    }
    for (auto& [x, y] : s) {
      x -= mx;
      y -= my;
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::uint64_t> out(max_n + 1, 0);
  std::set<Shape> level{Shape{{0, 0}}};
  out[1] = 1;
  for (int n = 2; n <= max_n; ++n) {
    std::set<Shape> next;
    for (const auto& s : level) {
      for (auto [x, y] : s) {
        const Cell nb[4] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
        for (auto c : nb) {
          if (std::find(s.begin(), s.end(), c) != s.end()) continue;
          Shape t = s;
          t.push_back(c);
          next.insert(normalize(t));
        }
      }
    }
    level.swap(next);
    out[n] = level.size();
  }
  return out;
}

// kind: 0 squares, 1 hexagons (adds the (i+1, j+1) diagonal), 2 kings.
inline std::uint64_t hard_configs(int kind, int n) {
  const int cells = n * n;
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
    auto at = [&](int i, int j) {
      return i >= 0 && j >= 0 && i < n && j < n && ((m >> (i * n + j)) & 1);
    };
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (!at(i, j)) continue;
        if (at(i + 1, j) || at(i, j + 1)) ok = false;
        if (kind >= 1 && at(i + 1, j + 1)) ok = false;
        if (kind == 2 && at(i + 1, j - 1)) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

// Matchings of the rows x cols grid by scanning all edge subsets.
inline std::uint64_t grid_matchings(int rows, int cols, bool perfect_only) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.push_back({i * cols + j, i * cols + j + 1});
      if (i + 1 < rows) edges.push_back({i * cols + j, (i + 1) * cols + j});
    }
  const int e = static_cast<int>(edges.size());
  const int sites = rows * cols;
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << e); ++m) {
    std::uint64_t used = 0;
    bool ok = true;
    int covered = 0;
    for (int k = 0; k < e && ok; ++k) {
      if (!((m >> k) & 1)) continue;
      auto [a, b] = edges[k];
      if ((used >> a) & 1 || (used >> b) & 1) ok = false;
      used |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
      covered += 2;
    }
    if (ok && (!perfect_only || covered == sites)) ++count;
  }
  return count;
}

// Ice-rule orientations of the n x n torus (multigraph at n = 2): every
// orientation of the 2n^2 bonds is tried.
inline std::uint64_t ice_states(int n) {
  latcon::LatticeSpec spec{2, n, latcon::Boundary::Torus, latcon::Adjacency::SquareNN};
  latcon::Lattice lat(spec);
  const int e = lat.bond_count();
  std::uint64_t count = 0;
  std::vector<int> in(lat.site_count());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << e); ++m) {
    std::fill(in.begin(), in.end(), 0);
    for (int b = 0; b < e; ++b) {
      auto [u, v] = lat.bond_ends(b);
      ++in[((m >> b) & 1) ? u : v];
    }
    if (std::all_of(in.begin(), in.end(), [](int x) { return x == 2; })) ++count;
  }
  return count;
}

// Proper 3-colorings of the n x n torus graph (faces of the primal torus).
inline std::uint64_t three_colorings(int n) {
  const int cells = n * n;
  std::vector<int> c(cells, 0);
  std::uint64_t count = 0;
  std::function<void(int)> go = [&](int k) {
    if (k == cells) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int s = i * n + j;
          if (c[s] == c[i * n + (j + 1) % n] || c[s] == c[((i + 1) % n) * n + j]) return;
        }
      ++count;
      return;
    }
    for (int x = 0; x < 3; ++x) {
      c[k] = x;
      go(k + 1);
    }
  };
  go(0);
  return count;
}

// Even subgraphs by size: walk the whole cycle space (fundamental cycles of
// a BFS tree) in Gray-code order. Requires at most 64 bonds.
inline std::vector<std::uint64_t> even_subgraphs(const latcon::Lattice& lat) {
  const int v = lat.site_count();
  const int e = lat.bond_count();
  std::vector<int> parent_bond(v, -1), depth(v, -1), parent(v, -1);
  std::vector<int> queue{0};
  depth[0] = 0;
  std::vector<char> tree(e, 0);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int u = queue[q];
    for (auto it = lat.incident_begin(u); it != lat.incident_end(u); ++it) {
      if (depth[it->site] >= 0) continue;
      depth[it->site] = depth[u] + 1;
      parent[it->site] = u;
      parent_bond[it->site] = it->bond;
      tree[it->bond] = 1;
      queue.push_back(it->site);
    }
  }
  std::vector<std::uint64_t> basis;
  for (int b = 0; b < e; ++b) {
    if (tree[b]) continue;
    auto [x, y] = lat.bond_ends(b);
    std::uint64_t cyc = std::uint64_t{1} << b;
    while (x != y) {
      if (depth[x] < depth[y]) std::swap(x, y);
      cyc ^= std::uint64_t{1} << parent_bond[x];
      x = parent[x];
    }
    basis.push_back(cyc);
  }
  std::vector<std::uint64_t> by_size(e + 1, 0);
  std::uint64_t cur = 0;
  by_size[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t g = 1; g < total; ++g) {
    int flip = __builtin_ctzll(g);
    cur ^= basis[flip];
    ++by_size[__builtin_popcountll(cur)];
  }
  return by_size;
}

}  // namespace oracle
