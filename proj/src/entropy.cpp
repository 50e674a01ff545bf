#include "latcon/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <queue>

#include "latcon/analysis.hpp"

namespace latcon {

namespace {

bool is_hard(EntropyModel m) { return m != EntropyModel::Ice; }

using Mask = std::uint32_t;

// Cells of the previous row that a row b forbids.
Mask forbidden(EntropyModel m, Mask b, Mask full) {
  switch (m) {
    case EntropyModel::HardSquare: return b;
    case EntropyModel::HardHexagon: return (b | (b >> 1)) & full;
    case EntropyModel::King: return (b | (b << 1) | (b >> 1)) & full;
    case EntropyModel::Ice: break;
  }
  return 0;
}

bool row_admissible(Mask b) { return (b & (b >> 1)) == 0; }

// w(b) = [b admissible] * sum over a compatible with b of v(a), via the
// subset-sum transform of v.
template <class T>
void hard_apply(EntropyModel m, int width, std::vector<T>& v, std::vector<T>& scratch) {
  const Mask full = (Mask{1} << width) - 1;
  const std::size_t states = std::size_t{1} << width;
  scratch = v;
  for (int k = 0; k < width; ++k) {
    const Mask bit = Mask{1} << k;
    for (Mask s = 0; s < states; ++s)
      if (s & bit) scratch[s] += scratch[s ^ bit];
  }
  for (Mask b = 0; b < states; ++b)
    v[b] = row_admissible(b) ? scratch[~forbidden(m, b, full) & full] : T(0);
}

template <class T>
T hard_count(EntropyModel m, int rows, int cols) {
  const std::size_t states = std::size_t{1} << cols;
  std::vector<T> v(states, T(0)), scratch;
  for (Mask b = 0; b < states; ++b)
    if (row_admissible(b)) v[b] = T(1);
  for (int r = 1; r < rows; ++r) hard_apply(m, cols, v, scratch);
  T total(0);
  for (const auto& x : v) total += x;
  return total;
}

// Six-vertex row transfer on a periodic row of width n. Bit j of the state
// is 1 when vertical bond j points down. With h_j = 1 for a right-pointing
// horizontal bond entering column j, the ice rule reads
// h_{j+1} = h_j + up_j - down_j, and periodicity requires h_n = h_0.
// Components are indexed [phase][state]; phase tracks the sum of (2 h_0 - 1)
// over rows modulo `phases` (1 disables tracking).
template <class T>
void ice_apply(int width, int phases, std::vector<T>& v) {
  const std::size_t states = std::size_t{1} << width;
  std::vector<T> out(v.size(), T(0));
  std::vector<T> cur[2], nxt[2];
  for (int h0 = 0; h0 < 2; ++h0) {
    for (int p = 0; p < phases; ++p) {
      cur[h0] = std::vector<T>(v.begin() + p * states, v.begin() + (p + 1) * states);
      cur[1 - h0].assign(states, T(0));
      for (int j = 0; j < width; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        nxt[0].assign(states, T(0));
        nxt[1].assign(states, T(0));
        for (int h = 0; h < 2; ++h) {
          for (std::size_t s = 0; s < states; ++s) {
            const T& c = cur[h][s];
            if (c == 0) continue;
            nxt[h][s] += c;
            const bool up = (s & bit) != 0;
            if (up && h == 0) nxt[1][s ^ bit] += c;
            if (!up && h == 1) nxt[0][s ^ bit] += c;
          }
        }
        cur[0].swap(nxt[0]);
        cur[1].swap(nxt[1]);
      }
      const int q = ((p + 2 * h0 - 1) % phases + phases) % phases;
      for (std::size_t s = 0; s < states; ++s) out[q * states + s] += cur[h0][s];
    }
  }
  v.swap(out);
}

std::size_t rotate(std::size_t s, int width) {
  const std::size_t full = (std::size_t{1} << width) - 1;
  return ((s << 1) | (s >> (width - 1))) & full;
}

// Cyclic shift orbits: representative (smallest member) and orbit size.
std::vector<std::pair<std::size_t, int>> shift_orbits(int width) {
  std::vector<std::pair<std::size_t, int>> out;
  const std::size_t states = std::size_t{1} << width;
  for (std::size_t s = 0; s < states; ++s) {
    std::size_t t = s;
    int size = 0;
    bool smallest = true;
    do {
      t = rotate(t, width);
      ++size;
      if (t < s) smallest = false;
    } while (t != s);
    if (smallest) out.push_back({s, size});
  }
  return out;
}

template <class T>
T ice_trace(int n, bool coloring_sector) {
  const std::size_t states = std::size_t{1} << n;
  const int phases = coloring_sector ? 3 : 1;
  T total(0);
  for (auto [rep, size] : shift_orbits(n)) {
    if (coloring_sector && (2 * std::popcount(rep) - n) % 3 != 0) continue;
    std::vector<T> v(phases * states, T(0));
    v[rep] = T(1);
    for (int r = 0; r < n; ++r) ice_apply(n, phases, v);
    total += T(size) * v[rep];
  }
  return total;
}

// Proper colorings of an n-cycle (n = 2: two distinct colors) as base-3 rows.
std::vector<std::vector<int>> cycle_colorings(int n) {
  std::vector<std::vector<int>> rows;
  std::vector<int> c(n, 0);
  std::function<void(int)> fill = [&](int j) {
    if (j == n) {
      if (c[n - 1] != c[0]) rows.push_back(c);
      return;
    }
    for (int x = 0; x < 3; ++x) {
      if (j > 0 && c[j - 1] == x) continue;
      c[j] = x;
      fill(j + 1);
    }
  };
  fill(0);
  return rows;
}

template <class T>
T coloring_trace(int n, const std::vector<std::vector<int>>& adj) {
  const std::size_t states = adj.size();
  T total(0);
  std::vector<T> v(states), w(states);
  for (std::size_t a = 0; a < states; ++a) {
    std::fill(v.begin(), v.end(), T(0));
    v[a] = T(1);
    for (int r = 0; r < n; ++r) {
      std::fill(w.begin(), w.end(), T(0));
      for (std::size_t s = 0; s < states; ++s) {
        if (v[s] == 0) continue;
        for (int t : adj[s]) w[t] += v[s];
      }
      v.swap(w);
    }
    total += v[a];
  }
  return total;
}

void check_ice_width(int n, const char* what) {
  if (n < 2) throw DomainError(std::string(what) + ": n must be >= 2");
  if (n > 24) throw BudgetExceeded(std::string(what) + ": row too wide");
}

// Successors of state u under the ice row transfer (any h_0).
std::vector<std::size_t> ice_successors(int width, std::size_t u) {
  std::vector<std::size_t> out;
  std::function<void(int, int, int, std::size_t)> step = [&](int j, int h, int h0,
                                                              std::size_t d) {
    if (j == width) {
      if (h == h0) out.push_back(d);
      return;
    }
    const int up = static_cast<int>((u >> j) & 1);
    for (int down = 0; down < 2; ++down) {
      int next = h + up - down;
      if (next < 0 || next > 1) continue;
      step(j + 1, next, h0, d | (static_cast<std::size_t>(down) << j));
    }
  };
  step(0, 0, 0, 0);
  step(0, 1, 1, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool strongly_connected(const std::vector<std::size_t>& nodes,
                        const std::vector<std::vector<std::size_t>>& succ,
                        const std::vector<int>& slot) {
  if (nodes.empty()) return true;
  std::vector<std::vector<int>> fwd(nodes.size()), rev(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t t : succ[i]) {
      int j = slot[t];
      if (j < 0) continue;
      fwd[i].push_back(j);
      rev[j].push_back(static_cast<int>(i));
    }
  auto all_reached = [&](const std::vector<std::vector<int>>& g) {
    std::vector<char> seen(nodes.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          q.push(y);
        }
    }
    return count == nodes.size();
  };
  return all_reached(fwd) && all_reached(rev);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> prod(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) prod[i] = a[i] * b[i];
  return pairwise_sum(prod.data(), prod.size());
}

}  // namespace

std::string to_string(EntropyModel m) {
  switch (m) {
    case EntropyModel::Ice: return "ice";
    case EntropyModel::HardSquare: return "hardsquare";
    case EntropyModel::HardHexagon: return "hardhexagon";
    case EntropyModel::King: return "king";
  }
  return "?";
}

BigCount count_hard_configs(EntropyModel model, int rows, int cols, const EntropyOptions& options) {
  if (!is_hard(model)) throw DomainError("count_hard_configs: hard-core model required");
  if (rows < 1 || cols < 1) throw DomainError("count_hard_configs: sides must be positive");
  if (cols > 26) throw BudgetExceeded("count_hard_configs: row too wide");
  options.budget.check(std::ldexp(1.0, cols) * (cols + 1) * rows, "count_hard_configs");
  return count_with_fallback([&]<class T>() { return hard_count<T>(model, rows, cols); });
}

BigCount count_ice_states(int n, const EntropyOptions& options) {
  check_ice_width(n, "count_ice_states");
  options.budget.check(std::ldexp(1.0, 2 * n) * 4.0 * n, "count_ice_states");
  return count_with_fallback([&]<class T>() { return ice_trace<T>(n, false); });
}

BigCount count_ice_states_coloring_sector(int n, const EntropyOptions& options) {
  check_ice_width(n, "count_ice_states_coloring_sector");
  options.budget.check(std::ldexp(1.0, 2 * n) * 12.0 * n, "count_ice_states_coloring_sector");
  return count_with_fallback([&]<class T>() { return ice_trace<T>(n, true); });
}

BigCount count_three_colorings(int n, const EntropyOptions& options) {
  if (n < 2) throw DomainError("count_three_colorings: n must be >= 2");
  options.budget.check(std::pow(2.0, 2 * n) * 4.0 * n * n, "count_three_colorings");
  if (n > 12) throw BudgetExceeded("count_three_colorings: row too wide");
  auto rows = cycle_colorings(n);
  std::vector<std::vector<int>> adj(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) ok = rows[a][j] != rows[b][j];
      if (ok) adj[a].push_back(static_cast<int>(b));
    }
  return count_with_fallback([&]<class T>() { return coloring_trace<T>(n, adj); });
}

EigenResult dominant_eigenvalue(EntropyModel model, int width) {
  if (width < 1) throw DomainError("dominant_eigenvalue: width must be positive");
  if (model == EntropyModel::Ice && width < 2)
    throw DomainError("dominant_eigenvalue: ice width must be >= 2");
  if (width > 24) throw BudgetExceeded("dominant_eigenvalue: row too wide");
  const std::size_t states = std::size_t{1} << width;
  std::vector<double> v(states, 0.0), scratch;
  // Ice conserves the number of down arrows; start in the central sector.
  const int sector = width / 2;
  for (std::size_t s = 0; s < states; ++s) {
    if (is_hard(model) ? row_admissible(static_cast<Mask>(s)) : std::popcount(s) == sector)
      v[s] = 1.0;
  }
  auto apply = [&](std::vector<double>& x) {
    if (is_hard(model)) hard_apply(model, width, x, scratch);
    else ice_apply(width, 1, x);
  };
  EigenResult res;
  double prev = 0.0;
  const int max_iter = 200000;
  int stable = 0;
  for (int it = 1; it <= max_iter; ++it) {
    double norm = std::sqrt(dot(v, v));
    for (auto& x : v) x /= norm;
    std::vector<double> w = v;
    apply(w);
    double lambda = dot(v, w);
    res.value = lambda;
    res.iterations = it;
    if (prev > 0 && std::abs(lambda / prev - 1.0) < 1e-12) {
      if (++stable >= 3) {
        res.converged = true;
        break;
      }
    } else {
      stable = 0;
    }
    prev = lambda;
    v.swap(w);
  }
  if (!res.converged)
    throw NumericalError("dominant_eigenvalue: power iteration did not converge");
  return res;
}

bool transfer_irreducible(EntropyModel model, int width) {
  if (width < 1 || width > 12) throw DomainError("transfer_irreducible: width must be in [1, 12]");
  const std::size_t states = std::size_t{1} << width;
  const Mask full = static_cast<Mask>(states - 1);
  if (is_hard(model)) {
    std::vector<std::size_t> nodes;
    std::vector<int> slot(states, -1);
    for (Mask s = 0; s < states; ++s)
      if (row_admissible(s)) {
        slot[s] = static_cast<int>(nodes.size());
        nodes.push_back(s);
      }
    std::vector<std::vector<std::size_t>> succ(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t b : nodes)
        if ((nodes[i] & forbidden(model, static_cast<Mask>(b), full)) == 0) succ[i].push_back(b);
    return strongly_connected(nodes, succ, slot);
  }
  if (width < 2) throw DomainError("transfer_irreducible: ice width must be >= 2");
  for (int k = 0; k <= width; ++k) {
    std::vector<std::size_t> nodes;
    std::vector<int> slot(states, -1);
    for (std::size_t s = 0; s < states; ++s)
      if (std::popcount(s) == k) {
        slot[s] = static_cast<int>(nodes.size());
        nodes.push_back(s);
      }
    std::vector<std::vector<std::size_t>> succ(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      succ[i] = ice_successors(width, nodes[i]);
      for (std::size_t t : succ[i])
        if (slot[t] < 0) throw ConsistencyError("ice transfer left its arrow sector");
    }
    if (!strongly_connected(nodes, succ, slot)) return false;
  }
  return true;
}

EstimateReport entropy_constant(EntropyModel model, int n_max, const EntropyOptions& options) {
  if (n_max < 8) throw DomainError("entropy_constant: n_max must be >= 8");
  if (n_max > 24) throw BudgetExceeded("entropy_constant: n_max too large");
  const bool hard = is_hard(model);
  std::vector<int> widths;
  for (int n = hard ? 1 : 2; n <= n_max; n += hard ? 1 : 2) widths.push_back(n);
  double work = 0;
  for (int n : widths) work += std::ldexp(1.0, n) * 4.0 * n * 1000;
  options.budget.check(work, "entropy_constant");

  std::vector<double> lambda(widths.size());
  parallel_for(widths.size(), std::max(1u, options.threads),
               [&](std::size_t i) { lambda[i] = dominant_eigenvalue(model, widths[i]).value; });

  EstimateReport rep;
  if (hard) {
    std::vector<double> ratios;
    for (std::size_t i = 0; i + 1 < widths.size(); ++i) {
      rep.indices.push_back(widths[i]);
      ratios.push_back(lambda[i + 1] / lambda[i]);
    }
    rep.raw = ratios;
    auto acc = aitken(ratios);
    rep.accelerated = acc.values;
    rep.method = "Lambda(n+1)/Lambda(n), Aitken";
    rep.value = acc.values.back();
    rep.error_proxy = std::abs(acc.values.back() - acc.values[acc.values.size() - 2]);
    if (!acc.flagged.empty()) rep.flags.push_back("aitken-guarded");
    switch (model) {
      case EntropyModel::HardSquare: rep.set_target(1.50304808247533226); break;
      case EntropyModel::HardHexagon: rep.set_target(1.395485972479302735); break;
      default: rep.set_target(1.342643951124); break;
    }
  } else {
    std::vector<double> roots;
    for (std::size_t i = 0; i < widths.size(); ++i) {
      roots.push_back(std::pow(lambda[i], 1.0 / widths[i]));
    }
    int order = std::min<int>(2, static_cast<int>(roots.size()) - 1);
    rep = richardson_estimate("Lambda(n)^(1/n), even n, Richardson order " +
                                  std::to_string(order) + " in 1/n^2",
                              widths, roots, order, 2.0);
    rep.set_target(1.539600717839002039);
  }
  return rep;
}

HighReal hexagon_minpoly_residual(const HighReal& x) {
  if (!(x > 0)) throw DomainError("hexagon_minpoly_residual: x must be positive");
  // Coefficients of x^(24-2i).
  static const char* const coeffs[] = {
      "25937424601",
      "2013290651222784",
      "2505062311720673792",
      "797726698866658379776",
      "7449488310131083100160",
      "2958015038376958230528",
      "-72405670285649161617408",
      "107155448150443388043264",
      "-71220809441400405884928",
      "-73347491183630103871488",
      "97143135277377575190528",
      "0",
      "-32751691810479015985152",
  };
  // Terms span many magnitudes; Neumaier-compensated sum.
  const HighReal y = x * x;
  HighReal power = 1, sum = 0, comp = 0, scale = 0;
  for (int i = 12; i >= 0; --i) {
    HighReal term = HighReal(BigCount(coeffs[i])) * power;
    HighReal t = sum + term;
    if (abs(sum) >= abs(term)) comp += (sum - t) + term;
    else comp += (term - t) + sum;
    sum = t;
    scale += abs(term);
    power *= y;
  }
  return (sum + comp) / scale;
}

}  // namespace latcon
