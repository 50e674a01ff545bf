#include "latcon/coverings.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>

#include "latcon/analysis.hpp"

namespace latcon {

namespace {

template <class T>
T grid_matchings(int rows, int cols, bool monomers) {
  const std::size_t states = std::size_t{1} << cols;
  std::vector<T> cur(states, T(0)), next(states, T(0));
  cur[0] = T(1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      std::fill(next.begin(), next.end(), T(0));
      const std::size_t bit = std::size_t{1} << j;
      const std::size_t right = std::size_t{1} << (j + 1);
      const bool can_down = i + 1 < rows;
      const bool can_right = j + 1 < cols;
      for (std::size_t s = 0; s < states; ++s) {
        const T& c = cur[s];
        if (c == 0) continue;
        if (s & bit) {
          next[s & ~bit] += c;
          continue;
        }
        if (monomers) next[s] += c;
        if (can_down) next[s | bit] += c;
        if (can_right && !(s & right)) next[s | right] += c;
      }
      cur.swap(next);
    }
  }
  return cur[0];
}

// Cells in lexicographic (x, y, z) order; state bit k says cell c + k is
// already covered, for the window [c, c + n^2).
template <class T>
T cube_coverings(int n) {
  const int window = n * n;
  const std::size_t states = std::size_t{1} << window;
  const std::size_t top = std::size_t{1} << (window - 1);
  std::vector<T> cur(states, T(0)), next(states, T(0));
  cur[0] = T(1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        std::fill(next.begin(), next.end(), T(0));
        const bool zf = z + 1 < n, yf = y + 1 < n, xf = x + 1 < n;
        const std::size_t ybit = std::size_t{1} << n;
        for (std::size_t s = 0; s < states; ++s) {
          const T& c = cur[s];
          if (c == 0) continue;
          if (s & 1) {
            next[s >> 1] += c;
            continue;
          }
          if (zf && !(s & 2)) next[(s | 2) >> 1] += c;
          if (yf && !(s & ybit)) next[(s | ybit) >> 1] += c;
          if (xf) next[(s >> 1) | top] += c;
        }
        cur.swap(next);
      }
    }
  }
  return cur[0];
}

EstimateReport extrapolate_root(const std::string& method, const SeriesTable& counts,
                                double exponent_scale, int min_terms) {
  std::vector<int> ns;
  std::vector<double> vals;
  for (const auto& [n, c] : counts.values) {
    if (n <= 0 || c <= 0) continue;
    double sites = static_cast<double>(n) * n;
    ns.push_back(n);
    vals.push_back(std::exp(exponent_scale * log_big(c) / sites));
  }
  if (static_cast<int>(ns.size()) < min_terms)
    throw DomainError(method + ": sequence too short");
  int order = std::min<int>(2, static_cast<int>(ns.size()) - 1);
  auto rep = richardson_estimate(method + ", Richardson order " + std::to_string(order) + " in 1/n",
                                 ns, vals, order);
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < vals.size(); ++i) {
    if (vals[i] < vals[i - 1]) inc = false;
    if (vals[i] > vals[i - 1]) dec = false;
  }
  if (inc) rep.flags.push_back("raw-increasing");
  if (dec) rep.flags.push_back("raw-decreasing");
  return rep;
}

}  // namespace

BigCount count_grid_matchings(int rows, int cols, bool allow_monomers,
                              const CoveringOptions& options) {
  if (rows < 1 || cols < 1) throw DomainError("count_grid_matchings: sides must be positive");
  if (options.column_major) std::swap(rows, cols);
  if (cols > 30) throw BudgetExceeded("count_grid_matchings: profile too wide");
  options.budget.check(std::ldexp(1.0, cols) * rows * cols, "count_grid_matchings");
  return count_with_fallback(
      [&]<class T>() { return grid_matchings<T>(rows, cols, allow_monomers); });
}

BigCount count_dimer_coverings_2d(int n, const CoveringOptions& options) {
  if (n < 1) throw DomainError("count_dimer_coverings_2d: n must be positive");
  if (n % 2 == 1) return 0;
  return count_grid_matchings(n, n, false, options);
}

BigCount count_monomer_dimer(int n, const CoveringOptions& options) {
  if (n < 1) throw DomainError("count_monomer_dimer: n must be positive");
  return count_grid_matchings(n, n, true, options);
}

BigCount count_dimer_coverings_3d(int n, const CoveringOptions& options) {
  if (n < 1) throw DomainError("count_dimer_coverings_3d: n must be positive");
  if (n % 2 == 1) return 0;
  options.budget.check(std::ldexp(1.0, n * n) * n * n * n, "count_dimer_coverings_3d");
  if (n * n > 30) throw BudgetExceeded("count_dimer_coverings_3d: profile too wide");
  return count_with_fallback([&]<class T>() { return cube_coverings<T>(n); });
}

CoveringCensus covering_census(CoveringKind kind, int n_max, const CoveringOptions& options) {
  CoveringCensus census;
  census.kind = kind;
  for (int n = 1; n <= n_max; ++n) {
    switch (kind) {
      case CoveringKind::DimerOnly2D:
        census.counts.model = "dimer_coverings_2d";
        census.counts.values[n] = count_dimer_coverings_2d(n, options);
        break;
      case CoveringKind::MonomerDimer2D:
        census.counts.model = "monomer_dimer_2d";
        census.counts.values[n] = count_monomer_dimer(n, options);
        break;
      case CoveringKind::DimerOnly3D:
        census.counts.model = "dimer_coverings_3d";
        census.counts.values[n] = count_dimer_coverings_3d(n, options);
        break;
    }
  }
  census.counts.params["boundary"] = "free";
  return census;
}

KasteleynValue kasteleyn_count(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("kasteleyn_count: sides must be positive");
  if ((static_cast<long>(m) * n) % 2 != 0) throw DomainError("kasteleyn_count: m*n must be even");
  const HighReal pi = boost::math::constants::pi<HighReal>();
  std::vector<HighReal> cm(m + 1), cn(n + 1);
  for (int j = 1; j <= m; ++j) {
    HighReal c = cos(j * pi / (m + 1));
    cm[j] = 4 * c * c;
  }
  for (int k = 1; k <= n; ++k) {
    HighReal c = cos(k * pi / (n + 1));
    cn[k] = 4 * c * c;
  }
  HighReal product = 1;
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= n; ++k) product *= sqrt(sqrt(cm[j] + cn[k]));
  KasteleynValue out;
  out.value = product;
  HighReal r = round(product);
  out.rounded = r.convert_to<BigCount>();
  out.distance_to_integer = abs(product - r).convert_to<double>();
  if (out.distance_to_integer >= 0.25)
    throw ConsistencyError("kasteleyn_count: product not close to an integer");
  return out;
}

HighReal catalan_constant(HighReal* error_bound) {
  // Alternating series sum (-1)^k / (2k+1)^2, accelerated (Cohen, Villegas, Zagier).
  const int terms = 80;
  HighReal d = pow(3 + sqrt(HighReal(8)), terms);
  HighReal bound = 2 / d;
  d = (d + 1 / d) / 2;
  HighReal b = -1, c = -d, s = 0;
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    HighReal odd = 2 * k + 1;
    s += c / (odd * odd);
    b = HighReal(k + terms) * HighReal(k - terms) * b / ((HighReal(k) + HighReal(0.5)) * (k + 1));
  }
  if (error_bound) *error_bound = bound;
  return s / d;
}

HighReal dimer_constant_2d() {
  return exp(2 * catalan_constant() / boost::math::constants::pi<HighReal>());
}

EstimateReport dimer_entropy_from_counts(const SeriesTable& counts) {
  SeriesTable even;
  even.model = counts.model;
  for (const auto& [n, c] : counts.values)
    if (n % 2 == 0) even.values[n] = c;
  auto rep = extrapolate_root("f(n)^(2/N)", even, 2.0, 3);
  rep.set_target(dimer_constant_2d().convert_to<double>());
  return rep;
}

EstimateReport dimer_entropy_estimate(int n_max, const CoveringOptions& options) {
  if (n_max < 8 || n_max % 2 != 0)
    throw DomainError("dimer_entropy_estimate: n_max must be even and >= 8");
  SeriesTable t;
  t.model = "dimer_coverings_2d";
  for (int n = 2; n <= n_max; n += 2) t.values[n] = count_dimer_coverings_2d(n, options);
  return dimer_entropy_from_counts(t);
}

EstimateReport kappa_from_counts(const SeriesTable& counts) {
  auto rep = extrapolate_root("g(n)^(1/N)", counts, 1.0, 3);
  rep.set_target(1.940215351);
  return rep;
}

EstimateReport kappa_estimate(int n_max, const CoveringOptions& options) {
  if (n_max < 10) throw DomainError("kappa_estimate: n_max must be >= 10");
  SeriesTable t;
  t.model = "monomer_dimer_2d";
  for (int n = 1; n <= n_max; ++n) t.values[n] = count_monomer_dimer(n, options);
  return kappa_from_counts(t);
}

EstimateReport lambda_estimate(const SeriesTable& h_counts) {
  EstimateReport rep;
  rep.method = "(2/N) ln h(n), raw (no extrapolation)";
  for (const auto& [n, h] : h_counts.values) {
    if (n <= 0 || n % 2 != 0 || h <= 0) continue;
    double sites = static_cast<double>(n) * n * n;
    rep.indices.push_back(n);
    rep.raw.push_back(2.0 * log_big(h) / sites);
  }
  if (rep.raw.empty()) throw DomainError("lambda_estimate: no usable h(n)");
  rep.value = rep.raw.back();
  rep.accelerated = rep.raw;
  rep.error_proxy = rep.raw.size() >= 2 ? std::abs(rep.raw.back() - rep.raw[rep.raw.size() - 2])
                                        : 0.0;
  rep.flags.push_back("low-confidence");
  if (!(0.44007584 <= rep.value && rep.value <= 0.463107))
    rep.flags.push_back("outside-rigorous-interval");
  rep.set_target(0.4466);
  return rep;
}

EstimateReport lambda_estimate(const CoveringOptions& options) {
  SeriesTable t;
  t.model = "dimer_coverings_3d";
  t.values[2] = count_dimer_coverings_3d(2, options);
  t.values[4] = count_dimer_coverings_3d(4, options);
  return lambda_estimate(t);
}

}  // namespace latcon
