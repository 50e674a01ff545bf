#include "latcon/percolation.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace latcon {

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based stream: the state depends only on (seed, index).
struct Stream {
  std::uint64_t state;
  Stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix(s);
    std::uint64_t t = index ^ a;
    state = splitmix(t);
  }
  double uniform() { return static_cast<double>(splitmix(state) >> 11) * 0x1.0p-53; }
};

class UnionFind {
 public:
  void reset(int n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(n, 1);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

LatticeSpec grid_spec(PercLattice lattice, int n) {
  LatticeSpec spec;
  spec.dim = 2;
  spec.side = n;
  spec.boundary = Boundary::Free;
  spec.adjacency = lattice == PercLattice::Square ? Adjacency::SquareNN : Adjacency::Triangular;
  return spec;
}

struct Geometry {
  int n = 0;
  int sites = 0;
  std::vector<std::pair<int, int>> bonds;
  std::vector<int> adj_offset, adj;

  Geometry(PercLattice lattice, int side) : n(side) {
    Lattice lat(grid_spec(lattice, side));
    sites = lat.site_count();
    for (int b = 0; b < lat.bond_count(); ++b) bonds.push_back(lat.bond_ends(b));
    adj_offset.push_back(0);
    for (int s = 0; s < sites; ++s) {
      for (auto it = lat.incident_begin(s); it != lat.incident_end(s); ++it) adj.push_back(it->site);
      adj_offset.push_back(static_cast<int>(adj.size()));
    }
  }
};

ClusterStats collect(UnionFind& uf, int sites, const std::vector<std::uint8_t>& member,
                     const std::vector<std::int64_t>& weight) {
  std::vector<std::int64_t> total(sites, 0);
  std::vector<std::uint8_t> root_seen(sites, 0);
  ClusterStats out;
  for (int s = 0; s < sites; ++s) {
    if (!member[s]) continue;
    int r = uf.find(s);
    total[r] += weight[s];
    root_seen[r] = 1;
    ++out.sites_in_clusters;
  }
  for (int s = 0; s < sites; ++s)
    if (root_seen[s]) out.cluster_sizes.push_back(total[s]);
  std::sort(out.cluster_sizes.begin(), out.cluster_sizes.end());
  return out;
}

void check_mc(double p, int n, std::int64_t trials, const MonteCarloOptions& options,
              double per_trial) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("percolation: p must lie in [0, 1]");
  if (n < 2) throw DomainError("percolation: side must be >= 2");
  if (trials < 1) throw DomainError("percolation: trials must be >= 1");
  options.budget.check(per_trial * static_cast<double>(trials), "percolation Monte Carlo");
}

// Per-trial sample: cluster count and mean cluster size (NaN when empty).
struct Sample {
  double clusters;
  double mean_size;
};

Sample sample_once(PercMode mode, const Geometry& g, double p, Stream& rng, UnionFind& uf,
                   std::vector<std::uint8_t>& occ) {
  uf.reset(g.sites);
  if (mode == PercMode::Site) {
    occ.assign(g.sites, 0);
    int occupied = 0;
    for (int s = 0; s < g.sites; ++s)
      if (rng.uniform() < p) {
        occ[s] = 1;
        ++occupied;
      }
    int merges = 0;
    for (const auto& [a, b] : g.bonds)
      if (occ[a] && occ[b] && uf.unite(a, b)) ++merges;
    double clusters = occupied - merges;
    return {clusters, clusters > 0 ? occupied / clusters : std::nan("")};
  }
  occ.assign(g.sites, 0);
  int merges = 0, open = 0;
  for (const auto& [a, b] : g.bonds) {
    if (rng.uniform() < p) {
      ++open;
      occ[a] = occ[b] = 1;
      if (uf.unite(a, b)) ++merges;
    }
  }
  int touched = static_cast<int>(std::count(occ.begin(), occ.end(), 1));
  double clusters = g.sites - merges;
  double positive = clusters - (g.sites - touched);
  return {clusters, positive > 0 ? open / positive : std::nan("")};
}

template <class Body>
void run_trials(std::int64_t trials, unsigned threads, Body&& body) {
  unsigned workers = std::max(1u, threads);
  parallel_for(workers, workers, [&](std::size_t w) {
    UnionFind uf;
    std::vector<std::uint8_t> occ;
    for (std::int64_t t = static_cast<std::int64_t>(w); t < trials; t += workers) body(t, uf, occ);
  });
}

// Values are divided by `scale` only after summation, so integer-valued
// samples (cluster counts) are summed exactly.
MonteCarloEstimate summarize(std::vector<double> values, double scale = 1.0) {
  MonteCarloEstimate est;
  std::vector<double> kept;
  kept.reserve(values.size());
  for (double v : values) {
    if (std::isnan(v)) ++est.skipped;
    else kept.push_back(v);
  }
  est.trials = static_cast<std::int64_t>(values.size());
  const std::size_t m = kept.size();
  if (m == 0) return est;
  est.mean = pairwise_sum(kept.data(), m) / static_cast<double>(m);
  if (m > 1) {
    std::vector<double> sq(m);
    for (std::size_t i = 0; i < m; ++i) sq[i] = (kept[i] - est.mean) * (kept[i] - est.mean);
    double var = pairwise_sum(sq.data(), m) / static_cast<double>(m - 1);
    est.std_error = std::sqrt(var / static_cast<double>(m)) / scale;
  }
  est.mean /= scale;
  return est;
}

std::vector<double> sample_series(PercMode mode, PercLattice lattice, double p, int n,
                                  std::int64_t trials, std::uint64_t seed,
                                  const MonteCarloOptions& options, bool density) {
  Geometry g(lattice, n);
  check_mc(p, n, trials, options, 4.0 * (g.sites + static_cast<double>(g.bonds.size())));
  std::vector<double> out(trials);
  run_trials(trials, options.threads, [&](std::int64_t t, UnionFind& uf, auto& occ) {
    Stream rng(seed, static_cast<std::uint64_t>(t));
    Sample s = sample_once(mode, g, p, rng, uf, occ);
    out[t] = density ? s.clusters : s.mean_size;
  });
  return out;
}

// Occupation level at which a left-right crossing first appears.
double crossing_threshold(PercMode mode, const Geometry& g, Stream& rng, UnionFind& uf,
                          std::vector<std::uint8_t>& occ) {
  const int left = g.sites, right = g.sites + 1;
  const std::size_t elements = mode == PercMode::Site ? g.sites : g.bonds.size();
  std::vector<std::pair<double, int>> order(elements);
  for (std::size_t i = 0; i < elements; ++i) order[i] = {rng.uniform(), static_cast<int>(i)};
  std::sort(order.begin(), order.end());
  uf.reset(g.sites + 2);
  auto attach_edges = [&](int s) {
    int col = s % g.n;
    if (col == 0) uf.unite(s, left);
    if (col == g.n - 1) uf.unite(s, right);
  };
  if (mode == PercMode::Bond) {
    for (int s = 0; s < g.sites; ++s) attach_edges(s);
  } else {
    occ.assign(g.sites, 0);
  }
  for (const auto& [u, idx] : order) {
    if (mode == PercMode::Site) {
      occ[idx] = 1;
      attach_edges(idx);
      for (int k = g.adj_offset[idx]; k < g.adj_offset[idx + 1]; ++k)
        if (occ[g.adj[k]]) uf.unite(idx, g.adj[k]);
    } else {
      uf.unite(g.bonds[idx].first, g.bonds[idx].second);
    }
    if (uf.find(left) == uf.find(right)) return u;
  }
  return 1.0;
}

double median_crossing(const std::vector<double>& thresholds) {
  auto fraction = [&](double p) {
    auto it = std::upper_bound(thresholds.begin(), thresholds.end(), p);
    return static_cast<double>(it - thresholds.begin()) / static_cast<double>(thresholds.size());
  };
  double lo = 0.0, hi = 1.0;
  if (!(fraction(lo) < 0.5 && fraction(hi) >= 0.5))
    throw NumericalError("estimate_pc: crossing probability does not bracket 1/2");
  for (int it = 0; it < 64; ++it) {
    double mid = 0.5 * (lo + hi);
    if (fraction(mid) >= 0.5) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::uint64_t side_seed(std::uint64_t seed, int n) {
  std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(n));
  return splitmix(s);
}

}  // namespace

std::string to_string(PercMode m) { return m == PercMode::Site ? "site" : "bond"; }
std::string to_string(PercLattice l) { return l == PercLattice::Square ? "square" : "tri"; }

SiteConfig SiteConfig::from_matrix(const std::vector<std::vector<int>>& rows) {
  SiteConfig c;
  c.spec = grid_spec(PercLattice::Square, static_cast<int>(rows.size()));
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw DomainError("SiteConfig: matrix must be square");
    for (int v : r) {
      if (v != 0 && v != 1) throw DomainError("SiteConfig: entries must be 0 or 1");
      c.occupancy.push_back(static_cast<std::uint8_t>(v));
    }
  }
  c.validate();
  return c;
}

void SiteConfig::validate() const {
  spec.validate();
  if (spec.dim != 2 || spec.boundary != Boundary::Free || spec.adjacency != Adjacency::SquareNN)
    throw DomainError("SiteConfig: free square lattice required");
  if (static_cast<std::int64_t>(occupancy.size()) != spec.site_count())
    throw DomainError("SiteConfig: occupancy size does not match the lattice");
}

BondConfig BondConfig::from_array(const std::vector<std::vector<int>>& rows) {
  const int lines = static_cast<int>(rows.size());
  if (lines < 1 || lines % 2 == 0) throw DomainError("BondConfig: array needs 2n-1 rows");
  const int n = (lines + 1) / 2;
  BondConfig c;
  c.spec = grid_spec(PercLattice::Square, n);
  Lattice lat(c.spec);
  c.bond_occupancy.assign(lat.bond_count(), 0);
  for (int k = 0; k < lines; ++k) {
    const bool horizontal = k % 2 == 0;
    const int i = k / 2;
    const auto& r = rows[k];
    if (static_cast<int>(r.size()) != (horizontal ? n - 1 : n))
      throw DomainError("BondConfig: row " + std::to_string(k) + " has the wrong length");
    for (int j = 0; j < static_cast<int>(r.size()); ++j) {
      if (r[j] != 0 && r[j] != 1) throw DomainError("BondConfig: entries must be 0 or 1");
      // Forward slot 0 is +e0 (next row), slot 1 is +e1 (next column).
      int bond = lat.bond_index(i * n + j, horizontal ? 1 : 0);
      c.bond_occupancy[bond] = static_cast<std::uint8_t>(r[j]);
    }
  }
  return c;
}

void BondConfig::validate() const {
  spec.validate();
  if (spec.dim != 2 || spec.boundary != Boundary::Free ||
      (spec.adjacency != Adjacency::SquareNN && spec.adjacency != Adjacency::Triangular))
    throw DomainError("BondConfig: free square or triangular lattice required");
  if (bond_occupancy.size() != bonds(spec).size())
    throw DomainError("BondConfig: occupancy size does not match the bond count");
}

ClusterStats label_clusters_site(const SiteConfig& config) {
  config.validate();
  Lattice lat(config.spec);
  UnionFind uf;
  uf.reset(lat.site_count());
  for (int b = 0; b < lat.bond_count(); ++b) {
    auto [u, v] = lat.bond_ends(b);
    if (config.occupancy[u] && config.occupancy[v]) uf.unite(u, v);
  }
  std::vector<std::int64_t> weight(lat.site_count(), 1);
  ClusterStats out = collect(uf, lat.site_count(), config.occupancy, weight);
  out.total_clusters = static_cast<std::int64_t>(out.cluster_sizes.size());
  return out;
}

ClusterStats label_clusters_bond(const BondConfig& config) {
  config.validate();
  Lattice lat(config.spec);
  const int sites = lat.site_count();
  UnionFind uf;
  uf.reset(sites);
  std::vector<std::uint8_t> touched(sites, 0);
  std::vector<std::int64_t> weight(sites, 0);
  for (int b = 0; b < lat.bond_count(); ++b) {
    if (!config.bond_occupancy[b]) continue;
    auto [u, v] = lat.bond_ends(b);
    touched[u] = touched[v] = 1;
    uf.unite(u, v);
    weight[u] += 1;  // each bond counted once, at its origin
  }
  ClusterStats out = collect(uf, sites, touched, weight);
  out.zero_clusters = sites - out.sites_in_clusters;
  out.total_clusters = static_cast<std::int64_t>(out.cluster_sizes.size()) + out.zero_clusters;
  return out;
}

std::optional<Rational> mean_cluster_size(const ClusterStats& stats) {
  if (stats.cluster_sizes.empty()) return std::nullopt;
  std::int64_t sum = std::accumulate(stats.cluster_sizes.begin(), stats.cluster_sizes.end(),
                                     std::int64_t{0});
  return Rational(sum, static_cast<std::int64_t>(stats.cluster_sizes.size()));
}

MonteCarloEstimate mean_cluster_density(PercMode mode, PercLattice lattice, double p, int n,
                                        std::int64_t trials, std::uint64_t seed,
                                        const MonteCarloOptions& options) {
  return summarize(sample_series(mode, lattice, p, n, trials, seed, options, true),
                   static_cast<double>(n) * n);
}

MonteCarloEstimate mean_cluster_size(PercMode mode, PercLattice lattice, double p, int n,
                                     std::int64_t trials, std::uint64_t seed,
                                     const MonteCarloOptions& options) {
  return summarize(sample_series(mode, lattice, p, n, trials, seed, options, false));
}

DensityExtrapolation extrapolate_cluster_density(PercMode mode, PercLattice lattice, double p,
                                                 const std::vector<int>& sides,
                                                 std::int64_t trials, std::uint64_t seed,
                                                 const MonteCarloOptions& options) {
  if (sides.size() < 2) throw DomainError("extrapolate_cluster_density: need >= 2 sides");
  DensityExtrapolation out;
  out.sides = sides;
  for (int n : sides)
    out.raw.push_back(mean_cluster_density(mode, lattice, p, n, trials, side_seed(seed, n), options));
  // Lagrange weights of the interpolating polynomial in x = 1/n at x = 0.
  const std::size_t m = sides.size();
  double value = 0.0, var = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double w = 1.0;
    const double xi = 1.0 / sides[i];
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const double xj = 1.0 / sides[j];
      if (xj == xi) throw DomainError("extrapolate_cluster_density: repeated side");
      w *= xj / (xj - xi);
    }
    value += w * out.raw[i].mean;
    var += w * w * out.raw[i].std_error * out.raw[i].std_error;
  }
  out.value = value;
  out.std_error = std::sqrt(var);
  return out;
}

HighReal exact_kb_half_closed() { return (3 * sqrt(HighReal(3)) - 5) / 2; }

KbIntegralResult kb_half_integral(double truncation, double step) {
  if (!(truncation > 1.0) || !(step > 0.0 && step < 0.1))
    throw DomainError("kb_half_integral: need truncation > 1 and 0 < step < 0.1");
  using boost::math::quadrature::gauss_kronrod;
  const double pi = boost::math::constants::pi<double>();
  const double eps = 0.5;
  KbIntegralResult res;

  // F(y) = (1/y) * integral over the real line (even integrand).
  auto F = [&](double y) {
    const double c = std::cos(2 * y);
    const double k = pi / (2 * y);
    auto g = [=](double x) {
      double num = std::log(std::cosh(x) - c);
      double den = std::log(2.0) + 2 * std::log(std::sinh(0.5 * x));
      return (num - den) / std::cosh(k * x);
    };
    double e1 = 0, e2 = 0;
    // Near 0 the integrand behaves like -2 ln x; subtract it and add back
    // the closed form of its integral over [0, eps].
    double near = gauss_kronrod<double, 61>::integrate(
        [&](double x) { return g(x) + 2 * std::log(x); }, 0.0, eps, 15, 1e-14, &e1);
    near -= 2 * (eps * std::log(eps) - eps);
    double far = gauss_kronrod<double, 61>::integrate(g, eps, truncation, 15, 1e-14, &e2);
    res.quadrature_error = std::max({res.quadrature_error, e1, e2});
    // Tail beyond the truncation: sech(kx) <= 2 e^{-kx} and
    // ln(1 + (1-c)/(cosh x - 1)) <= 4 (1-c) e^{-x} for x >= 2.
    double rate = k + 1;
    double tail = 8 * (1 - c) * std::exp(-rate * truncation) / rate;
    res.truncation_bound = std::max(res.truncation_bound, 2 * tail / y);
    return 2 * (near + far) / y;
  };

  const double y = pi / 3;
  auto D = [&](double h) { return (F(y + h) - F(y - h)) / (2 * h); };
  double d0 = D(step), d1 = D(step / 2), d2 = D(step / 4);
  double r01 = (4 * d1 - d0) / 3, r12 = (4 * d2 - d1) / 3;
  double r = (16 * r12 - r01) / 15;
  res.derivative_spread = std::abs(r - r12);
  HighReal cot = 1 / tan(boost::math::constants::pi<HighReal>() / 3);
  res.value = -cot * HighReal(r) / 8;
  return res;
}

HighReal exact_kb_half_integral() {
  auto r = kb_half_integral();
  if (!(r.quadrature_error < 1e-8)) throw NumericalError("kb_half_integral: quadrature did not converge");
  return r.value;
}

HighReal exact_kb_triangular() {
  const HighReal pi = boost::math::constants::pi<HighReal>();
  const HighReal csc_form = HighReal(35) / 4 - HighReal(3) / 2 / sin(pi / 18);
  // Principal cube roots of 4(1 +- i sqrt 3).
  const HighReal re = 4, im = 4 * sqrt(HighReal(3));
  const HighReal radius = cbrt(sqrt(re * re + im * im));
  HighReal sum_re = 0, sum_im = 0;
  for (int sign : {1, -1}) {
    HighReal arg = atan2(sign * im, re) / 3;
    sum_re += radius * cos(arg);
    sum_im += radius * sin(arg);
  }
  const HighReal radical_form = HighReal(23) / 4 - HighReal(3) / 2 * sum_re;
  if (abs(sum_im) > HighReal(1e-30) || abs(csc_form - radical_form) > HighReal(1e-12))
    throw ConsistencyError("exact_kb_triangular: the csc and cube-root forms disagree");
  return csc_form;
}

HighReal pc_bond_triangular() {
  return 2 * sin(boost::math::constants::pi<HighReal>() / 18);
}

EstimateReport estimate_pc(PercMode mode, PercLattice lattice, const std::vector<int>& sides,
                           std::int64_t trials, std::uint64_t seed,
                           const MonteCarloOptions& options) {
  if (sides.size() < 3) throw DomainError("estimate_pc: need at least 3 sides");
  if (trials < 1000) throw DomainError("estimate_pc: need at least 1000 trials per side");
  EstimateReport rep;
  rep.method = "median left-right crossing point per side, fit p_n = p_c + a n^(-3/4)";
  for (int n : sides) {
    Geometry g(lattice, n);
    const double elements = mode == PercMode::Site ? g.sites : g.bonds.size();
    check_mc(0.5, n, trials, options, 8.0 * elements * std::log2(elements + 2));
    std::vector<double> thresholds(trials);
    const std::uint64_t s = side_seed(seed, n);
    run_trials(trials, options.threads, [&](std::int64_t t, UnionFind& uf, auto& occ) {
      Stream rng(s, static_cast<std::uint64_t>(t));
      thresholds[t] = crossing_threshold(mode, g, rng, uf, occ);
    });
    std::sort(thresholds.begin(), thresholds.end());
    rep.indices.push_back(n);
    rep.raw.push_back(median_crossing(thresholds));
  }
  // Least squares in x = n^(-3/4).
  const std::size_t m = sides.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double x = std::pow(static_cast<double>(sides[i]), -0.75);
    sx += x;
    sy += rep.raw[i];
    sxx += x * x;
    sxy += x * rep.raw[i];
  }
  const double det = m * sxx - sx * sx;
  if (det == 0) throw DomainError("estimate_pc: sides must differ");
  const double slope = (m * sxy - sx * sy) / det;
  const double intercept = (sy - slope * sx) / m;
  double rss = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double x = std::pow(static_cast<double>(sides[i]), -0.75);
    double r = rep.raw[i] - (intercept + slope * x);
    rss += r * r;
  }
  rep.value = intercept;
  rep.accelerated = {intercept};
  rep.error_proxy = std::sqrt(rss / m);
  if (mode == PercMode::Site && lattice == PercLattice::Square) {
    rep.set_target(0.5927460);
    if (!(0.556 < rep.value && rep.value < 0.679492)) rep.flags.push_back("outside-rigorous-interval");
  } else if (mode == PercMode::Bond && lattice == PercLattice::Square) {
    rep.set_target(0.5);
  } else if (mode == PercMode::Bond) {
    rep.set_target(pc_bond_triangular().convert_to<double>());
  } else {
    rep.set_target(0.5);
  }
  return rep;
}

}  // namespace latcon
