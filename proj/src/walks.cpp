#include "latcon/walks.hpp"

#include <cmath>
#include <memory>

namespace latcon {

namespace {

// Rough growth rates used only for budget projection.
double growth_rate(int dim) {
  static const double mu[] = {1.0, 1.0, 2.6381585, 4.683907, 6.7720, 8.8386, 10.8788};
  if (dim <= 6) return mu[dim];
  return 2.0 * dim - 1.0 - 1.0 / (2.0 * dim);
}

struct Task {
  std::vector<int> path;  // direction indices
  std::uint64_t weight = 0;
};

// Depth-first walker over a box of side 2 * max_len + 1 centred on the origin.
class Walker {
 public:
  Walker(int dim, int max_len) : dim_(dim), max_len_(max_len) {
    const long side = 2L * max_len + 1;
    long stride = 1;
    long volume = 1;
    for (int k = 0; k < dim; ++k) {
      step_.push_back(stride);
      step_.push_back(-stride);
      stride *= side;
      volume *= side;
    }
    occ_.assign(static_cast<std::size_t>(volume), 0);
    origin_ = volume / 2;
    pos_.assign(dim, 0);
    count_.assign(max_len + 1, 0);
    sq_.assign(max_len + 1, 0);
  }

  // Replays a prefix, then counts every continuation up to max_len.
  // Walks of the prefix's own length and below are not recorded here.
  void run(const std::vector<int>& path) {
    std::fill(count_.begin(), count_.end(), 0);
    std::fill(sq_.begin(), sq_.end(), 0);
    long site = origin_;
    std::int64_t sqn = 0;
    occ_[site] = 1;
    std::vector<long> visited{site};
    for (int dir : path) {
      sqn = move(dir, sqn);
      site += step_[dir];
      occ_[site] = 1;
      visited.push_back(site);
    }
    const int depth = static_cast<int>(path.size());
    if (depth < max_len_) recurse(site, depth, sqn);
    for (long v : visited) occ_[v] = 0;
    for (int k = dim_ - 1; k >= 0; --k) pos_[k] = 0;
  }

  const std::vector<std::uint64_t>& counts() const { return count_; }
  const std::vector<std::uint64_t>& squares() const { return sq_; }

 private:
  std::int64_t move(int dir, std::int64_t sqn) {
    int axis = dir >> 1;
    int sign = (dir & 1) ? -1 : 1;
    sqn += 2 * sign * pos_[axis] + 1;
    pos_[axis] += sign;
    return sqn;
  }

  void unmove(int dir) { pos_[dir >> 1] -= (dir & 1) ? -1 : 1; }

  void recurse(long site, int depth, std::int64_t sqn) {
    const int dirs = 2 * dim_;
    if (depth + 1 == max_len_) {
      for (int dir = 0; dir < dirs; ++dir) {
        if (occ_[site + step_[dir]]) continue;
        int axis = dir >> 1;
        int sign = (dir & 1) ? -1 : 1;
        count_[depth + 1] += 1;
        sq_[depth + 1] += static_cast<std::uint64_t>(sqn + 2 * sign * pos_[axis] + 1);
      }
      return;
    }
    for (int dir = 0; dir < dirs; ++dir) {
      long t = site + step_[dir];
      if (occ_[t]) continue;
      occ_[t] = 1;
      std::int64_t next = move(dir, sqn);
      count_[depth + 1] += 1;
      sq_[depth + 1] += static_cast<std::uint64_t>(next);
      recurse(t, depth + 1, next);
      unmove(dir);
      occ_[t] = 0;
    }
  }

  int dim_;
  int max_len_;
  std::vector<long> step_;
  std::vector<std::uint8_t> occ_;
  long origin_ = 0;
  std::vector<int> pos_;
  std::vector<std::uint64_t> count_;
  std::vector<std::uint64_t> sq_;
};

// Generates weighted prefixes. Walks that are still straight along +e0 are
// expanded to full length here (they form a single chain); once a walk has
// deviated it becomes a task at split_depth. Prefix walks themselves are
// tallied into count/sq with their weights.
class PrefixBuilder {
 public:
  PrefixBuilder(int dim, int max_len, const WalkOptions& opt)
      : count(max_len + 1), sq(max_len + 1), dim_(dim), max_len_(max_len), opt_(opt) {}

  void build() {
    count[0] = 1;
    sq[0] = 0;
    const std::uint64_t base = 2ULL * dim_;
    for (int len = 1; len <= max_len_; ++len) {
      // The straight walk of length len, in all 2d orientations.
      count[len] += base;
      sq[len] += BigCount(base) * len * len;
    }
    // Deviations from the straight chain after `j` straight steps (j >= 1).
    for (int j = 1; j < max_len_; ++j) {
      std::vector<int> path(j, 0);
      for (int dir = 2; dir < 2 * dim_; ++dir) {
        std::uint64_t w;
        if (opt_.dihedral) {
          if (dir != 2) continue;
          w = base * 2ULL * (dim_ - 1);
        } else {
          w = base;
        }
        path.push_back(dir);
        expand(path, w);
        path.pop_back();
      }
    }
  }

  std::vector<Task> tasks;
  std::vector<BigCount> count;
  std::vector<BigCount> sq;

 private:
  void expand(std::vector<int>& path, std::uint64_t w) {
    const int len = static_cast<int>(path.size());
    // Record this prefix walk.
    std::int64_t s = 0;
    std::vector<int> pos(dim_, 0);
    for (int dir : path) pos[dir >> 1] += (dir & 1) ? -1 : 1;
    for (int c : pos) s += static_cast<std::int64_t>(c) * c;
    count[len] += w;
    sq[len] += BigCount(w) * s;
    if (len == max_len_) return;
    if (len >= opt_.split_depth) {
      tasks.push_back({path, w});
      return;
    }
    for (int dir = 0; dir < 2 * dim_; ++dir) {
      if (visits_itself(path, dir)) continue;
      path.push_back(dir);
      expand(path, w);
      path.pop_back();
    }
  }

  bool visits_itself(const std::vector<int>& path, int dir) const {
    std::vector<int> pos(dim_, 0);
    std::vector<std::vector<int>> seen{pos};
    for (int d : path) {
      pos[d >> 1] += (d & 1) ? -1 : 1;
      seen.push_back(pos);
    }
    pos[dir >> 1] += (dir & 1) ? -1 : 1;
    for (const auto& p : seen)
      if (p == pos) return true;
    return false;
  }

  int dim_;
  int max_len_;
  const WalkOptions& opt_;
};

}  // namespace

WalkCensus enumerate_saw(int dim, int max_len, const WalkOptions& options) {
  if (dim < 1) throw DomainError("enumerate_saw: dimension must be positive");
  if (max_len < 1) throw DomainError("enumerate_saw: max_len must be positive");
  double box = std::pow(2.0 * max_len + 1.0, dim);
  if (box > 4e8) throw BudgetExceeded("enumerate_saw: occupancy box too large");
  options.budget.check(std::pow(growth_rate(dim), max_len), "enumerate_saw");

  PrefixBuilder prefixes(dim, max_len, options);
  prefixes.build();

  const auto& tasks = prefixes.tasks;
  std::vector<std::vector<std::uint64_t>> task_counts(tasks.size()), task_sq(tasks.size());
  unsigned threads = std::max(1u, options.threads);
  std::vector<std::unique_ptr<Walker>> walkers(threads);
  // Static assignment: worker w handles tasks w, w + threads, ...
  parallel_for(threads, threads, [&](std::size_t w) {
    walkers[w] = std::make_unique<Walker>(dim, max_len);
    for (std::size_t i = w; i < tasks.size(); i += threads) {
      walkers[w]->run(tasks[i].path);
      task_counts[i] = walkers[w]->counts();
      task_sq[i] = walkers[w]->squares();
    }
  });

  std::vector<BigCount> count = prefixes.count;
  std::vector<BigCount> sq = prefixes.sq;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    BigCount w = tasks[i].weight;
    for (int n = 0; n <= max_len; ++n) {
      if (task_counts[i][n] == 0) continue;
      count[n] += w * task_counts[i][n];
      sq[n] += w * task_sq[i][n];
    }
  }

  WalkCensus census;
  census.dim = dim;
  census.max_len = max_len;
  census.counts.model = "saw_count";
  census.sq_disp_sums.model = "saw_square_displacement_sum";
  for (auto* t : {&census.counts, &census.sq_disp_sums}) {
    t->params["dim"] = std::to_string(dim);
    t->params["lattice"] = "hypercubic, infinite";
  }
  for (int n = 0; n <= max_len; ++n) {
    census.counts.values[n] = count[n];
    census.sq_disp_sums.values[n] = sq[n];
  }
  return census;
}

Rational mean_square_displacement(const WalkCensus& census, int n) {
  if (n < 0 || n > census.max_len)
    throw DomainError("mean_square_displacement: n out of range");
  const BigCount& c = census.counts.at(n);
  if (c == 0) throw DomainError("mean_square_displacement: no walks of this length");
  return Rational(census.sq_disp_sums.at(n), c);
}

EstimateReport mu_estimate(const WalkCensus& census, int order) {
  // A parity oscillation survives in the ratios; keep the n with the same
  // parity as max_len.
  std::vector<int> ns;
  std::vector<double> ratios;
  for (int n = census.max_len; n >= 3; n -= 2) {
    double lr = log_big(census.counts.at(n)) - log_big(census.counts.at(n - 2));
    ns.insert(ns.begin(), n);
    ratios.insert(ratios.begin(), std::exp(0.5 * lr));
  }
  if (static_cast<int>(ns.size()) < order + 1) throw DomainError("mu_estimate: sequence too short");
  return richardson_estimate("sqrt(c(n)/c(n-2)), n = max_len mod 2, Richardson order " +
                                 std::to_string(order) + " in 1/n",
                             ns, ratios, order);
}

FitResult fit_gamma(const WalkCensus& census, double mu) {
  std::vector<int> ns;
  std::vector<double> logs;
  for (int n = 1; n <= census.max_len; ++n) {
    ns.push_back(n);
    logs.push_back(log_big(census.counts.at(n)));
  }
  return fit_exponent_log(ns, logs, FitMode::Growth, mu);
}

FitResult fit_nu(const WalkCensus& census) {
  std::vector<int> ns;
  std::vector<double> vals;
  for (int n = 1; n <= census.max_len; ++n) {
    ns.push_back(n);
    vals.push_back(to_double(mean_square_displacement(census, n)));
  }
  return fit_exponent(ns, vals, FitMode::Displacement);
}

}  // namespace latcon
