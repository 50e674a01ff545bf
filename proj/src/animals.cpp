#include "latcon/animals.hpp"

#include <cmath>
#include <memory>

#include "latcon/analysis.hpp"

namespace latcon {

namespace {

// Cells live in the half plane y > 0 or (y == 0 and x >= 0); the origin is
// the canonical first cell. The grid carries a one-cell blocked border.
class Redelmeier {
 public:
  explicit Redelmeier(int max_order) : n_(max_order) {
    width_ = 2 * n_ + 3;
    height_ = n_ + 3;
    blocked_.assign(static_cast<std::size_t>(width_) * height_, 1);
    for (int y = 0; y <= n_; ++y)
      for (int x = -n_; x <= n_; ++x)
        if (y > 0 || x >= 0) blocked_[index(x, y)] = 0;
    origin_ = index(0, 0);
    step_[0] = 1;
    step_[1] = -1;
    step_[2] = width_;
    step_[3] = -width_;
    levels_.assign(n_ + 1, std::vector<int>(4 * n_ + 4));
    placed_.assign(n_ + 1, 0);
    counts_.assign(n_ + 1, 0);
  }

  struct Snapshot {
    std::vector<int> untried;
    std::vector<std::uint8_t> reached;
    std::vector<int> placed;
  };

  // Runs the search from the single-cell start, cutting subtrees at
  // `split` cells into snapshots (split > n_ never cuts).
  std::vector<Snapshot> root(int split) {
    reached_ = blocked_;
    reached_[origin_] = 1;
    levels_[0][0] = origin_;
    split_ = split;
    snapshots_.clear();
    std::fill(counts_.begin(), counts_.end(), 0);
    search(0, 1);
    return std::move(snapshots_);
  }

  template <bool Box>
  void resume(const Snapshot& s) {
    reached_ = s.reached;
    std::copy(s.untried.begin(), s.untried.end(), levels_[s.placed.size()].begin());
    std::copy(s.placed.begin(), s.placed.end(), placed_.begin());
    split_ = n_ + 1;
    std::fill(counts_.begin(), counts_.end(), 0);
    box_.clear();
    search<Box>(static_cast<int>(s.placed.size()), static_cast<int>(s.untried.size()));
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }
  const BoxTally& boxes() const { return box_; }

  template <bool Box = false>
  void search(int size, int untried_count) {
    std::vector<int>& mine = levels_[size];
    while (untried_count > 0) {
      int cell = mine[--untried_count];
      placed_[size] = cell;
      counts_[size + 1] += 1;
      if constexpr (Box) tally(size + 1);
      if (size + 1 == n_) continue;
      std::vector<int>& next = levels_[size + 1];
      std::copy(mine.begin(), mine.begin() + untried_count, next.begin());
      int next_count = untried_count;
      int added[4];
      int n_added = 0;
      for (int d = 0; d < 4; ++d) {
        int nb = cell + step_[d];
        if (reached_[nb]) continue;
        reached_[nb] = 1;
        next[next_count++] = nb;
        added[n_added++] = nb;
      }
      if (size + 1 == split_) {
        Snapshot snap;
        snap.untried.assign(next.begin(), next.begin() + next_count);
        snap.reached = reached_;
        snap.placed.assign(placed_.begin(), placed_.begin() + size + 1);
        snapshots_.push_back(std::move(snap));
      } else {
        search<Box>(size + 1, next_count);
      }
      for (int i = 0; i < n_added; ++i) reached_[added[i]] = 0;
    }
  }

 private:
  int index(int x, int y) const { return (y + 1) * width_ + (x + n_ + 1); }

  void tally(int size) {
    int minx = 1 << 20, maxx = -(1 << 20), miny = minx, maxy = maxx;
    for (int i = 0; i < size; ++i) {
      int x = placed_[i] % width_, y = placed_[i] / width_;
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
    box_[{size, maxx - minx + 1, maxy - miny + 1}] += 1;
  }

  int n_;
  int width_ = 0, height_ = 0;
  int origin_ = 0;
  int step_[4];
  int split_ = 0;
  std::vector<std::uint8_t> blocked_;
  std::vector<std::uint8_t> reached_;
  std::vector<std::vector<int>> levels_;
  std::vector<int> placed_;
  std::vector<std::uint64_t> counts_;
  std::vector<Snapshot> snapshots_;
  BoxTally box_;
};

void check_order(int max_order, const AnimalOptions& options) {
  if (max_order < 1) throw DomainError("count_polyominoes: max_order must be positive");
  options.budget.check(std::pow(4.1, max_order), "count_polyominoes");
}

}  // namespace

AnimalCensus count_polyominoes(int max_order, const AnimalOptions& options) {
  check_order(max_order, options);
  Redelmeier top(max_order);
  auto snaps = top.root(std::max(1, options.split_depth));
  std::vector<std::uint64_t> total = top.counts();

  unsigned threads = std::max(1u, options.threads);
  std::vector<std::vector<std::uint64_t>> partial(snaps.size());
  parallel_for(threads, threads, [&](std::size_t w) {
    Redelmeier worker(max_order);
    for (std::size_t i = w; i < snaps.size(); i += threads) {
      worker.resume<false>(snaps[i]);
      partial[i] = worker.counts();
    }
  });
  for (const auto& p : partial)
    for (int n = 0; n <= max_order; ++n) total[n] += p[n];

  AnimalCensus census;
  census.max_order = max_order;
  census.counts.model = "fixed_polyomino";
  census.counts.params["lattice"] = "square, site";
  for (int n = 1; n <= max_order; ++n) census.counts.values[n] = total[n];
  return census;
}

BoxTally count_polyominoes_by_box(int max_order, const AnimalOptions& options) {
  check_order(max_order, options);
  Redelmeier r(max_order);
  auto snaps = r.root(1);
  BoxTally out;
  out[{1, 1, 1}] = 1;
  for (const auto& s : snaps) {
    r.resume<true>(s);
    for (const auto& [k, v] : r.boxes()) out[k] += v;
  }
  return out;
}

EstimateReport alpha_estimate(const AnimalCensus& census, int order) {
  if (census.max_order < 8) throw DomainError("alpha_estimate: need max_order >= 8");
  std::vector<int> ns;
  std::vector<double> ratios;
  bool above_small = false, above = false;
  const double upper = 4.649551;
  for (int n = 1; n < census.max_order; ++n) {
    double r = to_double(census.counts.at(n + 1)) / to_double(census.counts.at(n));
    ns.push_back(n);
    ratios.push_back(r);
    if (r > upper) (n >= 10 ? above : above_small) = true;
  }
  auto rep = richardson_estimate("A(n+1)/A(n), Richardson order " + std::to_string(order) +
                                     " in 1/n",
                                 ns, ratios, order);
  if (above) rep.flags.push_back("ratio-above-upper-bound");
  if (above_small) rep.flags.push_back("ratio-above-upper-bound-small-n");
  return rep;
}

}  // namespace latcon
