#pragma once

// Shared vocabulary for the lattice-constant library: exact and extended
// precision number types, the error hierarchy, series tables, estimate
// reports, work budgets, and a deterministic parallel loop.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace latcon {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using HighReal = boost::multiprecision::cpp_bin_float_50;

/// Precondition or argument outside the operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Projected work exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes to the same quantity disagree.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical procedure failed to converge or bracket.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered index -> exact count map with provenance metadata.
struct SeriesTable {
  std::string model;
  std::map<std::string, std::string> params;
  std::map<int, BigCount> values;

  const BigCount& at(int index) const;
  bool contains(int index) const { return values.count(index) != 0; }
};

/// Result of an extrapolation: limit estimate plus the sequences it came from.
struct EstimateReport {
  std::string method;
  double value = 0.0;
  std::vector<int> indices;            // n for each raw term
  std::vector<double> raw;
  std::vector<double> accelerated;
  double error_proxy = 0.0;            // spread of the last accelerated iterates
  std::vector<std::string> flags;
  std::optional<double> target;
  std::optional<double> residual;      // value - target

  void set_target(double t) {
    target = t;
    residual = value - t;
  }
  bool has_flag(const std::string& f) const;
};

/// Guard on projected work units (nodes, states x steps, ...).
class WorkBudget {
 public:
  static constexpr double kDefaultUnits = 1e11;
  explicit WorkBudget(double units = kDefaultUnits);

  /// Default budget, overridden by the LATCON_BUDGET environment variable.
  static WorkBudget from_environment();

  double units() const { return units_; }
  void check(double projected, const std::string& what) const;

 private:
  double units_;
};

inline unsigned default_threads() {
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

/// Runs body(i) for i in [0, count) on `threads` workers with static
/// chunking. The body must write only to slots owned by its index.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

/// Pairwise sum in index order; result depends only on the input order.
double pairwise_sum(const double* data, std::size_t count);

/// Evaluates a counting kernel with the cheapest integer type that does not
/// overflow. The kernel is a generic callable invoked as
/// `kernel.template operator()<T>()` and must only add and multiply.
template <class Kernel>
BigCount count_with_fallback(Kernel&& kernel) {
  using namespace boost::multiprecision;
  try {
    return BigCount(kernel.template operator()<checked_uint128_t>());
  } catch (const std::overflow_error&) {
  }
  try {
    return BigCount(kernel.template operator()<checked_uint512_t>());
  } catch (const std::overflow_error&) {
  }
  try {
    return BigCount(kernel.template operator()<checked_uint1024_t>());
  } catch (const std::overflow_error&) {
  }
  return kernel.template operator()<BigCount>();
}

std::string to_string(const BigCount& c);
std::string to_string(const Rational& r);
double to_double(const BigCount& c);
double to_double(const Rational& r);

/// Natural log of a positive big integer without overflow.
double log_big(const BigCount& c);

}  // namespace latcon
