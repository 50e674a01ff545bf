#include "latcon/core.hpp"

#include <cmath>
#include <cstdlib>

namespace latcon {

const BigCount& SeriesTable::at(int index) const {
  auto it = values.find(index);
  if (it == values.end())
    throw DomainError(model + ": index " + std::to_string(index) + " not in table");
  return it->second;
}

bool EstimateReport::has_flag(const std::string& f) const {
  for (const auto& x : flags)
    if (x == f) return true;
  return false;
}

WorkBudget::WorkBudget(double units) : units_(units) {
  if (!(units > 0)) throw DomainError("work budget must be positive");
}

WorkBudget WorkBudget::from_environment() {
  if (const char* env = std::getenv("LATCON_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return WorkBudget(v);
  }
  return WorkBudget();
}

void WorkBudget::check(double projected, const std::string& what) const {
  if (projected > units_) {
    throw BudgetExceeded(what + ": projected work " + std::to_string(projected) +
                         " exceeds budget " + std::to_string(units_));
  }
}

double pairwise_sum(const double* data, std::size_t count) {
  if (count == 0) return 0.0;
  if (count <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += data[i];
    return s;
  }
  std::size_t half = count / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

std::string to_string(const BigCount& c) { return c.str(); }

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const BigCount& c) { return c.convert_to<double>(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

double log_big(const BigCount& c) {
  if (c <= 0) throw DomainError("log of non-positive count");
  if (boost::multiprecision::msb(c) < 1000) return std::log(c.convert_to<double>());
  // The binary float's exponent range covers any count we can hold.
  return static_cast<double>(log(HighReal(c)));
}

}  // namespace latcon
