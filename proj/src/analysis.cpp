#include "latcon/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace latcon {

AccelResult aitken(const std::vector<double>& seq) {
  if (seq.size() < 3) throw DomainError("aitken needs at least 3 terms");
  AccelResult out;
  for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
    double a = seq[i], b = seq[i + 1], c = seq[i + 2];
    double d1 = c - b;
    double d2 = d1 - (b - a);
    double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1e-300});
    if (!std::isfinite(d2) || std::abs(d2) <= 1e-14 * scale) {
      out.values.push_back(c);
      if (d1 != 0.0 || b != a) out.flagged.push_back(static_cast<int>(i + 2));
      continue;
    }
    double v = c - d1 * d1 / d2;
    if (!std::isfinite(v)) {
      out.values.push_back(c);
      out.flagged.push_back(static_cast<int>(i + 2));
      continue;
    }
    out.values.push_back(v);
  }
  return out;
}

AccelResult richardson(const std::vector<int>& ns, const std::vector<double>& seq, int order,
                       double power) {
  if (ns.size() != seq.size()) throw DomainError("richardson: index and value lengths differ");
  if (order < 0) throw DomainError("richardson: negative order");
  if (seq.size() < static_cast<std::size_t>(order) + 1)
    throw DomainError("richardson: sequence shorter than order + 1");
  AccelResult out;
  std::vector<double> x(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] <= 0) throw DomainError("richardson: indices must be positive");
    x[i] = std::pow(static_cast<double>(ns[i]), -power);
  }
  for (std::size_t start = 0; start + order < seq.size(); ++start) {
    // Neville tableau evaluated at x = 0 in difference form, so that equal
    // inputs reproduce themselves exactly.
    std::vector<double> p(seq.begin() + start, seq.begin() + start + order + 1);
    bool bad = false;
    for (int level = 1; level <= order; ++level) {
      for (int i = 0; i + level <= order; ++i) {
        double xi = x[start + i], xj = x[start + i + level];
        double denom = xi - xj;
        if (denom == 0.0) {
          bad = true;
          break;
        }
        double diff = p[i + 1] - p[i];
        p[i] = p[i + 1] + diff * xj / denom;
      }
      if (bad) break;
    }
    if (bad || !std::isfinite(p[0])) {
      out.values.push_back(seq[start + order]);
      out.flagged.push_back(static_cast<int>(start + order));
    } else {
      out.values.push_back(p[0]);
    }
  }
  return out;
}

EstimateReport richardson_estimate(const std::string& method, const std::vector<int>& ns,
                                   const std::vector<double>& seq, int order, double power) {
  EstimateReport r;
  r.method = method;
  r.indices = ns;
  r.raw = seq;
  auto acc = richardson(ns, seq, order, power);
  r.accelerated = acc.values;
  r.value = acc.values.back();
  if (acc.values.size() >= 2) {
    r.error_proxy = std::abs(acc.values.back() - acc.values[acc.values.size() - 2]);
  } else {
    r.error_proxy = std::abs(r.value - seq.back());
  }
  if (!acc.flagged.empty()) r.flags.push_back("acceleration-guard");
  return r;
}

namespace {

FitResult fit_line(const std::vector<int>& ns, const std::vector<double>& ys) {
  const std::size_t total = ns.size();
  const std::size_t lo = total / 2;
  const double m = static_cast<double>(total - lo);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = lo; i < total; ++i) {
    double x = std::log(static_cast<double>(ns[i]));
    sx += x;
    sy += ys[i];
    sxx += x * x;
    sxy += x * ys[i];
  }
  double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw DomainError("fit_exponent: degenerate window");
  double slope = (m * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / m;
  double ss = 0;
  for (std::size_t i = lo; i < total; ++i) {
    double e = ys[i] - (intercept + slope * std::log(static_cast<double>(ns[i])));
    ss += e * e;
  }
  FitResult f;
  f.exponent = slope;
  f.amplitude = std::exp(intercept);
  f.residual = std::sqrt(ss / m);
  f.window_lo = ns[lo];
  f.window_hi = ns[total - 1];
  return f;
}

}  // namespace

FitResult fit_exponent_log(const std::vector<int>& ns, const std::vector<double>& log_seq,
                           FitMode mode, std::optional<double> mu) {
  if (ns.size() != log_seq.size()) throw DomainError("fit_exponent: length mismatch");
  if (ns.size() < 6) throw DomainError("fit_exponent: need at least 6 points");
  if (mode == FitMode::Growth && !mu) throw DomainError("fit_exponent: growth mode needs mu");
  if (mu && !(*mu > 0)) throw DomainError("fit_exponent: mu must be positive");
  for (int n : ns)
    if (n <= 0) throw DomainError("fit_exponent: indices must be positive");
  std::vector<double> ys(log_seq);
  if (mode == FitMode::Growth) {
    for (std::size_t i = 0; i < ys.size(); ++i) ys[i] -= ns[i] * std::log(*mu);
  }
  FitResult f = fit_line(ns, ys);
  f.exponent = (mode == FitMode::Growth) ? f.exponent + 1.0 : f.exponent / 2.0;
  return f;
}

FitResult fit_exponent(const std::vector<int>& ns, const std::vector<double>& seq, FitMode mode,
                       std::optional<double> mu) {
  std::vector<double> logs;
  logs.reserve(seq.size());
  for (double v : seq) {
    if (!(v > 0)) throw DomainError("fit_exponent: non-positive value");
    logs.push_back(std::log(v));
  }
  return fit_exponent_log(ns, logs, mode, mu);
}

}  // namespace latcon
