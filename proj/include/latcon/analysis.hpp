#pragma once

// Sequence acceleration and power-law fitting.

#include <string>
#include <vector>

#include "latcon/core.hpp"

namespace latcon {

struct AccelResult {
  std::vector<double> values;
  std::vector<int> flagged;  // input positions whose transform was skipped
};

/// Aitken delta-squared transform. Output has length len - 2; a term whose
/// second difference is numerically zero is replaced by the latest input
/// term and its position recorded in `flagged`.
AccelResult aitken(const std::vector<double>& seq);

/// Polynomial extrapolation to x -> 0 in x = 1/n^power, using windows of
/// order + 1 consecutive terms. Output term i uses inputs i..i+order.
AccelResult richardson(const std::vector<int>& ns, const std::vector<double>& seq, int order,
                       double power = 1.0);

/// Convenience: richardson on the trailing terms, reported as an estimate
/// with error proxy = |last - previous accelerated term|.
EstimateReport richardson_estimate(const std::string& method, const std::vector<int>& ns,
                                   const std::vector<double>& seq, int order, double power = 1.0);

enum class FitMode { Growth, Displacement };

struct FitResult {
  double exponent = 0.0;   // gamma (Growth) or nu (Displacement)
  double amplitude = 0.0;  // exp(intercept)
  double residual = 0.0;   // RMS of the linear fit in log space
  int window_lo = 0;       // inclusive n range used
  int window_hi = 0;
};

/// Least squares on the upper half of the data: slope of ln(c(n)/mu^n)
/// against ln n is gamma - 1; slope of ln s(n) against ln n is 2 nu.
FitResult fit_exponent(const std::vector<int>& ns, const std::vector<double>& seq, FitMode mode,
                       std::optional<double> mu = std::nullopt);

/// Same fit taking logs directly, for values too large for double.
FitResult fit_exponent_log(const std::vector<int>& ns, const std::vector<double>& log_seq,
                           FitMode mode, std::optional<double> mu = std::nullopt);

}  // namespace latcon
