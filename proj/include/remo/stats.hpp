#pragma once

#include <vector>

#include "remo/types.hpp"

namespace remo {

struct SampleSummary {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, n-1 denominator
  int n = 0;
};

SampleSummary summarize(const std::vector<double>& samples);

struct TTestResult {
  int h = 0;      // 1 iff p < alpha
  double p = 1.0; // two-sided
};

/// Regularized incomplete beta I_x(a, b), evaluated by the Lentz continued
/// fraction. Accurate to better than 1e-10 over the parameter ranges used
/// by the t-distribution CDF (checked against external oracle values in
/// the test suite).
double incomplete_beta(double a, double b, double x);

/// CDF of Student's t distribution with (possibly fractional) df.
double student_t_cdf(double t, double df);

/// Two-sample Welch's t-test (unequal variances), two-sided p-value via the
/// t-distribution CDF with Welch-Satterthwaite degrees of freedom.
/// Degenerate zero-variance samples with equal means give p = 1, h = 0.
TTestResult t_test(const std::vector<double>& a, const std::vector<double>& b,
                   double alpha = 0.05);

}  // namespace remo
