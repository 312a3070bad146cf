#include "remo/stats.hpp"

#include <cmath>
#include <limits>

namespace remo {
namespace {

// Continued-fraction kernel for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

SampleSummary summarize(const std::vector<double>& samples) {
  const int n = static_cast<int>(samples.size());
  if (n < 2) throw ContractError("summarize: needs at least two samples");
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : samples) ss += (v - mean) * (v - mean);
  return SampleSummary{mean, std::sqrt(ss / (n - 1)), n};
}

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw ContractError("incomplete_beta: requires a, b > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
  if (!(df > 0.0)) throw ContractError("student_t_cdf: requires df > 0");
  if (t == 0.0) return 0.5;
  // Two-sided tail mass of |t| via the incomplete beta.
  const double x = df / (df + t * t);
  const double tail2 = incomplete_beta(0.5 * df, 0.5, x);
  return t > 0.0 ? 1.0 - 0.5 * tail2 : 0.5 * tail2;
}

TTestResult t_test(const std::vector<double>& a, const std::vector<double>& b,
                   double alpha) {
  if (a.size() < 2 || b.size() < 2)
    throw ContractError("t_test: both samples need n >= 2");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ContractError("t_test: alpha must lie in (0, 1)");

  const SampleSummary sa = summarize(a);
  const SampleSummary sb = summarize(b);
  const double va = sa.std * sa.std / sa.n;
  const double vb = sb.std * sb.std / sb.n;
  const double se2 = va + vb;

  TTestResult result;
  if (se2 == 0.0) {
    result.p = (sa.mean == sb.mean) ? 1.0 : 0.0;
    result.h = result.p < alpha ? 1 : 0;
    return result;
  }
  const double t = (sa.mean - sb.mean) / std::sqrt(se2);
  const double df =
      se2 * se2 /
      (va * va / (sa.n - 1) + vb * vb / (sb.n - 1));
  result.p = incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
  result.h = result.p < alpha ? 1 : 0;
  return result;
}

}  // namespace remo
