#include "sbmtest/logmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sbmtest {

namespace {

// Lanczos g = 7, n = 9 coefficient set (Godfrey / Numerical Recipes lineage).
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // log(2*pi)/2

double log_gamma_lanczos(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double acc = kLanczosCoef[0];
  for (int i = 1; i < 9; ++i) {
    acc += kLanczosCoef[i] / (z + i);
  }
  const double t = z + kLanczosG + 0.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("log_gamma: argument must be positive");
  }
  if (x < 0.5) {
    // one step of the recurrence keeps the Lanczos argument in range
    return log_gamma_lanczos(x + 1.0) - std::log(x);
  }
  return log_gamma_lanczos(x);
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("log_beta: arguments must be positive");
  }
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double log_add_exp(double a, double b) {
  const double neg_inf = -std::numeric_limits<double>::infinity();
  if (a == neg_inf) return b;
  if (b == neg_inf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

double log_sum_exp(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("log_sum_exp: empty input");
  }
  const double shift = *std::max_element(values.begin(), values.end());
  if (shift == -std::numeric_limits<double>::infinity()) {
    throw std::invalid_argument("log_sum_exp: all entries are -inf");
  }
  double acc = 0.0;
  for (double v : values) {
    acc += std::exp(v - shift);
  }
  return shift + std::log(acc);
}

}  // namespace sbmtest
