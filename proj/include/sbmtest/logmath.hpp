#pragma once

#include <span>
#include <vector>

namespace sbmtest {

// Natural log of the gamma function, Lanczos approximation (g = 7, 9
// coefficients). Self-contained so results do not depend on the platform's
// lgamma. Throws std::invalid_argument for x <= 0.
double log_gamma(double x);

// log B(a, b) = lgamma(a) + lgamma(b) - lgamma(a + b). Throws for
// non-positive arguments.
double log_beta(double a, double b);

// log(exp(a) + exp(b)) without leaving log space. -inf acts as zero mass.
double log_add_exp(double a, double b);

// Max-shifted log(sum_i exp(v_i)). Entries may be -inf, but not all;
// an empty input or all -inf throws std::invalid_argument.
double log_sum_exp(std::span<const double> values);

}  // namespace sbmtest
