#pragma once

namespace oscdyn {

// Laguerre polynomial L_n(x) by the stable three-term recurrence.
double laguerre(int order, double x);

double log_factorial(int n);        // ln n!
double log_binomial(int n, int k);  // ln C(n, k), 0 <= k <= n

}  // namespace oscdyn
