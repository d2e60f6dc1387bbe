#pragma once

#include <complex>
#include <functional>

namespace oscdyn::oracle {

// Taylor coefficient of an entire function at 0 (the order-th derivative
// divided by order!), from an M-point finite-difference stencil on the circle
// |z| = radius (trapezoidal Cauchy rule).  Exact for polynomials of degree
// < order + points; the radius trades off roundoff against aliasing and should
// roughly minimize max|f| / radius^order.
std::complex<double> taylor_coefficient(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    int order, double radius, int points);

// Mixed coefficient c_{mn} of f(a, b) entire in two variables:
// f = sum c_{mn} a^m b^n.  Stencils of `points` nodes on circles of the given
// radii; cost is points^2 evaluations.
std::complex<double> taylor_coefficient_2d(
    const std::function<std::complex<double>(std::complex<double>,
                                             std::complex<double>)>& f,
    int m, int n, double radius_a, double radius_b, int points);

}  // namespace oscdyn::oracle
