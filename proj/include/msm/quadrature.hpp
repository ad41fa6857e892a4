#pragma once

// Fixed quadrature rules used by the operator evaluators.

#include <vector>

namespace msm {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Jacobi rule on [-1, 1] for the weight (1-s)^a (1+s)^b,
/// a, b > -1, built by Golub-Welsch from the Jacobi three-term recurrence.
QuadratureRule gauss_jacobi(int n, double a, double b);

/// Same rule mapped to [lo, hi] with weight (hi-u)^a (u-lo)^b.
QuadratureRule gauss_jacobi_interval(int n, double a, double b, double lo, double hi);

/// (n+1)-point Clenshaw-Curtis rule on [-1, 1].
QuadratureRule clenshaw_curtis(int n);

} // namespace msm
