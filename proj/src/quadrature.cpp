#include "msm/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "msm/errors.hpp"

namespace msm {

QuadratureRule gauss_jacobi(int n, double a, double b)
{
    if (n < 1)
        throw DomainError("gauss_jacobi: need at least one node");
    if (!(a > -1.0) || !(b > -1.0))
        throw DomainError("gauss_jacobi: weight exponents must exceed -1");

    const double ab = a + b;
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    for (int k = 0; k < n; ++k) {
        const double two_k_ab = 2.0 * k + ab;
        if (k == 0)
            diag(k) = (b - a) / (ab + 2.0);
        else
            diag(k) = (b * b - a * a) / (two_k_ab * (two_k_ab + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double kd = k;
        const double two_k_ab = 2.0 * kd + ab;
        double beta_k;
        if (k == 1) {
            beta_k = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            beta_k = 4.0 * kd * (kd + a) * (kd + b) * (kd + ab) /
                     (two_k_ab * two_k_ab * (two_k_ab + 1.0) * (two_k_ab - 1.0));
        }
        sub(k - 1) = std::sqrt(beta_k);
    }

    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                                std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = diag(0);
        rule.weights[0] = mu0;
        return rule;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("gauss_jacobi: tridiagonal eigen-solve failed");
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

QuadratureRule gauss_jacobi_interval(int n, double a, double b, double lo, double hi)
{
    QuadratureRule rule = gauss_jacobi(n, a, b);
    const double half = 0.5 * (hi - lo);
    const double scale = std::pow(half, a + b + 1.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        rule.nodes[i] = lo + half * (rule.nodes[i] + 1.0);
        rule.weights[i] *= scale;
    }
    return rule;
}

QuadratureRule clenshaw_curtis(int n)
{
    if (n < 1)
        throw DomainError("clenshaw_curtis: need n >= 1");
    QuadratureRule rule;
    rule.nodes.resize(n + 1);
    rule.weights.resize(n + 1);
    const double pi = std::numbers::pi;
    for (int k = 0; k <= n; ++k) {
        const double theta = pi * k / n;
        rule.nodes[k] = -std::cos(theta);
        double s = 0.0;
        for (int j = 1; j <= n / 2; ++j) {
            const double bj = (2 * j == n) ? 1.0 : 2.0;
            s += bj / (4.0 * j * j - 1.0) * std::cos(2.0 * j * theta);
        }
        const double ck = (k == 0 || k == n) ? 1.0 : 2.0;
        rule.weights[k] = ck / n * (1.0 - s);
    }
    return rule;
}

} // namespace msm
