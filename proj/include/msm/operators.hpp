#pragma once

// Marichev-Saigo-Maeda fractional integrals: quadrature evaluation of the
// left and right operators, the Saigo reduction, and the closed-form images
// of power functions.

#include <functional>
#include <optional>

#include "msm/gamma.hpp"

namespace msm {

struct MsmParams {
    Complex alpha = 0.0;
    Complex alpha_p = 0.0;
    Complex beta = 0.0;
    Complex beta_p = 0.0;
    Complex gamma = 1.0;
};

enum class QuadratureMode {
    // One Gauss-Jacobi rule on (0,1) absorbing both endpoint weights; kernel
    // evaluated pointwise.
    gauss_jacobi_single_panel,
    // Splits (0,1) at 1/2 and expands a single-series kernel into its two
    // analytic pieces near w = 0, each with its own Gauss-Jacobi weight.
    gauss_jacobi_split,
    // Geometrically graded panels; Clenshaw-Curtis inside, Gauss-Jacobi on
    // the two endpoint panels.
    composite_clenshaw,
};

struct QuadratureConfig {
    int nodes = 200;
    int panels = 1;
    double tol = 1e-9;
    QuadratureMode mode = QuadratureMode::gauss_jacobi_split;

    void validate() const;
};

/// f(t) together with sigma such that |f(t)| ~ t^{sigma-1} near the singular
/// end of the operator (t -> 0 for the left operator, t -> infinity for the
/// right one). The quadrature absorbs t^{sigma-1} into its weight.
struct Integrand {
    std::function<Complex(double)> f;
    double sigma = 1.0;
};

/// t^{rho-1}
Integrand power_integrand(Complex rho);

bool validate_left(const MsmParams& params, Complex rho);
bool validate_right(const MsmParams& params, Complex rho);

/// Left operator I_{0+}: x^{-alpha}/Gamma(gamma) int_0^x (x-t)^{gamma-1} t^{-alpha'}
/// F3(alpha, alpha', beta, beta'; gamma; 1-t/x, 1-x/t) f(t) dt.
/// alpha'=0 or beta'=0 (and alpha=0 or beta=0) collapse the kernel to a Gauss
/// function with argument in (0,1); otherwise the double series is used and
/// every node with f != 0 must keep 1-x/t inside the unit disk.
Complex msm_left(const MsmParams& params, const Integrand& f, double x,
                 const QuadratureConfig& cfg = {});

/// Right operator I_{-}: x^{-alpha'}/Gamma(gamma) int_x^inf (t-x)^{gamma-1} t^{-alpha}
/// F3(alpha, alpha', beta, beta'; gamma; 1-x/t, 1-t/x) f(t) dt.
Complex msm_right(const MsmParams& params, const Integrand& f, double x,
                  const QuadratureConfig& cfg = {});

/// Saigo operator I^{alpha,beta,eta}_{0+}: x^{-alpha-beta}/Gamma(alpha)
/// int_0^x (x-t)^{alpha-1} 2F1(alpha+beta, -eta; alpha; 1-t/x) f(t) dt.
Complex msm_left_saigo(Complex alpha, Complex beta_s, Complex eta, const Integrand& f, double x,
                       const QuadratureConfig& cfg = {});

/// Saigo parameters (gamma, alpha-gamma, -beta) equivalent to the left
/// operator with alpha' = 0.
struct SaigoParams {
    Complex alpha;
    Complex beta;
    Complex eta;
};
SaigoParams saigo_from_msm(const MsmParams& params);

/// Lemma images of t^{rho-1}; DomainError when the admissibility check fails.
Complex power_image_left(const MsmParams& params, Complex rho, double x);
Complex power_image_right(const MsmParams& params, Complex rho, double x);

/// Logs of the same images without the admissibility check; nullopt means the
/// image is exactly zero.
std::optional<Complex> log_power_image_left(const MsmParams& params, Complex rho, double x);
std::optional<Complex> log_power_image_right(const MsmParams& params, Complex rho, double x);

} // namespace msm
