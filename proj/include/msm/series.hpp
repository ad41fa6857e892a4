#pragma once

// Series evaluators: generalized Bessel W_{p,b,c}, Fox-Wright psi, pFq,
// Gauss 2F1 on (-1, 1) and the Appell F3 double series.

#include <vector>

#include "msm/gamma.hpp"

namespace msm {

inline constexpr int kDefaultMaxTerms = 10000;

struct SeriesResult {
    Complex value;
    int terms_used = 0;
    double tail_estimate = 0.0; // |first neglected term|
    bool converged = false;
};

/// Parameters of W_{p,b,c}. kappa = p + (b+1)/2 is always recomputed.
class BesselParams {
public:
    BesselParams(Complex p, Complex b, Complex c) : p_(p), b_(b), c_(c) {}

    Complex p() const noexcept { return p_; }
    Complex b() const noexcept { return b_; }
    Complex c() const noexcept { return c_; }
    Complex kappa() const noexcept { return p_ + (b_ + 1.0) / 2.0; }

private:
    Complex p_;
    Complex b_;
    Complex c_;
};

struct WrightPair {
    Complex shift;
    double weight;
};

struct WrightSpec {
    std::vector<WrightPair> upper;
    std::vector<WrightPair> lower;
    Complex argument;

    /// sum of lower weights minus sum of upper weights
    double convergence_index() const;
};

struct HypergeometricSpec {
    std::vector<Complex> upper;
    std::vector<Complex> lower;
    Complex argument;
};

/// Sums term(k) for k = 0, 1, ... until two consecutive terms fall below
/// tol * |partial sum| (not before min_terms), capped at max_terms.
/// term must be callable with increasing k, starting at 0.
template <class TermFn>
SeriesResult sum_series(TermFn&& term, double tol, int max_terms, int min_terms = 0)
{
    SeriesResult out;
    Complex sum = 0.0;
    Complex next = term(0);
    int small_run = 0;
    for (int k = 0; k < max_terms; ++k) {
        const Complex t = next;
        sum += t;
        next = term(k + 1);
        if (k >= min_terms && std::abs(t) <= tol * std::abs(sum))
            ++small_run;
        else
            small_run = 0;
        if (small_run >= 2 && std::abs(next) <= tol * std::max(1.0, std::abs(sum))) {
            out.value = sum;
            out.terms_used = k + 1;
            out.tail_estimate = std::abs(next);
            out.converged = true;
            return out;
        }
    }
    out.value = sum;
    out.terms_used = max_terms;
    out.tail_estimate = std::abs(next);
    out.converged = false;
    return out;
}

/// W_{p,b,c}(z) = sum_k (-c)^k / (Gamma(kappa+k) k!) (z/2)^{2k+p}, principal branch.
SeriesResult bessel_w(const BesselParams& params, Complex z, double tol,
                      int max_terms = kDefaultMaxTerms);

/// Fox-Wright function pPsi_q. Requires convergence_index() > -1.
SeriesResult wright_psi(const WrightSpec& spec, double tol, int max_terms = kDefaultMaxTerms);

/// Generalized hypergeometric pFq by forward term recurrence.
SeriesResult hyp_pfq(const HypergeometricSpec& spec, double tol, int max_terms = kDefaultMaxTerms);

/// Gauss 2F1(a, b; c; z) for real z in (-1, 1): direct series on |z| <= 1/2,
/// Pfaff transformation on (-1, -1/2) and the 1-z connection formula on (1/2, 1).
/// Integer c-a-b on (1/2, 1) falls back to the direct series when it fits in
/// max_terms, and is a DomainError otherwise.
SeriesResult gauss_2f1(Complex a, Complex b, Complex c, double z, double tol,
                       int max_terms = kDefaultMaxTerms);

/// Appell F3(alpha, alpha', beta, beta'; gamma; x, y) summed over anti-diagonals.
SeriesResult appell_f3(Complex alpha, Complex alpha_p, Complex beta, Complex beta_p, Complex gamma,
                       Complex x, Complex y, double tol, int max_terms = kDefaultMaxTerms);

} // namespace msm
