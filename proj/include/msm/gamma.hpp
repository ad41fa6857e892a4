#pragma once

// Complex gamma machinery shared by every other module.

#include <array>
#include <complex>
#include <optional>

namespace msm {

using Complex = std::complex<double>;

inline constexpr double kPoleTolerance = 1e-12;

/// True when z is within kPoleTolerance of 0, -1, -2, ...
bool at_pole(Complex z) noexcept;

/// True when z is within kPoleTolerance of an integer (any sign).
bool near_integer(Complex z) noexcept;

/// Principal log-gamma. For Re z >= 1/2 this is the analytic continuation of
/// ln Gamma from the positive axis; for Re z < 1/2 it comes from reflection
/// and may differ from that continuation by a multiple of 2*pi*i.
/// Throws PoleError at the poles.
Complex log_gamma(Complex z);

/// Gamma(z). Throws PoleError at the poles and OverflowError past double range.
/// Call as msm::gamma: glibc declares ::gamma(double) as log-gamma, and it wins
/// overload resolution for real arguments under a using-directive.
Complex gamma(Complex z);

/// 1/Gamma(z); exactly 0 at the poles.
Complex reciprocal_gamma(Complex z);

/// Rising factorial (z)_k.
Complex pochhammer(Complex z, unsigned k);

/// |(z)_{2k} - 4^k (z/2)_k ((z+1)/2)_k| / max(1, |(z)_{2k}|)
double pochhammer_duplication_check(Complex z, unsigned k);

/// Relative discrepancy of Gamma(2z) against 2^{2z-1} pi^{-1/2} Gamma(z) Gamma(z+1/2),
/// evaluated on the log scale.
double legendre_duplication_check(Complex z);

/// Gamma(a)Gamma(b)Gamma(c) / (Gamma(d)Gamma(e)Gamma(f)).
struct GammaRatioSpec {
    std::array<Complex, 3> numerator;
    std::array<Complex, 3> denominator;
};

/// Log of the ratio, or nullopt when a denominator entry is at a pole (the
/// ratio is then exactly zero). Throws PoleError on a numerator pole.
std::optional<Complex> log_gamma_ratio(const GammaRatioSpec& spec);

Complex gamma_ratio(const GammaRatioSpec& spec);

/// exp(w), throwing OverflowError (carrying Re w) if |exp(w)| leaves double range.
Complex exp_checked(Complex w);

} // namespace msm
