#include "msm/gamma.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "msm/errors.hpp"

namespace msm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogMax = 709.782712893384; // ln(DBL_MAX)

// Godfrey's Lanczos set, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

std::string describe(Complex z)
{
    std::ostringstream os;
    os.precision(17);
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

// ln sin(pi z), exact argument reduction on the real part.
Complex log_sin_pi(Complex z)
{
    const double n = std::round(z.real());
    const double r = z.real() - n; // exact, |r| <= 1/2
    const Complex w(kPi * r, kPi * z.imag());
    const bool odd = std::fmod(std::fabs(n), 2.0) == 1.0;
    const Complex sign_log(0.0, odd ? kPi : 0.0);

    if (std::fabs(w.imag()) < 20.0)
        return std::log(std::sin(w)) + sign_log;

    const Complex i(0.0, 1.0);
    if (w.imag() > 0.0)
        return -i * w + std::log(1.0 - std::exp(2.0 * i * w)) + std::log(Complex(0.0, 0.5)) + sign_log;
    return i * w + std::log(1.0 - std::exp(-2.0 * i * w)) + std::log(Complex(0.0, -0.5)) + sign_log;
}

Complex log_gamma_right_half(Complex z)
{
    z -= 1.0;
    Complex sum = kLanczosCoeffs[0];
    for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k)
        sum += kLanczosCoeffs[k] / (z + static_cast<double>(k));
    const Complex t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

} // namespace

bool at_pole(Complex z) noexcept
{
    const double n = std::round(z.real());
    return n <= 0.0 && std::fabs(z.real() - n) <= kPoleTolerance && std::fabs(z.imag()) <= kPoleTolerance;
}

bool near_integer(Complex z) noexcept
{
    const double n = std::round(z.real());
    return std::fabs(z.real() - n) <= kPoleTolerance && std::fabs(z.imag()) <= kPoleTolerance;
}

Complex log_gamma(Complex z)
{
    if (at_pole(z))
        throw PoleError("log_gamma: argument " + describe(z) + " is a pole of Gamma");
    if (z.real() < 0.5)
        return std::log(kPi) - log_sin_pi(z) - log_gamma_right_half(1.0 - z);
    return log_gamma_right_half(z);
}

Complex exp_checked(Complex w)
{
    if (w.real() > kLogMax) {
        std::ostringstream os;
        os << "result overflows double range (ln|value| = " << w.real() << ")";
        throw OverflowError(os.str(), w.real());
    }
    return std::exp(w);
}

Complex gamma(Complex z)
{
    if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 171.0)
        return std::tgamma(z.real());
    return exp_checked(log_gamma(z));
}

Complex reciprocal_gamma(Complex z)
{
    if (at_pole(z))
        return 0.0;
    return std::exp(-log_gamma(z));
}

Complex pochhammer(Complex z, unsigned k)
{
    constexpr unsigned kDirectLimit = 256;
    if (k == 0)
        return 1.0;
    // A zero factor z + j = 0 for some j < k.
    if (at_pole(z) && -std::round(z.real()) < static_cast<double>(k))
        return 0.0;
    if (k <= kDirectLimit || at_pole(z)) {
        Complex prod = 1.0;
        for (unsigned j = 0; j < k; ++j)
            prod *= z + static_cast<double>(j);
        return prod;
    }
    return exp_checked(log_gamma(z + static_cast<double>(k)) - log_gamma(z));
}

double pochhammer_duplication_check(Complex z, unsigned k)
{
    const Complex lhs = pochhammer(z, 2 * k);
    const Complex rhs = std::pow(4.0, static_cast<double>(k)) * pochhammer(z / 2.0, k) *
                        pochhammer((z + 1.0) / 2.0, k);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

double legendre_duplication_check(Complex z)
{
    const Complex lhs = log_gamma(2.0 * z);
    const Complex rhs = (2.0 * z - 1.0) * std::log(2.0) - 0.5 * std::log(kPi) + log_gamma(z) +
                        log_gamma(z + 0.5);
    Complex d = lhs - rhs;
    d.imag(std::remainder(d.imag(), 2.0 * kPi));
    return std::abs(std::exp(d) - 1.0);
}

std::optional<Complex> log_gamma_ratio(const GammaRatioSpec& spec)
{
    Complex acc = 0.0;
    for (const Complex a : spec.numerator)
        acc += log_gamma(a); // throws on a numerator pole
    for (const Complex d : spec.denominator) {
        if (at_pole(d))
            return std::nullopt;
        acc -= log_gamma(d);
    }
    acc.imag(std::remainder(acc.imag(), 2.0 * kPi));
    return acc;
}

Complex gamma_ratio(const GammaRatioSpec& spec)
{
    const auto log_value = log_gamma_ratio(spec);
    if (!log_value)
        return 0.0;
    return exp_checked(*log_value);
}

} // namespace msm
