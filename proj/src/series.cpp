#include "msm/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "msm/errors.hpp"

namespace msm {

namespace {

bool is_zero(Complex z) noexcept { return z == Complex(0.0, 0.0); }

bool any_at_pole(const std::vector<Complex>& values)
{
    return std::any_of(values.begin(), values.end(), [](Complex v) { return at_pole(v); });
}

} // namespace

double WrightSpec::convergence_index() const
{
    const auto add = [](double acc, const WrightPair& pair) { return acc + pair.weight; };
    return std::accumulate(lower.begin(), lower.end(), 0.0, add) -
           std::accumulate(upper.begin(), upper.end(), 0.0, add);
}

SeriesResult bessel_w(const BesselParams& params, Complex z, double tol, int max_terms)
{
    const Complex kappa = params.kappa();
    if (at_pole(kappa))
        throw DomainError("bessel_w: kappa = p + (b+1)/2 must not be 0, -1, -2, ...");

    if (is_zero(z)) {
        const Complex p = params.p();
        if (is_zero(p))
            return {reciprocal_gamma(kappa), 1, 0.0, true};
        if (p.real() > 0.0)
            return {0.0, 1, 0.0, true};
        throw BranchError("bessel_w: (z/2)^p is singular at z = 0 when Re(p) <= 0, p != 0");
    }

    const Complex half = z / 2.0;
    const Complex step = -params.c() * half * half;
    Complex current = std::exp(params.p() * std::log(half)) * reciprocal_gamma(kappa);
    int next_k = 0;
    auto term = [&](int k) {
        while (next_k < k) {
            current *= step / ((kappa + static_cast<double>(next_k)) * static_cast<double>(next_k + 1));
            ++next_k;
        }
        return current;
    };
    return sum_series(term, tol, max_terms);
}

SeriesResult wright_psi(const WrightSpec& spec, double tol, int max_terms)
{
    const double delta = spec.convergence_index();
    if (delta <= -1.0)
        throw ConvergenceError("wright_psi: convergence index sum(B) - sum(A) = " +
                               std::to_string(delta) + " must exceed -1");

    const Complex z = spec.argument;
    const bool zero_argument = is_zero(z);
    const double log_abs_z = zero_argument ? 0.0 : std::log(std::abs(z));
    const Complex unit = zero_argument ? Complex(1.0) : z / std::abs(z);

    // Lower gammas with positive weight can sit on poles for small k; those
    // terms vanish and must not trigger the stopping rule.
    int min_terms = 0;
    for (const auto& pair : spec.lower) {
        if (pair.weight > 0.0 && pair.shift.real() <= 0.0)
            min_terms = std::max(min_terms, static_cast<int>(std::ceil(-pair.shift.real() / pair.weight)) + 1);
    }

    Complex unit_power = 1.0;
    int power_k = 0;
    auto term = [&](int k) -> Complex {
        if (zero_argument && k > 0)
            return 0.0;
        while (power_k < k) {
            unit_power *= unit;
            ++power_k;
        }
        const double kd = static_cast<double>(k);
        Complex log_term = kd * log_abs_z - std::lgamma(kd + 1.0);
        for (const auto& pair : spec.upper) {
            const Complex arg = pair.shift + pair.weight * kd;
            if (at_pole(arg))
                throw PoleError("wright_psi: upper gamma argument hits a pole at k = " + std::to_string(k));
            log_term += log_gamma(arg);
        }
        for (const auto& pair : spec.lower) {
            const Complex arg = pair.shift + pair.weight * kd;
            if (at_pole(arg))
                return 0.0;
            log_term -= log_gamma(arg);
        }
        return std::exp(log_term) * unit_power;
    };
    return sum_series(term, tol, max_terms, min_terms);
}

SeriesResult hyp_pfq(const HypergeometricSpec& spec, double tol, int max_terms)
{
    if (any_at_pole(spec.lower))
        throw DomainError("hyp_pfq: a lower parameter is zero or a negative integer");

    const Complex z = spec.argument;
    const std::size_t p = spec.upper.size();
    const std::size_t q = spec.lower.size();
    const bool terminating = any_at_pole(spec.upper);
    if (!terminating && !is_zero(z)) {
        if (p == q + 1 && std::abs(z) >= 1.0)
            throw ConvergenceError("hyp_pfq: p = q+1 series requires |z| < 1");
        if (p > q + 1)
            throw ConvergenceError("hyp_pfq: p > q+1 series diverges for z != 0");
    }

    Complex current = 1.0;
    int next_k = 0;
    auto term = [&](int k) {
        while (next_k < k) {
            const double kd = static_cast<double>(next_k);
            Complex ratio = z / (kd + 1.0);
            for (const Complex a : spec.upper)
                ratio *= a + kd;
            for (const Complex c : spec.lower)
                ratio /= c + kd;
            current *= ratio;
            ++next_k;
        }
        return current;
    };
    return sum_series(term, tol, max_terms);
}

SeriesResult gauss_2f1(Complex a, Complex b, Complex c, double z, double tol, int max_terms)
{
    if (at_pole(c))
        throw DomainError("gauss_2f1: c must not be 0, -1, -2, ...");
    if (!(std::fabs(z) < 1.0))
        throw ConvergenceError("gauss_2f1: argument must lie in (-1, 1)");

    const bool terminating = at_pole(a) || at_pole(b);
    if (terminating || std::fabs(z) <= 0.5)
        return hyp_pfq({{a, b}, {c}, z}, tol, max_terms);

    if (z < 0.0) {
        // Pfaff: (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)), new argument in (1/3, 1/2).
        SeriesResult r = hyp_pfq({{a, c - b}, {c}, z / (z - 1.0)}, tol, max_terms);
        const Complex scale = std::exp(-a * std::log(1.0 - z));
        r.value *= scale;
        r.tail_estimate *= std::abs(scale);
        return r;
    }

    const Complex s = c - a - b;
    if (near_integer(s)) {
        // No logarithmic connection formula; the direct series still converges
        // like z^k, so use it when the cap allows.
        const double needed = std::log(tol) / std::log(z) + 64.0;
        if (needed > max_terms)
            throw DomainError("gauss_2f1: c - a - b is an integer and z is too close to 1 for the direct series");
        return hyp_pfq({{a, b}, {c}, z}, tol, max_terms);
    }

    const double w = 1.0 - z;
    const Complex g1 = gamma_ratio({{c, s, 1.0}, {c - a, c - b, 1.0}});
    const Complex g2 = gamma_ratio({{c, -s, 1.0}, {a, b, 1.0}});
    const SeriesResult f1 = hyp_pfq({{a, b}, {1.0 - s}, w}, tol, max_terms);
    const SeriesResult f2 = hyp_pfq({{c - a, c - b}, {1.0 + s}, w}, tol, max_terms);
    const Complex power = std::exp(s * std::log(w));

    SeriesResult out;
    out.value = g1 * f1.value + power * g2 * f2.value;
    out.terms_used = f1.terms_used + f2.terms_used;
    out.tail_estimate = std::abs(g1) * f1.tail_estimate + std::abs(power * g2) * f2.tail_estimate;
    out.converged = f1.converged && f2.converged;
    return out;
}

SeriesResult appell_f3(Complex alpha, Complex alpha_p, Complex beta, Complex beta_p, Complex gamma,
                       Complex x, Complex y, double tol, int max_terms)
{
    if (at_pole(gamma))
        throw DomainError("appell_f3: gamma must not be 0, -1, -2, ...");
    if (!(std::abs(x) < 1.0) || !(std::abs(y) < 1.0))
        throw ConvergenceError("appell_f3: requires |x| < 1 and |y| < 1");

    // x_terms[m] = (alpha)_m (beta)_m x^m / m!, likewise y_terms for the second variable.
    std::vector<Complex> x_terms{1.0};
    std::vector<Complex> y_terms{1.0};
    Complex inv_gamma_poch = 1.0; // 1 / (gamma)_s

    auto extend = [&](int s) {
        while (static_cast<int>(x_terms.size()) <= s) {
            const double m = static_cast<double>(x_terms.size() - 1);
            x_terms.push_back(x_terms.back() * (alpha + m) * (beta + m) * x / (m + 1.0));
            y_terms.push_back(y_terms.back() * (alpha_p + m) * (beta_p + m) * y / (m + 1.0));
        }
    };
    // Returns the anti-diagonal sum and its absolute mass.
    auto diagonal = [&](int s, Complex inv_poch) {
        extend(s);
        Complex sum = 0.0;
        double mass = 0.0;
        for (int m = 0; m <= s; ++m) {
            const Complex t = x_terms[m] * y_terms[s - m] * inv_poch;
            sum += t;
            mass += std::abs(t);
        }
        return std::pair{sum, mass};
    };

    SeriesResult out;
    Complex total = 0.0;
    int small_run = 0;
    for (int s = 0; s < max_terms; ++s) {
        const auto [sum, mass] = diagonal(s, inv_gamma_poch);
        total += sum;
        inv_gamma_poch /= gamma + static_cast<double>(s);
        small_run = mass <= tol * std::abs(total) ? small_run + 1 : 0;
        if (small_run >= 2) {
            out.value = total;
            out.terms_used = s + 1;
            out.tail_estimate = diagonal(s + 1, inv_gamma_poch).second;
            out.converged = out.tail_estimate <= tol * std::max(1.0, std::abs(total));
            return out;
        }
    }
    out.value = total;
    out.terms_used = max_terms;
    out.tail_estimate = diagonal(max_terms, inv_gamma_poch).second;
    out.converged = false;
    return out;
}

} // namespace msm
