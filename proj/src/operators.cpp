#include "msm/operators.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "msm/errors.hpp"
#include "msm/quadrature.hpp"
#include "msm/series.hpp"

namespace msm {

namespace {

constexpr double kKernelTol = 1e-15;
constexpr double kGradingRatio = 0.15;

bool is_zero(Complex z) noexcept { return std::abs(z) <= kPoleTolerance; }

// w^{extra} 2F1(a, b; c; 1-w)
struct GaussKernel {
    Complex a, b, c;
    Complex extra;

    bool terminating() const { return at_pole(a) || at_pole(b); }
};

// F3(params; 1-w, 1-1/w)
struct AppellKernel {
    MsmParams params;
};

using Kernel = std::variant<GaussKernel, AppellKernel>;

// Both operators reduce, after t = x w (left) or t = x / w (right), to
// F3(alpha, alpha', beta, beta'; gamma; 1-w, 1-1/w).
Kernel select_kernel(const MsmParams& p)
{
    if (is_zero(p.alpha_p) || is_zero(p.beta_p))
        return GaussKernel{p.alpha, p.beta, p.gamma, 0.0};
    if (is_zero(p.alpha) || is_zero(p.beta)) {
        // 2F1(a', b'; g; 1-1/w) = w^{a'} 2F1(a', g-b'; g; 1-w)   (Pfaff)
        return GaussKernel{p.alpha_p, p.gamma - p.beta_p, p.gamma, p.alpha_p};
    }
    return AppellKernel{p};
}

Complex kernel_direct(const Kernel& kernel, double w)
{
    if (const auto* g = std::get_if<GaussKernel>(&kernel))
        return gauss_2f1(g->a, g->b, g->c, 1.0 - w, kKernelTol).value;
    const auto& p = std::get<AppellKernel>(kernel).params;
    const double y = 1.0 - 1.0 / w;
    if (!(std::fabs(y) < 1.0))
        throw KernelDivergence("Appell F3 kernel needs 1 - x/t in the unit disk at node w = " +
                               std::to_string(w) + "; use an alpha'=0 or beta=0 reduction");
    return appell_f3(p.alpha, p.alpha_p, p.beta, p.beta_p, p.gamma, 1.0 - w, y, kKernelTol).value;
}

// Integral over w in (0,1) of (1-w)^{gamma-1} w^{exponent} K(w) h(w), where
// K is the kernel without its w^{extra} factor (already folded into exponent).
class KernelIntegral {
public:
    KernelIntegral(Complex gamma, Complex exponent, Kernel kernel, std::function<Complex(double)> h)
        : gamma_(gamma), exponent_(exponent), kernel_(std::move(kernel)), h_(std::move(h))
    {
        if (const auto* g = std::get_if<GaussKernel>(&kernel_))
            exponent_ += g->extra;
    }

    Complex evaluate(const QuadratureConfig& cfg) const
    {
        if (!(gamma_.real() > 0.0))
            throw DomainError("Re(gamma) > 0 required");
        if (!(exponent_.real() > -1.0))
            throw DomainError("integrand is not integrable at the singular endpoint "
                              "(growth hint violates the admissibility condition)");
        switch (cfg.mode) {
        case QuadratureMode::gauss_jacobi_single_panel:
            return single_panel(cfg.nodes);
        case QuadratureMode::gauss_jacobi_split:
            if (const auto* g = std::get_if<GaussKernel>(&kernel_); g && !g->terminating())
                return split(*g, cfg.nodes);
            return single_panel(cfg.nodes);
        case QuadratureMode::composite_clenshaw:
            return composite(cfg.nodes, cfg.panels);
        }
        return 0.0;
    }

private:
    // Integrand divided by (1-w)^{absorbed_right} w^{absorbed_left}.
    Complex direct(double w, double absorbed_right, double absorbed_left) const
    {
        const Complex h = h_(w);
        if (h == Complex(0.0))
            return 0.0;
        const Complex log_weight = (gamma_ - 1.0 - absorbed_right) * std::log1p(-w) +
                                   (exponent_ - absorbed_left) * std::log(w);
        return std::exp(log_weight) * kernel_direct(kernel_, w) * h;
    }

    Complex single_panel(int n) const
    {
        const double a = gamma_.real() - 1.0;
        const double b = exponent_.real();
        const QuadratureRule rule = gauss_jacobi_interval(n, a, b, 0.0, 1.0);
        Complex sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * direct(rule.nodes[i], a, b);
        return sum;
    }

    // On (1/2, 1) the kernel argument 1-w is at most 1/2 and the direct series
    // is used. On (0, 1/2) the kernel is rewritten with the 1-z connection
    // formula as G1 F(a,b;1-s;w) + G2 w^s F(c-a,c-b;1+s;w), s = c-a-b.
    Complex split(const GaussKernel& g, int n) const
    {
        const Complex s = g.c - g.a - g.b;
        if (near_integer(s))
            throw DomainError("Gauss kernel with integer c - a - b is not supported");

        const double a = gamma_.real() - 1.0;
        Complex sum = 0.0;

        const QuadratureRule upper = gauss_jacobi_interval(n, a, 0.0, 0.5, 1.0);
        for (std::size_t i = 0; i < upper.nodes.size(); ++i)
            sum += upper.weights[i] * direct(upper.nodes[i], a, 0.0);

        const Complex g1 = gamma_ratio({{g.c, s, 1.0}, {g.c - g.a, g.c - g.b, 1.0}});
        const Complex g2 = gamma_ratio({{g.c, -s, 1.0}, {g.a, g.b, 1.0}});
        const auto piece = [&](Complex factor, Complex power, Complex pa, Complex pb, Complex pc) {
            if (factor == Complex(0.0))
                return Complex(0.0);
            const double b = power.real();
            if (!(b > -1.0))
                throw DomainError("integrand is not integrable at the singular endpoint "
                                  "(kernel exponent c - a - b too negative)");
            const QuadratureRule rule = gauss_jacobi_interval(n, 0.0, b, 0.0, 0.5);
            Complex acc = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double w = rule.nodes[i];
                const Complex h = h_(w);
                if (h == Complex(0.0))
                    continue;
                const Complex log_weight = (gamma_ - 1.0) * std::log1p(-w) + (power - b) * std::log(w);
                const Complex f = hyp_pfq({{pa, pb}, {pc}, w}, kKernelTol).value;
                acc += rule.weights[i] * std::exp(log_weight) * f * h;
            }
            return factor * acc;
        };
        sum += piece(g1, exponent_, g.a, g.b, 1.0 - s);
        sum += piece(g2, exponent_ + s, g.c - g.a, g.c - g.b, 1.0 + s);
        return sum;
    }

    Complex composite(int n, int panels) const
    {
        const double a = gamma_.real() - 1.0;
        const double b = exponent_.real();
        // Breakpoints 1/2 q^j toward 0 and 1 - 1/2 q^j toward 1.
        std::vector<double> left_cuts{0.5};
        for (int j = 1; j < panels; ++j)
            left_cuts.push_back(0.5 * std::pow(kGradingRatio, j));

        Complex sum = 0.0;
        const QuadratureRule lo_rule = gauss_jacobi_interval(n, 0.0, b, 0.0, left_cuts.back());
        for (std::size_t i = 0; i < lo_rule.nodes.size(); ++i)
            sum += lo_rule.weights[i] * direct(lo_rule.nodes[i], 0.0, b);
        const QuadratureRule hi_rule = gauss_jacobi_interval(n, a, 0.0, 1.0 - left_cuts.back(), 1.0);
        for (std::size_t i = 0; i < hi_rule.nodes.size(); ++i)
            sum += hi_rule.weights[i] * direct(hi_rule.nodes[i], a, 0.0);

        const QuadratureRule cc = clenshaw_curtis(n);
        const auto interior = [&](double lo, double hi) {
            const double half = 0.5 * (hi - lo);
            Complex acc = 0.0;
            for (std::size_t i = 0; i < cc.nodes.size(); ++i)
                acc += cc.weights[i] * direct(lo + half * (cc.nodes[i] + 1.0), 0.0, 0.0);
            return half * acc;
        };
        for (std::size_t j = 0; j + 1 < left_cuts.size(); ++j) {
            sum += interior(left_cuts[j + 1], left_cuts[j]);
            sum += interior(1.0 - left_cuts[j], 1.0 - left_cuts[j + 1]);
        }
        return sum;
    }

    Complex gamma_;
    Complex exponent_;
    Kernel kernel_;
    std::function<Complex(double)> h_;
};

Complex real_power(double x, Complex e) { return std::exp(e * std::log(x)); }

void check_x(double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("x must be a positive finite real");
}

void check_gamma(Complex gamma)
{
    if (!(gamma.real() > 0.0))
        throw DomainError("Re(gamma) > 0 required");
}

} // namespace

void QuadratureConfig::validate() const
{
    if (nodes < 4)
        throw DomainError("QuadratureConfig: nodes >= 4 required");
    if (panels < 1)
        throw DomainError("QuadratureConfig: panels >= 1 required");
    if (!(tol > 0.0))
        throw DomainError("QuadratureConfig: tol > 0 required");
}

Integrand power_integrand(Complex rho)
{
    return {[rho](double t) { return std::exp((rho - 1.0) * std::log(t)); }, rho.real()};
}

bool validate_left(const MsmParams& p, Complex rho)
{
    if (!(p.gamma.real() > 0.0))
        return false;
    const double bound = std::max({0.0, (p.alpha + p.alpha_p + p.beta - p.gamma).real(),
                                   (p.alpha_p - p.beta_p).real()});
    return rho.real() > bound;
}

bool validate_right(const MsmParams& p, Complex rho)
{
    if (!(p.gamma.real() > 0.0))
        return false;
    const double bound = 1.0 + std::min({(-p.beta).real(), (p.alpha + p.alpha_p - p.gamma).real(),
                                         (p.alpha + p.beta_p - p.gamma).real()});
    return rho.real() < bound;
}

Complex msm_left(const MsmParams& params, const Integrand& f, double x, const QuadratureConfig& cfg)
{
    cfg.validate();
    check_x(x);
    check_gamma(params.gamma);
    const double sigma = f.sigma;
    auto h = [&f, x, sigma](double w) {
        const double t = x * w;
        return f.f(t) * std::pow(t, 1.0 - sigma);
    };
    const KernelIntegral integral(params.gamma, sigma - 1.0 - params.alpha_p, select_kernel(params), h);
    const Complex prefactor = real_power(x, params.gamma - params.alpha - params.alpha_p + sigma - 1.0) *
                              reciprocal_gamma(params.gamma);
    return prefactor * integral.evaluate(cfg);
}

Complex msm_right(const MsmParams& params, const Integrand& f, double x, const QuadratureConfig& cfg)
{
    cfg.validate();
    check_x(x);
    check_gamma(params.gamma);
    const double sigma = f.sigma;
    auto h = [&f, x, sigma](double w) {
        const double t = x / w;
        return f.f(t) * std::pow(t, 1.0 - sigma);
    };
    const KernelIntegral integral(params.gamma, params.alpha - params.gamma - sigma, select_kernel(params), h);
    const Complex prefactor = real_power(x, params.gamma - params.alpha - params.alpha_p + sigma - 1.0) *
                              reciprocal_gamma(params.gamma);
    return prefactor * integral.evaluate(cfg);
}

Complex msm_left_saigo(Complex alpha, Complex beta_s, Complex eta, const Integrand& f, double x,
                       const QuadratureConfig& cfg)
{
    cfg.validate();
    check_x(x);
    if (!(alpha.real() > 0.0))
        throw DomainError("Saigo operator requires Re(alpha) > 0");
    const double sigma = f.sigma;
    auto h = [&f, x, sigma](double w) {
        const double t = x * w;
        return f.f(t) * std::pow(t, 1.0 - sigma);
    };
    const KernelIntegral integral(alpha, sigma - 1.0, GaussKernel{alpha + beta_s, -eta, alpha, 0.0}, h);
    const Complex prefactor = real_power(x, -beta_s + sigma - 1.0) * reciprocal_gamma(alpha);
    return prefactor * integral.evaluate(cfg);
}

SaigoParams saigo_from_msm(const MsmParams& p)
{
    return {p.gamma, p.alpha - p.gamma, -p.beta};
}

std::optional<Complex> log_power_image_left(const MsmParams& p, Complex rho, double x)
{
    const Complex a = p.alpha, ap = p.alpha_p, b = p.beta, bp = p.beta_p, g = p.gamma;
    const auto ratio = log_gamma_ratio({{rho, rho + g - a - ap - b, rho + bp - ap},
                                        {rho + bp, rho + g - a - ap, rho + g - ap - b}});
    if (!ratio)
        return std::nullopt;
    return *ratio + (rho - a - ap + g - 1.0) * std::log(x);
}

std::optional<Complex> log_power_image_right(const MsmParams& p, Complex rho, double x)
{
    const Complex a = p.alpha, ap = p.alpha_p, b = p.beta, bp = p.beta_p, g = p.gamma;
    const Complex r = 1.0 - rho;
    const auto ratio = log_gamma_ratio({{r - g + a + ap, r + a + bp - g, r - b},
                                        {r, r + a + ap + bp - g, r + a - b}});
    if (!ratio)
        return std::nullopt;
    return *ratio + (rho - a - ap + g - 1.0) * std::log(x);
}

Complex power_image_left(const MsmParams& params, Complex rho, double x)
{
    check_x(x);
    if (!validate_left(params, rho))
        throw DomainError("power_image_left: need Re(gamma) > 0 and "
                          "Re(rho) > max{0, Re(alpha+alpha'+beta-gamma), Re(alpha'-beta')}");
    const auto log_value = log_power_image_left(params, rho, x);
    return log_value ? exp_checked(*log_value) : Complex(0.0);
}

Complex power_image_right(const MsmParams& params, Complex rho, double x)
{
    check_x(x);
    if (!validate_right(params, rho))
        throw DomainError("power_image_right: need Re(gamma) > 0 and "
                          "Re(rho) < 1 + min{Re(-beta), Re(alpha+alpha'-gamma), Re(alpha+beta'-gamma)}");
    const auto log_value = log_power_image_right(params, rho, x);
    return log_value ? exp_checked(*log_value) : Complex(0.0);
}

} // namespace msm
