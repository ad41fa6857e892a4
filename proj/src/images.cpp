#include "msm/images.hpp"

#include <cmath>
#include <numbers>

#include "msm/errors.hpp"

namespace msm {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_x(double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("x must be a positive finite real");
}

// Shift that the admissibility condition constrains: rho + p (left), rho - p (right).
Complex shifted_rho(const ImageRequest& req)
{
    const Complex p = req.bessel.p();
    return req.side == Side::left ? req.rho + p : req.rho - p;
}

Complex log_prefactor(const ImageRequest& req)
{
    const MsmParams& m = req.params;
    const Complex p = req.bessel.p();
    const Complex exponent = shifted_rho(req) - m.alpha - m.alpha_p + m.gamma - 1.0;
    return exponent * std::log(req.x) - p * kLn2;
}

void require_admissible(const ImageRequest& req)
{
    if (auto reason = inadmissibility_reason(req))
        throw DomainError(*reason);
}

// Scales a series result by exp(log_scale), keeping overflow in log space.
SeriesResult scaled(SeriesResult s, Complex log_scale)
{
    if (!std::isfinite(s.value.real()) || !std::isfinite(s.value.imag()))
        throw OverflowError("series value is not finite", log_scale.real());
    if (s.value == Complex(0.0)) {
        const double mag = std::exp(std::min(log_scale.real(), 709.0));
        s.tail_estimate *= mag;
        return s;
    }
    const Complex log_value = log_scale + std::log(s.value);
    const double ratio = s.tail_estimate / std::abs(s.value);
    s.value = exp_checked(log_value);
    s.tail_estimate = ratio * std::abs(s.value);
    return s;
}

// Splits every (A, 2) pair into A/2 and (A+1)/2.
std::vector<Complex> duplicated(const std::vector<WrightPair>& pairs)
{
    std::vector<Complex> out;
    for (const auto& pr : pairs) {
        if (pr.weight == 2.0) {
            out.push_back(pr.shift / 2.0);
            out.push_back((pr.shift + 1.0) / 2.0);
        } else {
            out.push_back(pr.shift);
        }
    }
    return out;
}

// log of prod Gamma(upper) / prod Gamma(lower) at k = 0; nullopt if a lower
// entry is at a pole.
std::optional<Complex> log_leading_ratio(const WrightSpec& spec)
{
    Complex acc = 0.0;
    for (const auto& pr : spec.upper)
        acc += log_gamma(pr.shift);
    for (const auto& pr : spec.lower) {
        if (at_pole(pr.shift))
            return std::nullopt;
        acc -= log_gamma(pr.shift);
    }
    return acc;
}

SeriesResult image_6f7(const ImageRequest& req, const WrightSpec& spec, double tol, int max_terms)
{
    require_admissible(req);
    const HypergeometricSpec h{duplicated(spec.upper), duplicated(spec.lower), spec.argument};
    SeriesResult s = hyp_pfq(h, tol, max_terms);
    const auto ratio = log_leading_ratio(spec);
    if (!ratio) {
        s.value = 0.0;
        s.tail_estimate = 0.0;
        return s;
    }
    return scaled(s, *ratio + log_prefactor(req));
}

// k-th term of the term-wise sum, built from the power images.
class TermwiseTerms {
public:
    explicit TermwiseTerms(const ImageRequest& req) : req_(req), minus_c_(-req.bessel.c()) {}

    Complex operator()(int k)
    {
        const Complex p = req_.bessel.p();
        const Complex kappa = req_.bessel.kappa();
        const Complex shift = p + 2.0 * k;
        const auto log_image = req_.side == Side::left
                                   ? log_power_image_left(req_.params, req_.rho + shift, req_.x)
                                   : log_power_image_right(req_.params, req_.rho - shift, req_.x);
        const Complex c_power = k == 0 ? Complex(1.0) : std::pow(minus_c_, k);
        if (!log_image || c_power == Complex(0.0))
            return 0.0;
        const Complex log_coef = -shift * kLn2 - log_gamma(kappa + double(k)) -
                                 std::lgamma(double(k) + 1.0);
        return c_power * exp_checked(log_coef + *log_image);
    }

private:
    const ImageRequest& req_;
    Complex minus_c_;
};

} // namespace

std::optional<std::string> inadmissibility_reason(const ImageRequest& req)
{
    if (!(req.x > 0.0) || !std::isfinite(req.x))
        return "x must be a positive finite real";
    if (at_pole(req.bessel.kappa()))
        return "kappa = p + (b+1)/2 must not be 0, -1, -2, ...";
    const MsmParams& m = req.params;
    if (!(m.gamma.real() > 0.0))
        return "Re(gamma) > 0 required";
    const Complex r = shifted_rho(req);
    if (req.side == Side::left) {
        if (!validate_left(m, r))
            return "left image needs Re(rho+p) > max{0, Re(alpha+alpha'+beta-gamma), Re(alpha'-beta')}";
    } else if (!validate_right(m, r)) {
        return "right image needs Re(rho-p) < 1 + min{Re(-beta), Re(alpha+alpha'-gamma), "
               "Re(alpha+beta'-gamma)}";
    }
    return std::nullopt;
}

WrightSpec left_wright_spec(const ImageRequest& req)
{
    const MsmParams& m = req.params;
    const Complex r = req.rho + req.bessel.p();
    const Complex a = m.alpha, ap = m.alpha_p, b = m.beta, bp = m.beta_p, g = m.gamma;
    WrightSpec spec;
    spec.upper = {{r, 2}, {r + g - a - ap - b, 2}, {r + bp - ap, 2}};
    spec.lower = {{r + bp, 2}, {r + g - a - ap, 2}, {r + g - ap - b, 2}, {req.bessel.kappa(), 1}};
    spec.argument = -req.bessel.c() * req.x * req.x / 4.0;
    return spec;
}

WrightSpec right_wright_spec(const ImageRequest& req)
{
    const MsmParams& m = req.params;
    const Complex r = 1.0 - req.rho + req.bessel.p();
    const Complex a = m.alpha, ap = m.alpha_p, b = m.beta, bp = m.beta_p, g = m.gamma;
    WrightSpec spec;
    spec.upper = {{r - g + a + ap, 2}, {r + a + bp - g, 2}, {r - b, 2}};
    spec.lower = {{r, 2}, {r - g + a + ap + bp, 2}, {r + a - b, 2}, {req.bessel.kappa(), 1}};
    spec.argument = -req.bessel.c() / (4.0 * req.x * req.x);
    return spec;
}

SeriesResult image_wright_left(const ImageRequest& req, double tol, int max_terms)
{
    require_admissible(req);
    return scaled(wright_psi(left_wright_spec(req), tol, max_terms), log_prefactor(req));
}

SeriesResult image_wright_right(const ImageRequest& req, double tol, int max_terms)
{
    require_admissible(req);
    return scaled(wright_psi(right_wright_spec(req), tol, max_terms), log_prefactor(req));
}

SeriesResult image_6f7_left(const ImageRequest& req, double tol, int max_terms)
{
    return image_6f7(req, left_wright_spec(req), tol, max_terms);
}

SeriesResult image_6f7_right(const ImageRequest& req, double tol, int max_terms)
{
    return image_6f7(req, right_wright_spec(req), tol, max_terms);
}

SeriesResult image(const ImageRequest& req, double tol, int max_terms)
{
    const bool left = req.side == Side::left;
    if (req.representation == Representation::wright)
        return left ? image_wright_left(req, tol, max_terms) : image_wright_right(req, tol, max_terms);
    return left ? image_6f7_left(req, tol, max_terms) : image_6f7_right(req, tol, max_terms);
}

SeriesResult termwise_oracle(const ImageRequest& req, int n_terms)
{
    require_admissible(req);
    if (n_terms < 0)
        throw DomainError("termwise_oracle: n_terms must be non-negative");
    TermwiseTerms term(req);
    SeriesResult out;
    Complex last = 0.0;
    for (int k = 0; k <= n_terms; ++k) {
        last = term(k);
        out.value += last;
    }
    out.terms_used = n_terms + 1;
    out.tail_estimate = std::abs(term(n_terms + 1));
    out.converged = out.tail_estimate <= 1e-15 * std::max(1.0, std::abs(out.value));
    return out;
}

SeriesResult termwise_adaptive(const ImageRequest& req, double tol, int max_terms)
{
    require_admissible(req);
    TermwiseTerms term(req);
    return sum_series(term, tol, max_terms);
}

TrigSpecialization specialize(const TrigImageRequest& req, Complex b)
{
    const bool cosine = req.kind == TrigKind::cos || req.kind == TrigKind::cosh;
    const bool hyperbolic = req.kind == TrigKind::cosh || req.kind == TrigKind::sinh;
    const Complex p = cosine ? -b / 2.0 : 1.0 - b / 2.0;
    const Complex c2 = req.c * req.c;
    const Complex half_b = b / 2.0;

    TrigSpecialization out;
    out.request.params = req.params;
    out.request.rho = req.side == Side::left ? req.rho + half_b : req.rho - half_b;
    out.request.bessel = BesselParams(p, b, hyperbolic ? -c2 : c2);
    out.request.x = req.x;
    out.request.side = req.side;
    out.request.representation = req.representation;
    // cos(cz) = sqrt(pi) (z/2)^{b/2} W_{-b/2,b,c^2}(z); sin carries an extra c.
    out.scale = std::sqrt(std::numbers::pi) * std::exp(-half_b * kLn2);
    if (!cosine)
        out.scale *= req.c;
    return out;
}

std::optional<std::string> inadmissibility_reason(const TrigImageRequest& req)
{
    return inadmissibility_reason(specialize(req).request);
}

SeriesResult trig_image(const TrigImageRequest& req, double tol, int max_terms, Complex b)
{
    check_x(req.x);
    const TrigSpecialization spec = specialize(req, b);
    SeriesResult s = image(spec.request, tol, max_terms);
    s.value *= spec.scale;
    s.tail_estimate *= std::abs(spec.scale);
    return s;
}

} // namespace msm
