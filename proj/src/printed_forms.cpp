#include "msm/printed_forms.hpp"

#include <cmath>
#include <numbers>

#include "msm/errors.hpp"

namespace msm {

namespace {

constexpr double kTol = 1e-14;

Complex psi(std::vector<WrightPair> upper, std::vector<WrightPair> lower, Complex z)
{
    return wright_psi({std::move(upper), std::move(lower), z}, kTol).value;
}

Complex pfq(std::vector<Complex> upper, std::vector<Complex> lower, Complex z)
{
    return hyp_pfq({std::move(upper), std::move(lower), z}, kTol).value;
}

Complex xpow(double x, Complex e) { return std::exp(e * std::log(x)); }

Complex g3(Complex a, Complex b, Complex c, Complex d, Complex e, Complex f)
{
    return gamma_ratio({{a, b, c}, {d, e, f}});
}

const double kSqrtPi = std::sqrt(std::numbers::pi);

bool hyperbolic(TrigKind k) { return k == TrigKind::cosh || k == TrigKind::sinh; }
bool cosine(TrigKind k) { return k == TrigKind::cos || k == TrigKind::cosh; }

const char* kind_name(TrigKind k)
{
    switch (k) {
    case TrigKind::cos: return "cos";
    case TrigKind::cosh: return "cosh";
    case TrigKind::sin: return "sin";
    case TrigKind::sinh: return "sinh";
    }
    return "?";
}

// Printed trig image on the left side, Wright form.
Complex trig_left_wright(const ParameterPoint& q, TrigKind kind)
{
    const MsmParams& m = q.params;
    const Complex r = q.rho, a = m.alpha, ap = m.alpha_p, b = m.beta, bp = m.beta_p, g = m.gamma;
    const double kappa = cosine(kind) ? 0.5 : 1.5;
    const Complex z = (hyperbolic(kind) ? 1.0 : -1.0) * q.c * q.c * q.x * q.x / 4.0;
    return kSqrtPi * xpow(q.x, r - a - ap + g - 1.0) *
           psi({{r, 2}, {r + g - a - ap - b, 2}, {r + bp - ap, 2}},
               {{r + bp, 2}, {r + g - a - ap, 2}, {r + g - ap - b, 2}, {kappa, 1}}, z);
}

Complex trig_right_wright(const ParameterPoint& q, TrigKind kind)
{
    const MsmParams& m = q.params;
    const Complex r = q.rho, a = m.alpha, ap = m.alpha_p, b = m.beta, bp = m.beta_p, g = m.gamma;
    const double kappa = cosine(kind) ? 0.5 : 1.5;
    const Complex z = (hyperbolic(kind) ? 1.0 : -1.0) * q.c * q.c / (4.0 * q.x * q.x);
    return kSqrtPi * xpow(q.x, r - a - ap + g) *
           psi({{r - g + a + ap, 2}, {-r + a + bp - g, 2}, {-r - b, 2}},
               {{-r, 2}, {-r - g + a + ap + bp, 2}, {-r + a - b, 2}, {kappa, 1}}, z);
}

Complex trig_left_6f7(const ParameterPoint& q, TrigKind kind)
{
    const MsmParams& m = q.params;
    const Complex r = q.rho, a = m.alpha, ap = m.alpha_p, b = m.beta, bp = m.beta_p, g = m.gamma;
    const double kappa = cosine(kind) ? 0.5 : 1.5;
    const Complex z = (hyperbolic(kind) ? 1.0 : -1.0) * q.c * q.c * q.x * q.x / 4.0;
    return g3(r, r + g - a - ap - b, r + bp - ap, r + bp, r + g - a - ap, r + g - ap - b) *
           xpow(q.x, r - a - ap + g - 1.0) *
           pfq({r / 2.0, (r + 1.0) / 2.0, (r + g - a - ap - b) / 2.0, (r + g - a - ap + b + 1.0) / 2.0,
                (r + bp - ap) / 2.0, (r + bp - ap + 1.0) / 2.0},
               {kappa, (r + bp) / 2.0, (r + bp + 1.0) / 2.0, (r + g - a - ap) / 2.0,
                (r + g - a - ap + 1.0) / 2.0, (r + g - ap - b) / 2.0, (r + g - ap - b + 1.0) / 2.0},
               z);
}

Complex trig_right_6f7(const ParameterPoint& q, TrigKind kind)
{
    const MsmParams& m = q.params;
    const Complex r = q.rho, a = m.alpha, ap = m.alpha_p, b = m.beta, bp = m.beta_p, g = m.gamma;
    const double kappa = cosine(kind) ? 0.5 : 1.5;
    const Complex z = (hyperbolic(kind) ? 1.0 : -1.0) * q.c * q.c / (4.0 * q.x * q.x);
    return g3(a + ap - g - r, a + bp - g - r, -b - r, -r, a + ap + bp - g - r, a - b - r) *
           xpow(q.x, r - a - ap + g) *
           pfq({(a + ap - r) / 2.0, (a + ap - g - r + 1.0) / 2.0, (a + bp - g - r) / 2.0,
                (a + bp - g - r + 1.0) / 2.0, (-b - r) / 2.0, (-b - r + 1.0) / 2.0},
               {kappa, -r / 2.0, -(r + 1.0) / 2.0, (a + ap + bp - g - r) / 2.0,
                (a + ap + bp - g - r + 1.0) / 2.0, (a - b - r) / 2.0, (a - b - r + 1.0) / 2.0},
               z);
}

// Derived trig image for the integrand t^{rho-1+shift} f(ct) (left) or
// t^{rho-1+shift} f(c/t) (right).
std::optional<Complex> derived_trig(const ParameterPoint& q, TrigKind kind, Side side, double shift)
{
    TrigImageRequest req;
    req.params = q.params;
    req.rho = q.rho + shift;
    req.c = q.c;
    req.x = q.x;
    req.kind = kind;
    req.side = side;
    if (inadmissibility_reason(req))
        return std::nullopt;
    return trig_image(req, kTol).value;
}

ImageRequest bessel_request(const ParameterPoint& q, Side side)
{
    ImageRequest req;
    req.params = q.params;
    req.rho = q.rho;
    req.bessel = BesselParams(q.p, q.b, q.c);
    req.x = q.x;
    req.side = side;
    return req;
}

std::optional<Complex> derived_bessel(const ParameterPoint& q, Side side)
{
    const ImageRequest req = bessel_request(q, side);
    if (!admissible(req))
        return std::nullopt;
    return image(req, kTol).value;
}

std::vector<PrintedForm> build_forms()
{
    std::vector<PrintedForm> forms;

    forms.push_back(
        {"power_image_right",
         "Gamma[1-rho-gamma+alpha+alpha', 1-rho+alpha+beta', 1-rho-beta; 1-rho, "
         "1-rho+alpha+alpha'+beta+beta'-gamma, 1-rho+alpha-beta] x^{rho-alpha-alpha'+gamma-1}",
         [](const ParameterPoint& q) {
             const MsmParams& m = q.params;
             const Complex r = 1.0 - q.rho, a = m.alpha, ap = m.alpha_p, b = m.beta, bp = m.beta_p,
                           g = m.gamma;
             return g3(r - g + a + ap, r + a + bp, r - b, r, r + a + ap + b + bp - g, r + a - b) *
                    xpow(q.x, q.rho - a - ap + g - 1.0);
         },
         [](const ParameterPoint& q) -> std::optional<Complex> {
             if (!validate_right(q.params, q.rho))
                 return std::nullopt;
             return power_image_right(q.params, q.rho, q.x);
         }});

    forms.push_back(
        {"bessel_right_wright",
         "x^{rho-p-alpha-alpha'+gamma-1}/2^p 3psi4[(1-rho+p-gamma+alpha+alpha',2), "
         "(1-rho+p+alpha-beta'-gamma,2), (1-rho+p-beta,2); (1-rho+p,2), "
         "(1-rho+p-gamma+alpha+alpha'+beta',2), (1-rho+p+alpha-beta,2), (kappa,1) | -c/(4x^2)]",
         [](const ParameterPoint& q) {
             const MsmParams& m = q.params;
             const Complex r = 1.0 - q.rho + q.p, a = m.alpha, ap = m.alpha_p, b = m.beta,
                           bp = m.beta_p, g = m.gamma;
             const Complex kappa = q.p + (q.b + 1.0) / 2.0;
             return xpow(q.x, q.rho - q.p - a - ap + g - 1.0) / std::pow(Complex(2.0), q.p) *
                    psi({{r - g + a + ap, 2}, {r + a - bp - g, 2}, {r - b, 2}},
                        {{r, 2}, {r - g + a + ap + bp, 2}, {r + a - b, 2}, {kappa, 1}},
                        -q.c / (4.0 * q.x * q.x));
         },
         [](const ParameterPoint& q) { return derived_bessel(q, Side::right); }});

    forms.push_back(
        {"bessel_left_6f7",
         "x^{rho+p-1}/2^p Gamma-ratio 6F7[(rho+p)/2, (rho+p+1)/2, (rho+p+gamma-alpha-alpha'-beta)/2, "
         "(rho+p-alpha-alpha'+beta+1)/2, (rho+p+beta'-alpha')/2, (rho+p+beta'-alpha'+1)/2; kappa, ... "
         "| -cx^2/4]",
         [](const ParameterPoint& q) {
             const MsmParams& m = q.params;
             const Complex r = q.rho + q.p, a = m.alpha, ap = m.alpha_p, b = m.beta, bp = m.beta_p,
                           g = m.gamma;
             const Complex kappa = q.p + (q.b + 1.0) / 2.0;
             return xpow(q.x, r - 1.0) / std::pow(Complex(2.0), q.p) *
                    g3(r, r + g - a - ap - b, r + bp - ap, r + bp, r + g - a - ap, r + g - ap - b) *
                    reciprocal_gamma(kappa) *
                    pfq({r / 2.0, (r + 1.0) / 2.0, (r + g - a - ap - b) / 2.0, (r - a - ap + b + 1.0) / 2.0,
                         (r + bp - ap) / 2.0, (r + bp - ap + 1.0) / 2.0},
                        {kappa, (r + bp) / 2.0, (r + bp + 1.0) / 2.0, (r + g - a - ap) / 2.0,
                         (r + g - a - ap + 1.0) / 2.0, (r + g - ap - b) / 2.0, (r + g - ap - b + 1.0) / 2.0},
                        -q.c * q.x * q.x / 4.0);
         },
         [](const ParameterPoint& q) { return derived_bessel(q, Side::left); }});

    forms.push_back(
        {"bessel_right_6f7",
         "x^{rho-p-alpha-alpha'+gamma-1}/2^p Gamma-ratio 6F7[(alpha+alpha'+p-gamma-rho+1)/2, "
         "(alpha+alpha'+p+gamma-rho+2)/2, ...; kappa, (p-rho+1)/2, ... | -c/(4x^2)]",
         [](const ParameterPoint& q) {
             const MsmParams& m = q.params;
             const Complex s = q.p - q.rho, a = m.alpha, ap = m.alpha_p, b = m.beta, bp = m.beta_p,
                           g = m.gamma;
             const Complex kappa = q.p + (q.b + 1.0) / 2.0;
             return xpow(q.x, q.rho - q.p - a - ap + g - 1.0) / std::pow(Complex(2.0), q.p) *
                    g3(a + ap + s - g + 1.0, a + bp - g + s + 1.0, -b + s + 1.0, s + 1.0,
                       a + ap + bp + s - g + 1.0, a - b + s + 1.0) *
                    reciprocal_gamma(kappa) *
                    pfq({(a + ap + s - g + 1.0) / 2.0, (a + ap + s + g + 2.0) / 2.0,
                         (a + bp + s - g + 1.0) / 2.0, (a + bp + s - g + 2.0) / 2.0, (-b + s + 1.0) / 2.0,
                         (-b + s + 2.0) / 2.0},
                        {kappa, (s + 1.0) / 2.0, (s + 2.0) / 2.0, (a + ap + bp + s - g + 1.0) / 2.0,
                         (a + ap + bp + s - g + 2.0) / 2.0, (a - b + s + 1.0) / 2.0, (a - b + s + 2.0) / 2.0},
                        -q.c / (4.0 * q.x * q.x));
         },
         [](const ParameterPoint& q) { return derived_bessel(q, Side::right); }});

    for (TrigKind kind : {TrigKind::cos, TrigKind::cosh, TrigKind::sin, TrigKind::sinh}) {
        const std::string k = kind_name(kind);
        const std::string sign = hyperbolic(kind) ? "+" : "-";
        const std::string kap = cosine(kind) ? "1/2" : "3/2";
        // Right-side Wright forms print t^rho for the hyperbolic integrands.
        const double right_wright_shift = hyperbolic(kind) ? 1.0 : 0.0;

        forms.push_back({"trig_left_wright_" + k,
                         "t^{rho-1}" + k + "(ct): sqrt(pi) x^{rho-alpha-alpha'+gamma-1} 3psi4[(rho,2), ...; "
                         "..., (" + kap + ",1) | " + sign + "c^2x^2/4]",
                         [kind](const ParameterPoint& q) { return trig_left_wright(q, kind); },
                         [kind](const ParameterPoint& q) { return derived_trig(q, kind, Side::left, 0.0); }});
        forms.push_back({"trig_right_wright_" + k,
                         std::string(hyperbolic(kind) ? "t^{rho}" : "t^{rho-1}") + k +
                             "(c/t): sqrt(pi) x^{rho-alpha-alpha'+gamma} 3psi4[(rho-gamma+alpha+alpha',2), ...; "
                             "(-rho,2), ..., (" + kap + ",1) | " + sign + "c^2/(4x^2)]",
                         [kind](const ParameterPoint& q) { return trig_right_wright(q, kind); },
                         [kind, right_wright_shift](const ParameterPoint& q) {
                             return derived_trig(q, kind, Side::right, right_wright_shift);
                         }});
        forms.push_back({"trig_left_6f7_" + k,
                         "t^{rho-1}" + k + "(ct): Gamma-ratio x^{rho-alpha-alpha'+gamma-1} 6F7[rho/2, ...; " +
                             kap + ", ... | " + sign + "c^2x^2/4]",
                         [kind](const ParameterPoint& q) { return trig_left_6f7(q, kind); },
                         [kind](const ParameterPoint& q) { return derived_trig(q, kind, Side::left, 0.0); }});
        forms.push_back({"trig_right_6f7_" + k,
                         "t^{rho}" + k + "(c/t): Gamma-ratio x^{rho-alpha-alpha'+gamma} 6F7[(alpha+alpha'-rho)/2, "
                         "...; " + kap + ", -rho/2, -(rho+1)/2, ... | " + sign + "c^2/(4x^2)]",
                         [kind](const ParameterPoint& q) { return trig_right_6f7(q, kind); },
                         [kind](const ParameterPoint& q) { return derived_trig(q, kind, Side::right, 1.0); }});
    }
    return forms;
}

double relative_error(Complex a, Complex b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

} // namespace

const std::vector<PrintedForm>& printed_forms()
{
    static const std::vector<PrintedForm> forms = build_forms();
    return forms;
}

AuditResult audit_printed_forms(const ParameterPoint& pt, double tol)
{
    AuditResult out;
    for (const PrintedForm& form : printed_forms()) {
        std::optional<Complex> derived;
        try {
            derived = form.derived(pt);
        } catch (const Error&) {
            derived.reset();
        }
        if (!derived) {
            ++out.skipped;
            continue;
        }
        ++out.checked;
        AuditEntry entry{form.name, form.statement, Complex(0.0), *derived, 0.0, {}, false};
        try {
            entry.printed = form.printed(pt);
            entry.rel_error = relative_error(entry.printed, entry.derived);
            entry.mismatch = !(entry.rel_error <= tol);
        } catch (const Error& e) {
            entry.error = e.what();
            entry.mismatch = true;
        }
        if (entry.mismatch)
            out.entries.push_back(std::move(entry));
    }
    return out;
}

} // namespace msm
