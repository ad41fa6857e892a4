// msm: evaluate MSM images and run the cross-verification suite.
//
// Exit codes: 0 ok, 1 verification failure, 2 domain error, 3 convergence
// error, 4 I/O or parse error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "msm/errors.hpp"
#include "msm/grid.hpp"
#include "msm/images.hpp"
#include "msm/operators.hpp"
#include "msm/verify.hpp"

namespace {

using namespace msm;

enum Exit { kOk = 0, kVerifyFailed = 1, kDomain = 2, kConvergence = 3, kIo = 4 };

struct EvalArgs {
    std::string side = "left";
    std::string route = "wright";
    std::string kind = "bessel";
    std::string alpha = "0", alpha_p = "0", beta = "0", beta_p = "0", gamma = "1";
    std::string rho = "1", p = "0", b = "1", c = "1";
    double x = 1.0;
    double tol = 1e-10;
    int quad_nodes = 200;
};

struct VerifyArgs {
    std::string grid;
    std::string out;
    std::string csv;
    int quad_nodes = 200;
    std::uint64_t seed = 42;
    int threads = 0;
    bool timings = false;
};

int max_terms_from_env()
{
    const char* env = std::getenv("MSM_MAX_TERMS");
    if (!env || !*env)
        return kDefaultMaxTerms;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1)
        throw ParseError("MSM_MAX_TERMS must be a positive integer");
    return static_cast<int>(v);
}

std::string timestamp()
{
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

void print_result(Complex value, int terms, double tail)
{
    std::printf("value = %.17g %.17g\n", value.real(), value.imag());
    std::printf("terms = %d\n", terms);
    std::printf("tail = %.3g\n", tail);
}

TrigKind trig_kind(const std::string& k)
{
    if (k == "cos") return TrigKind::cos;
    if (k == "cosh") return TrigKind::cosh;
    if (k == "sin") return TrigKind::sin;
    return TrigKind::sinh;
}

// Integrand t^{rho-1} g(t) for the left side or t^{rho-1} g(1/t) for the right.
Integrand eval_integrand(const ImageRequest& req, Complex scale)
{
    const bool left = req.side == Side::left;
    const BesselParams bessel = req.bessel;
    const Complex rho = req.rho;
    Integrand f;
    f.f = [=](double t) {
        const double s = left ? t : 1.0 / t;
        return scale * std::pow(Complex(t), rho - 1.0) * bessel_w(bessel, s, 1e-15).value;
    };
    const double p = bessel.p().real();
    f.sigma = left ? (rho + p).real() : (rho - p).real();
    return f;
}

int cmd_eval(const EvalArgs& a)
{
    const int max_terms = max_terms_from_env();
    ParameterPoint pt;
    pt.params = {parse_complex(a.alpha), parse_complex(a.alpha_p), parse_complex(a.beta),
                 parse_complex(a.beta_p), parse_complex(a.gamma)};
    pt.rho = parse_complex(a.rho);
    pt.p = parse_complex(a.p);
    pt.b = parse_complex(a.b);
    pt.c = parse_complex(a.c);
    pt.x = a.x;
    const Side side = a.side == "left" ? Side::left : Side::right;
    const Representation rep = a.route == "hyp6f7" ? Representation::hyp6f7 : Representation::wright;

    ImageRequest req = make_request(pt, side, rep);
    Complex scale = 1.0;
    if (a.kind != "bessel") {
        TrigImageRequest treq;
        treq.params = pt.params;
        treq.rho = pt.rho;
        treq.c = pt.c;
        treq.x = pt.x;
        treq.kind = trig_kind(a.kind);
        treq.side = side;
        treq.representation = rep;
        const TrigSpecialization spec = specialize(treq);
        req = spec.request;
        scale = spec.scale;
    }
    if (auto reason = inadmissibility_reason(req))
        throw DomainError(*reason);

    if (a.route == "quadrature") {
        QuadratureConfig cfg;
        cfg.nodes = a.quad_nodes;
        const Integrand f = eval_integrand(req, scale);
        auto run = [&](int nodes) {
            QuadratureConfig c = cfg;
            c.nodes = nodes;
            return side == Side::left ? msm_left(req.params, f, req.x, c) : msm_right(req.params, f, req.x, c);
        };
        const Complex value = run(cfg.nodes);
        const Complex refined = run(2 * cfg.nodes);
        print_result(value, cfg.nodes, std::abs(refined - value));
        return kOk;
    }

    SeriesResult s = a.route == "termwise" ? termwise_adaptive(req, a.tol, max_terms) : image(req, a.tol, max_terms);
    s.value *= scale;
    s.tail_estimate *= std::abs(scale);
    print_result(s.value, s.terms_used, s.tail_estimate);
    if (!s.converged) {
        std::fprintf(stderr, "error: series did not converge within %d terms\n", max_terms);
        return kConvergence;
    }
    return kOk;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write " + path);
    out << text;
    if (!out)
        throw ParseError("write failed for " + path);
}

int cmd_verify(const VerifyArgs& a)
{
    VerifyConfig cfg;
    cfg.quad_nodes = a.quad_nodes;
    cfg.seed = a.seed;
    cfg.threads = a.threads;
    cfg.timings = a.timings;
    cfg.max_terms = max_terms_from_env();
    const GridSpec grid = parse_grid_file(a.grid);
    const VerifyOutcome outcome = run_verification(grid, cfg);
    write_file(a.out, render_report(outcome.report, timestamp()));
    if (!a.csv.empty())
        write_file(a.csv, outcome.csv);
    if (outcome.cases == 0)
        std::fprintf(stderr, "warning: no admissible cases in grid\n");
    std::printf("cases = %d\nfailures = %d\n", outcome.cases, outcome.failures);
    return outcome.failures == 0 ? kOk : kVerifyFailed;
}

int cmd_grid_expand(const std::string& path)
{
    const GridSpec grid = parse_grid_file(path);
    const auto cases = expand_grid(grid, 42);
    std::printf("index");
    for (const auto& name : parameter_names())
        std::printf(",%s", name.c_str());
    std::printf(",admissible_left,admissible_right\n");
    for (const GridCase& gc : cases) {
        std::printf("%d", gc.index);
        for (const auto& name : parameter_names()) {
            const Complex v = parameter_value(gc.point, name);
            if (v.imag() == 0.0)
                std::printf(",%.17g", v.real());
            else
                std::printf(",%.17g%+.17gi", v.real(), v.imag());
        }
        std::printf(",%s,%s\n", gc.admissible_left ? "true" : "false", gc.admissible_right ? "true" : "false");
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"MSM fractional integrals of generalized Bessel functions"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate one image");
    eval->add_option("--side", ev.side)->check(CLI::IsMember({"left", "right"}));
    eval->add_option("--route", ev.route)->check(CLI::IsMember({"wright", "hyp6f7", "termwise", "quadrature"}));
    eval->add_option("--kind", ev.kind)->check(CLI::IsMember({"bessel", "cos", "cosh", "sin", "sinh"}));
    eval->add_option("--alpha", ev.alpha, "re or re,im");
    eval->add_option("--alpha-p", ev.alpha_p);
    eval->add_option("--beta", ev.beta);
    eval->add_option("--beta-p", ev.beta_p);
    eval->add_option("--gamma", ev.gamma);
    eval->add_option("--rho", ev.rho);
    eval->add_option("--p", ev.p);
    eval->add_option("--b", ev.b);
    eval->add_option("--c", ev.c);
    eval->add_option("--x", ev.x);
    eval->add_option("--tol", ev.tol);
    eval->add_option("--quad-nodes", ev.quad_nodes);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the cross-verification suite over a grid");
    verify->add_option("--grid", va.grid)->required();
    verify->add_option("--out", va.out)->required();
    verify->add_option("--csv", va.csv);
    verify->add_option("--quad-nodes", va.quad_nodes);
    verify->add_option("--seed", va.seed);
    verify->add_option("--threads", va.threads);
    verify->add_flag("--timings", va.timings, "Include wall time per case");

    std::string grid_path;
    auto* grid = app.add_subcommand("grid", "Grid utilities");
    grid->require_subcommand(1);
    auto* expand = grid->add_subcommand("expand", "List the expanded cases");
    expand->add_option("--grid", grid_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kIo;
    }

    try {
        if (*eval)
            return cmd_eval(ev);
        if (*verify)
            return cmd_verify(va);
        if (*expand)
            return cmd_grid_expand(grid_path);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kIo;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kDomain;
    } catch (const PoleError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kDomain;
    } catch (const BranchError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kDomain;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kConvergence;
    }
    return kOk;
}
