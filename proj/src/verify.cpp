#include "msm/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "msm/errors.hpp"
#include "msm/operators.hpp"

namespace msm {

namespace {

using nlohmann::json;

constexpr double kSeriesTol = 1e-15;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

bool all_real(const ParameterPoint& pt)
{
    for (const auto& name : parameter_names())
        if (parameter_value(pt, name).imag() != 0.0)
            return false;
    return true;
}

struct RouteValue {
    bool ok = false;
    Complex value;
    json record;
};

template <class Fn>
RouteValue run_series_route(Fn&& fn)
{
    RouteValue out;
    try {
        const SeriesResult s = fn();
        out.value = s.value;
        out.record = {{"value", complex_json(s.value)},
                      {"terms", s.terms_used},
                      {"tail", round3(s.tail_estimate)},
                      {"converged", s.converged}};
        out.ok = s.converged;
        if (!s.converged)
            out.record["error"] = "term cap reached before convergence";
    } catch (const Error& e) {
        out.record = {{"error", e.what()}};
    }
    return out;
}

RouteValue run_quadrature(const ParameterPoint& pt, Side side, int nodes)
{
    RouteValue out;
    if (!all_real(pt)) {
        out.record = {{"status", "unavailable"}, {"reason", "complex parameters"}};
        return out;
    }
    QuadratureConfig cfg;
    cfg.nodes = nodes;
    const BesselParams bessel(pt.p, pt.b, pt.c);
    const double rho = pt.rho.real();
    const double p = pt.p.real();
    Integrand f;
    if (side == Side::left) {
        f.f = [bessel, rho](double t) {
            return std::pow(t, rho - 1.0) * bessel_w(bessel, t, kSeriesTol).value;
        };
        f.sigma = rho + p;
    } else {
        f.f = [bessel, rho](double t) {
            return std::pow(t, rho - 1.0) * bessel_w(bessel, 1.0 / t, kSeriesTol).value;
        };
        f.sigma = rho - p;
    }
    try {
        out.value = side == Side::left ? msm_left(pt.params, f, pt.x, cfg)
                                       : msm_right(pt.params, f, pt.x, cfg);
        out.ok = true;
        out.record = {{"status", "ok"}, {"value", complex_json(out.value)}, {"nodes", nodes}};
    } catch (const KernelDivergence& e) {
        out.record = {{"status", "unavailable"}, {"reason", e.what()}};
    } catch (const DomainError& e) {
        out.record = {{"status", "unavailable"}, {"reason", e.what()}};
    } catch (const Error& e) {
        out.record = {{"status", "error"}, {"reason", e.what()}};
    }
    return out;
}

struct Check {
    std::string pair;
    double error;
    double tolerance;
    bool pass;
};

Check compare(const std::string& pair, const RouteValue& a, const RouteValue& b, double tol)
{
    if (!a.ok || !b.ok)
        return {pair, std::nan(""), tol, false};
    const double e = relative_error(a.value, b.value);
    return {pair, e, tol, e <= tol};
}

struct CaseResult {
    bool present = false;
    json record;
    std::vector<Check> checks;
    double seconds = 0.0;
};

CaseResult run_case(const GridCase& gc, Side side, const GridSpec& grid, const VerifyConfig& cfg)
{
    CaseResult out;
    const auto t0 = std::chrono::steady_clock::now();
    const ImageRequest wreq = make_request(gc.point, side, Representation::wright);
    const ImageRequest freq = make_request(gc.point, side, Representation::hyp6f7);

    const RouteValue termwise = run_series_route([&] { return termwise_adaptive(wreq, kSeriesTol, cfg.max_terms); });
    const RouteValue wright = run_series_route([&] { return image(wreq, kSeriesTol, cfg.max_terms); });
    const RouteValue hyp = run_series_route([&] { return image(freq, kSeriesTol, cfg.max_terms); });
    const RouteValue quad = run_quadrature(gc.point, side, cfg.quad_nodes);

    json routes = {{"termwise", termwise.record},
                   {"wright", wright.record},
                   {"hyp6f7", hyp.record},
                   {"quadrature", quad.record}};

    out.checks.push_back(compare("wright_vs_termwise", wright, termwise, cfg.series_tolerance));
    out.checks.push_back(compare("hyp6f7_vs_wright", hyp, wright, cfg.series_tolerance));
    if (quad.record.value("status", "") != "unavailable")
        out.checks.push_back(compare("quadrature_vs_termwise", quad, termwise, cfg.quadrature_tolerance));

    if (grid.trig_check) {
        for (TrigKind kind : {TrigKind::cos, TrigKind::cosh, TrigKind::sin, TrigKind::sinh}) {
            TrigImageRequest treq;
            treq.params = gc.point.params;
            treq.rho = gc.point.rho;
            treq.c = gc.point.c;
            treq.x = gc.point.x;
            treq.kind = kind;
            treq.side = side;
            if (inadmissibility_reason(treq))
                continue;
            static const char* names[] = {"cos", "cosh", "sin", "sinh"};
            const std::string name = names[static_cast<int>(kind)];
            const RouteValue tw = run_series_route([&] { return trig_image(treq, kSeriesTol, cfg.max_terms); });
            treq.representation = Representation::hyp6f7;
            const RouteValue tf = run_series_route([&] { return trig_image(treq, kSeriesTol, cfg.max_terms); });
            routes["trig_" + name + "_wright"] = tw.record;
            routes["trig_" + name + "_hyp6f7"] = tf.record;
            out.checks.push_back(compare("trig_" + name + "_hyp6f7_vs_wright", tf, tw, cfg.series_tolerance));
        }
    }

    json inputs = json::object();
    for (const auto& name : parameter_names())
        inputs[name] = complex_json(parameter_value(gc.point, name));

    json checks = json::array();
    bool pass = true;
    for (const Check& c : out.checks) {
        json item = {{"pair", c.pair}, {"tolerance", c.tolerance}, {"pass", c.pass}};
        item["rel_error"] = std::isnan(c.error) ? json(nullptr) : json(round3(c.error));
        checks.push_back(item);
        pass = pass && c.pass;
    }

    out.record = {{"index", gc.index},
                  {"side", side_name(side)},
                  {"inputs", inputs},
                  {"routes", routes},
                  {"checks", checks},
                  {"pass", pass}};
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cfg.timings)
        out.record["wall_seconds"] = out.seconds;
    out.present = true;
    return out;
}

std::string format_g(const char* fmt, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string csv_value(Complex z)
{
    if (z.imag() == 0.0)
        return format_g("%.17g", z.real());
    return format_g("%.17g", z.real()) + (z.imag() < 0 ? "" : "+") + format_g("%.17g", z.imag()) + "i";
}

} // namespace

double relative_error(Complex a, Complex b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double round3(double v)
{
    if (!std::isfinite(v) || v == 0.0)
        return v;
    return std::stod(format_g("%.2e", v));
}

VerifyOutcome run_verification(const GridSpec& grid, const VerifyConfig& cfg)
{
    const std::vector<GridCase> cases = expand_grid(grid, cfg.seed);

    struct Job {
        const GridCase* gc;
        Side side;
    };
    std::vector<Job> jobs;
    int skipped = 0;
    for (const GridCase& gc : cases) {
        for (Side side : grid.sides) {
            const bool ok = side == Side::left ? gc.admissible_left : gc.admissible_right;
            if (ok)
                jobs.push_back({&gc, side});
            else
                ++skipped;
        }
    }

    std::vector<CaseResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++)
            results[i] = run_case(*jobs[i].gc, jobs[i].side, grid, cfg);
    };
    unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    VerifyOutcome out;
    json case_list = json::array();
    json max_error = json::object();
    std::ostringstream csv;
    csv << "index,side";
    for (const auto& name : parameter_names())
        csv << ',' << name;
    csv << ",pair,rel_error,tolerance,pass\n";

    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const CaseResult& r = results[i];
        case_list.push_back(r.record);
        if (!r.record["pass"].get<bool>())
            ++out.failures;
        for (const Check& c : r.checks) {
            const double e = std::isnan(c.error) ? c.error : round3(c.error);
            if (!max_error.contains(c.pair) || std::isnan(e) ||
                (!max_error[c.pair].is_null() && e > max_error[c.pair].get<double>()))
                max_error[c.pair] = std::isnan(e) ? json(nullptr) : json(e);
            csv << jobs[i].gc->index << ',' << side_name(jobs[i].side);
            for (const auto& name : parameter_names())
                csv << ',' << csv_value(parameter_value(jobs[i].gc->point, name));
            csv << ',' << c.pair << ',' << (std::isnan(c.error) ? std::string("nan") : format_g("%.2e", c.error))
                << ',' << format_g("%.17g", c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
        }
    }
    out.cases = static_cast<int>(jobs.size());

    json warnings = json::array();
    if (jobs.empty())
        warnings.push_back("no admissible cases in grid");

    json audit = {{"enabled", grid.audit_printed}};
    if (grid.audit_printed) {
        json mismatches = json::array();
        int checked = 0, skipped_forms = 0;
        for (const GridCase& gc : cases) {
            const AuditResult a = audit_printed_forms(gc.point);
            checked += a.checked;
            skipped_forms += a.skipped;
            for (const AuditEntry& e : a.entries) {
                json item = {{"case", gc.index},
                             {"form", e.form},
                             {"statement", e.statement},
                             {"derived", complex_json(e.derived)}};
                if (e.error.empty()) {
                    item["printed"] = complex_json(e.printed);
                    item["rel_error"] = round3(e.rel_error);
                } else {
                    item["error"] = e.error;
                }
                mismatches.push_back(item);
            }
        }
        audit["checked"] = checked;
        audit["skipped"] = skipped_forms;
        audit["mismatches"] = mismatches;
    }

    out.report = {{"config",
                   {{"quad_nodes", cfg.quad_nodes},
                    {"seed", cfg.seed},
                    {"series_tolerance", cfg.series_tolerance},
                    {"quadrature_tolerance", cfg.quadrature_tolerance},
                    {"max_terms", cfg.max_terms}}},
                  {"cases", case_list},
                  {"summary",
                   {{"cases", out.cases},
                    {"failures", out.failures},
                    {"skipped_inadmissible", skipped},
                    {"max_error", max_error},
                    {"warnings", warnings}}},
                  {"audit", audit}};
    out.csv = csv.str();
    return out;
}

std::string render_report(const nlohmann::json& report, const std::string& timestamp)
{
    nlohmann::json copy = report;
    copy["generated_at"] = timestamp;
    return copy.dump(2) + "\n";
}

} // namespace msm
