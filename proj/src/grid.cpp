#include "msm/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "msm/errors.hpp"

namespace msm {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& text, const std::string& key)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParseError("grid: bad number '" + text + "' for " + key);
    }
    if (used != text.size())
        throw ParseError("grid: bad number '" + text + "' for " + key);
    return v;
}

int parse_int(const std::string& text, const std::string& key)
{
    const double v = parse_double(text, key);
    if (v != std::floor(v))
        throw ParseError("grid: " + key + " must be an integer");
    return static_cast<int>(v);
}

bool parse_bool(const std::string& text, const std::string& key)
{
    if (text == "true" || text == "1")
        return true;
    if (text == "false" || text == "0")
        return false;
    throw ParseError("grid: " + key + " must be true or false");
}

bool known_parameter(const std::string& name)
{
    const auto& names = parameter_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

void set_parameter(ParameterPoint& pt, const std::string& name, Complex v)
{
    if (name == "alpha") pt.params.alpha = v;
    else if (name == "alpha_p") pt.params.alpha_p = v;
    else if (name == "beta") pt.params.beta = v;
    else if (name == "beta_p") pt.params.beta_p = v;
    else if (name == "gamma") pt.params.gamma = v;
    else if (name == "rho") pt.rho = v;
    else if (name == "p") pt.p = v;
    else if (name == "b") pt.b = v;
    else if (name == "c") pt.c = v;
    else if (name == "x") {
        if (v.imag() != 0.0)
            throw ParseError("grid: x must be real");
        pt.x = v.real();
    } else
        throw ParseError("grid: unknown parameter '" + name + "'");
}

// Uniform [0,1) from the top 53 bits; identical on every platform.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void flag(GridCase& gc)
{
    gc.admissible_left = admissible(make_request(gc.point, Side::left, Representation::wright));
    gc.admissible_right = admissible(make_request(gc.point, Side::right, Representation::wright));
}

} // namespace

const std::vector<std::string>& parameter_names()
{
    static const std::vector<std::string> names{"alpha", "alpha_p", "beta", "beta_p", "gamma",
                                                "rho",   "p",       "b",    "c",      "x"};
    return names;
}

Complex parse_complex(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        return {parse_double(trim(text), "value"), 0.0};
    return {parse_double(trim(text.substr(0, comma)), "value"),
            parse_double(trim(text.substr(comma + 1)), "value")};
}

GridSpec parse_grid(std::istream& in)
{
    GridSpec spec;
    struct Partial {
        std::optional<double> start, stop;
        std::optional<int> count;
    };
    std::vector<std::string> order;
    std::map<std::string, Partial> partial;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("grid: line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty())
            throw ParseError("grid: line " + std::to_string(line_no) + ": empty value for " + key);

        if (key == "sides") {
            spec.sides.clear();
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = trim(item);
                if (item == "left") spec.sides.push_back(Side::left);
                else if (item == "right") spec.sides.push_back(Side::right);
                else throw ParseError("grid: unknown side '" + item + "'");
            }
            continue;
        }
        if (key == "random.count") {
            spec.random_count = parse_int(value, key);
            if (spec.random_count < 0)
                throw ParseError("grid: random.count must be >= 0");
            continue;
        }
        if (key == "audit.printed") {
            spec.audit_printed = parse_bool(value, key);
            continue;
        }
        if (key == "trig.check") {
            spec.trig_check = parse_bool(value, key);
            continue;
        }
        const auto dot = key.find('.');
        if (dot == std::string::npos)
            throw ParseError("grid: line " + std::to_string(line_no) + ": unknown key " + key);
        const std::string head = key.substr(0, dot);
        const std::string tail = key.substr(dot + 1);
        if (head == "fixed") {
            if (!known_parameter(tail))
                throw ParseError("grid: unknown parameter '" + tail + "'");
            spec.fixed[tail] = parse_complex(value);
            continue;
        }
        if (!known_parameter(head))
            throw ParseError("grid: unknown parameter '" + head + "'");
        if (std::find(order.begin(), order.end(), head) == order.end())
            order.push_back(head);
        Partial& part = partial[head];
        if (tail == "start") part.start = parse_double(value, key);
        else if (tail == "stop") part.stop = parse_double(value, key);
        else if (tail == "count") part.count = parse_int(value, key);
        else if (tail == "scale") {
            if (value != "linear")
                throw ParseError("grid: only linear scale is supported");
        } else
            throw ParseError("grid: unknown axis field '" + tail + "'");
    }

    for (const auto& name : order) {
        const Partial& part = partial[name];
        if (!part.start || !part.count)
            throw ParseError("grid: axis " + name + " needs start and count");
        if (*part.count < 1)
            throw ParseError("grid: axis " + name + " needs count >= 1");
        if (*part.count > 1 && !part.stop)
            throw ParseError("grid: axis " + name + " needs stop when count > 1");
        if (spec.fixed.count(name))
            throw ParseError("grid: " + name + " is both an axis and fixed");
        spec.axes.push_back({name, *part.start, part.stop.value_or(*part.start), *part.count});
    }
    if (spec.sides.empty())
        throw ParseError("grid: sides must name at least one side");
    return spec;
}

GridSpec parse_grid_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open grid file " + path);
    return parse_grid(in);
}

std::vector<GridCase> expand_grid(const GridSpec& spec, std::uint64_t seed)
{
    ParameterPoint base;
    for (const auto& [name, v] : spec.fixed)
        set_parameter(base, name, v);

    std::vector<GridCase> out;
    std::size_t total = 1;
    for (const auto& axis : spec.axes)
        total *= static_cast<std::size_t>(axis.count);

    for (std::size_t flat = 0; flat < total; ++flat) {
        GridCase gc;
        gc.point = base;
        std::size_t rest = flat;
        for (std::size_t i = spec.axes.size(); i-- > 0;) {
            const GridAxis& axis = spec.axes[i];
            const std::size_t j = rest % static_cast<std::size_t>(axis.count);
            rest /= static_cast<std::size_t>(axis.count);
            const double v = axis.count == 1
                                 ? axis.start
                                 : axis.start + (axis.stop - axis.start) * static_cast<double>(j) /
                                                    static_cast<double>(axis.count - 1);
            set_parameter(gc.point, axis.name, v);
        }
        gc.index = static_cast<int>(out.size());
        flag(gc);
        out.push_back(gc);
    }

    std::mt19937_64 rng(seed);
    for (int r = 0; r < spec.random_count; ++r) {
        GridCase gc;
        gc.point = base;
        for (const GridAxis& axis : spec.axes)
            set_parameter(gc.point, axis.name, axis.start + (axis.stop - axis.start) * unit_draw(rng));
        gc.index = static_cast<int>(out.size());
        flag(gc);
        out.push_back(gc);
    }
    return out;
}

Complex parameter_value(const ParameterPoint& pt, const std::string& name)
{
    if (name == "alpha") return pt.params.alpha;
    if (name == "alpha_p") return pt.params.alpha_p;
    if (name == "beta") return pt.params.beta;
    if (name == "beta_p") return pt.params.beta_p;
    if (name == "gamma") return pt.params.gamma;
    if (name == "rho") return pt.rho;
    if (name == "p") return pt.p;
    if (name == "b") return pt.b;
    if (name == "c") return pt.c;
    if (name == "x") return pt.x;
    throw ParseError("unknown parameter '" + name + "'");
}

ImageRequest make_request(const ParameterPoint& pt, Side side, Representation rep)
{
    ImageRequest req;
    req.params = pt.params;
    req.rho = pt.rho;
    req.bessel = BesselParams(pt.p, pt.b, pt.c);
    req.x = pt.x;
    req.side = side;
    req.representation = rep;
    return req;
}

const char* side_name(Side side) { return side == Side::left ? "left" : "right"; }

} // namespace msm
