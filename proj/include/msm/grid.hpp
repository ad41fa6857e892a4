#pragma once

// Parameter grids for the verification harness.
//
// Format: one `key = value` per line, `#` starts a comment.
//   <param>.start / <param>.stop / <param>.count   linear axis
//   fixed.<param> = re[,im]                        fixed value
//   sides = left,right
//   random.count = N                               extra uniform draws over the axes
//   audit.printed = true|false
//   trig.check = true|false
// <param> is one of alpha alpha_p beta beta_p gamma rho p b c x.

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "msm/images.hpp"
#include "msm/printed_forms.hpp"

namespace msm {

struct GridAxis {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
};

struct GridSpec {
    std::vector<GridAxis> axes; // declaration order
    std::map<std::string, Complex> fixed;
    std::vector<Side> sides{Side::left, Side::right};
    int random_count = 0;
    bool audit_printed = false;
    bool trig_check = false;
};

struct GridCase {
    int index = 0;
    ParameterPoint point;
    bool admissible_left = false;
    bool admissible_right = false;
};

const std::vector<std::string>& parameter_names();

GridSpec parse_grid(std::istream& in);
GridSpec parse_grid_file(const std::string& path);

/// Lattice points first (first declared axis varies slowest), then the random
/// draws. Deterministic for a given seed.
std::vector<GridCase> expand_grid(const GridSpec& spec, std::uint64_t seed);

/// Value of a named parameter at a point.
Complex parameter_value(const ParameterPoint& pt, const std::string& name);

ImageRequest make_request(const ParameterPoint& pt, Side side, Representation rep);

const char* side_name(Side side);

/// Parses "re" or "re,im".
Complex parse_complex(const std::string& text);

} // namespace msm
