#pragma once

#include <complex>
#include <random>

#include "msm/gamma.hpp"

namespace testing {

using msm::Complex;

inline double rel_err(Complex a, Complex b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Fixed-seed generator shared by the property tests.
class Draw {
public:
    explicit Draw(unsigned long long seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    Complex complex(double lo, double hi, double im) { return {uniform(lo, hi), uniform(-im, im)}; }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

} // namespace testing
