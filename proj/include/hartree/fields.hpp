#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hartree/grid.hpp"

namespace hartree {

// Modulated Gaussian amp * exp(-|x-c|^2/(2 sigma^2)) * exp(i k.x).
GridFunction gaussian_field(const GridSpec& g, double sigma, double amp = 1.0,
                            std::array<double, 3> center = {0.0, 0.0, 0.0},
                            std::array<double, 3> wave = {0.0, 0.0, 0.0});

// Indicator of the ball |x - c| <= radius (value 1 inside, 0 outside).
GridFunction ball_indicator(const GridSpec& g, double radius,
                            std::array<double, 3> center = {0.0, 0.0, 0.0});

// |x|^{-gamma} sampled at cell centers (finite: no center hits the origin).
GridFunction power_field(const GridSpec& g, double gamma);

// min(|x|^{-gamma}, cap): the height truncation keeps the profile resolvable
// near the origin, where raw point samples over-weight the innermost cells.
GridFunction truncated_power_field(const GridSpec& g, double gamma, double cap);

// Real weight |x|^{-b} as a plain array, for the solver.
std::vector<double> power_weight(const GridSpec& g, double b);

// Complex field with independent pseudo-random spectral coefficients on the
// modes with max_axis |k~| <= band, zero elsewhere.  Deterministic in seed.
GridFunction band_limited_random(const GridSpec& g, int band, std::uint64_t seed);

// Zero every mode with max_axis |k~| > band.
GridFunction spectral_truncate(const GridFunction& f, int band);

// Difference of two bulk-normalized Gaussians with its discrete mean removed
// exactly; the natural mean-free input for Riesz-potential comparisons.
GridFunction mean_free_gaussian(const GridSpec& g, double sigma_inner, double sigma_outer);

// Fixed test-function family used by the inequality harness; the version tag
// names the manifest so reports stay comparable across runs.
inline constexpr const char* kFieldFamilyVersion = "fields-v1";

struct TestField {
    std::string name;
    GridFunction f;
};

std::vector<TestField> inequality_family(const GridSpec& g, std::uint64_t seed);

// Dilation ladder shared by the covariance checks.
std::vector<double> dilation_ladder();

}  // namespace hartree
