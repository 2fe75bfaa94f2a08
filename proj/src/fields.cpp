#include "hartree/fields.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "hartree/fft.hpp"

namespace hartree {

namespace {

double dist2(const std::array<double, 3>& x, const std::array<double, 3>& c, int dim) {
    double s = 0.0;
    for (int d = 0; d < dim; ++d) s += (x[d] - c[d]) * (x[d] - c[d]);
    return s;
}

// Uniform double in [0, 1) from raw engine output; implementation-defined
// distributions are avoided so streams are identical across toolchains.
double unit_uniform(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

GridFunction gaussian_field(const GridSpec& g, double sigma, double amp,
                            std::array<double, 3> center, std::array<double, 3> wave) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_field: sigma must be positive");
    GridFunction f(g);
    const double inv = 1.0 / (2.0 * sigma * sigma);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto x = g.point(i);
        double phase = 0.0;
        for (int d = 0; d < g.dim; ++d) phase += wave[d] * x[d];
        f[i] = std::polar(amp * std::exp(-dist2(x, center, g.dim) * inv), phase);
    }
    return f;
}

GridFunction ball_indicator(const GridSpec& g, double radius, std::array<double, 3> center) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball_indicator: radius must be positive");
    GridFunction f(g);
    const double r2 = radius * radius;
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = dist2(g.point(i), center, g.dim) <= r2 ? 1.0 : 0.0;
    return f;
}

GridFunction power_field(const GridSpec& g, double gamma) {
    GridFunction f(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto x = g.point(i);
        f[i] = std::pow(std::sqrt(dist2(x, {0.0, 0.0, 0.0}, g.dim)), -gamma);
    }
    return f;
}

GridFunction truncated_power_field(const GridSpec& g, double gamma, double cap) {
    if (!(cap > 0.0)) throw std::invalid_argument("truncated_power_field: cap must be positive");
    GridFunction f = power_field(g, gamma);
    for (auto& v : f.values) v = std::min(v.real(), cap);
    return f;
}

std::vector<double> power_weight(const GridSpec& g, double b) {
    std::vector<double> w(g.total());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto x = g.point(i);
        w[i] = std::pow(std::sqrt(dist2(x, {0.0, 0.0, 0.0}, g.dim)), -b);
    }
    return w;
}

GridFunction band_limited_random(const GridSpec& g, int band, std::uint64_t seed) {
    if (band < 0 || band > g.points / 2) throw std::invalid_argument("band_limited_random: bad band");
    std::mt19937_64 gen(seed);
    GridFunction f(g);
    const int n = g.points, d = g.dim;
    const int na = d >= 1 ? n : 1, nb = d >= 2 ? n : 1, nc = d >= 3 ? n : 1;
    std::size_t i = 0;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            for (int c = 0; c < nc; ++c) {
                const int ka = std::abs(g.signed_index(a));
                const int kb = nb > 1 ? std::abs(g.signed_index(b)) : 0;
                const int kc = nc > 1 ? std::abs(g.signed_index(c)) : 0;
                if (std::max({ka, kb, kc}) <= band) {
                    // Draw in lattice order so the field is seed-deterministic.
                    const double re = 2.0 * unit_uniform(gen) - 1.0;
                    const double im = 2.0 * unit_uniform(gen) - 1.0;
                    f[i] = {re, im};
                }
                ++i;
            }
    fft::inverse(d, n, f.values.data());
    // Normalize to unit L^2 so amplitudes are comparable across seeds.
    const double nrm = l2_norm(f);
    if (nrm > 0.0)
        for (auto& v : f.values) v /= nrm;
    return f;
}

GridFunction spectral_truncate(const GridFunction& f, int band) {
    GridFunction out = f;
    const GridSpec& g = f.grid;
    fft::forward(g.dim, g.points, out.values.data());
    const int n = g.points, d = g.dim;
    const int na = d >= 1 ? n : 1, nb = d >= 2 ? n : 1, nc = d >= 3 ? n : 1;
    std::size_t i = 0;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            for (int c = 0; c < nc; ++c) {
                const int ka = std::abs(g.signed_index(a));
                const int kb = nb > 1 ? std::abs(g.signed_index(b)) : 0;
                const int kc = nc > 1 ? std::abs(g.signed_index(c)) : 0;
                if (std::max({ka, kb, kc}) > band) out[i] = 0.0;
                ++i;
            }
    fft::inverse(g.dim, g.points, out.values.data());
    return out;
}

GridFunction mean_free_gaussian(const GridSpec& g, double sigma_inner, double sigma_outer) {
    if (!(sigma_inner > 0.0) || !(sigma_outer > sigma_inner))
        throw std::invalid_argument("mean_free_gaussian: need 0 < sigma_inner < sigma_outer");
    GridFunction f(g);
    // Bulk normalization matches continuum masses; the residual discrete mean
    // (boundary truncation + quadrature) is then removed exactly.
    const double ratio = std::pow(sigma_inner / sigma_outer, g.dim);
    const double wi = 1.0 / (2.0 * sigma_inner * sigma_inner);
    const double wo = 1.0 / (2.0 * sigma_outer * sigma_outer);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double r2 = dist2(g.point(i), {0.0, 0.0, 0.0}, g.dim);
        f[i] = std::exp(-r2 * wi) - ratio * std::exp(-r2 * wo);
    }
    std::complex<double> mean = 0.0;
    for (const auto& v : f.values) mean += v;
    mean /= static_cast<double>(f.size());
    for (auto& v : f.values) v -= mean;
    return f;
}

std::vector<TestField> inequality_family(const GridSpec& g, std::uint64_t seed) {
    std::vector<TestField> fam;
    fam.push_back({"gauss-narrow", gaussian_field(g, 0.35 * g.box / 4.0, 1.0)});
    fam.push_back({"gauss-wide", gaussian_field(g, 1.1 * g.box / 4.0, 1.0)});
    fam.push_back({"gauss-offset", gaussian_field(g, 0.6 * g.box / 4.0, 1.0,
                                                  {0.3 * g.box, -0.2 * g.box, 0.1 * g.box})});
    fam.push_back({"gauss-modulated", gaussian_field(g, 0.8 * g.box / 4.0, 1.0, {0.0, 0.0, 0.0},
                                                     {2.5 / g.box, -1.5 / g.box, 0.5 / g.box})});
    fam.push_back({"ball", ball_indicator(g, 0.45 * g.box)});
    fam.push_back({"ball-offset", ball_indicator(g, 0.3 * g.box, {0.25 * g.box, 0.15 * g.box, 0.0})});
    fam.push_back({"random-band", band_limited_random(g, g.points / 8, seed)});
    fam.push_back({"random-band-2", band_limited_random(g, g.points / 4, seed + 1)});
    fam.push_back({"mean-free", mean_free_gaussian(g, 0.3 * g.box / 2.0, 0.55 * g.box / 2.0)});
    return fam;
}

std::vector<double> dilation_ladder() { return {0.5, 1.0, 2.0}; }

}  // namespace hartree
