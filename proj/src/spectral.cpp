#include "hartree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "hartree/fft.hpp"
#include "hartree/lorentz.hpp"

namespace hartree {

namespace {

std::vector<double> freq_table(const GridSpec& g) {
    std::vector<double> xi(static_cast<std::size_t>(g.points));
    for (int k = 0; k < g.points; ++k) xi[static_cast<std::size_t>(k)] = g.freq(k);
    return xi;
}

// Iterate the (full) spectral lattice in storage order; inactive axes sit at
// index 0 where the frequency is exactly 0.
template <typename Fn>
void for_each_mode(const GridSpec& g, Fn&& fn) {
    const auto xi = freq_table(g);
    const int n = g.points, d = g.dim;
    const int na = d >= 1 ? n : 1, nb = d >= 2 ? n : 1, nc = d >= 3 ? n : 1;
    std::size_t i = 0;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            for (int c = 0; c < nc; ++c) fn(i++, std::array<double, 3>{xi[static_cast<std::size_t>(a)],
                                                                       nb > 1 ? xi[static_cast<std::size_t>(b)] : 0.0,
                                                                       nc > 1 ? xi[static_cast<std::size_t>(c)] : 0.0});
}

// Copy f into the doubled box [-2L, 2L)^d.  Cell centers line up exactly:
// the source cell j maps to padded cell j + N/2 on every active axis.
template <typename T>
std::vector<T> embed_padded(const std::vector<T>& src, const GridSpec& g, const GridSpec& pg) {
    std::vector<T> pad(pg.total(), T{});
    const int n = g.points, off = g.points / 2, d = g.dim;
    const int na = d >= 1 ? n : 1, nb = d >= 2 ? n : 1, nc = d >= 3 ? n : 1;
    std::size_t i = 0;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            for (int c = 0; c < nc; ++c)
                pad[pg.pack({a + off, b + off, c + off})] = src[i++];
    return pad;
}

template <typename T>
std::vector<T> extract_center(const std::vector<T>& pad, const GridSpec& g, const GridSpec& pg) {
    std::vector<T> out(g.total());
    const int n = g.points, off = g.points / 2, d = g.dim;
    const int na = d >= 1 ? n : 1, nb = d >= 2 ? n : 1, nc = d >= 3 ? n : 1;
    std::size_t i = 0;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            for (int c = 0; c < nc; ++c) out[i++] = pad[pg.pack({a + off, b + off, c + off})];
    return out;
}

double sq(double x) { return x * x; }

}  // namespace

GridFunction multiplier_apply(const GridFunction& f, const Multiplier& m) {
    GridFunction out = f;
    fft::forward(f.grid.dim, f.grid.points, out.values.data());
    for_each_mode(f.grid, [&](std::size_t i, const std::array<double, 3>& xi) { out.values[i] *= m(xi); });
    fft::inverse(f.grid.dim, f.grid.points, out.values.data());
    return out;
}

GridFunction fractional_laplacian(const GridFunction& f, double s) {
    return multiplier_apply(f, [s](const std::array<double, 3>& xi) -> std::complex<double> {
        const double k2 = sq(xi[0]) + sq(xi[1]) + sq(xi[2]);
        if (k2 == 0.0) return s == 0.0 ? 1.0 : 0.0;
        return std::pow(k2, 0.5 * s);
    });
}

GridFunction bessel_potential(const GridFunction& f, double s) {
    return multiplier_apply(f, [s](const std::array<double, 3>& xi) -> std::complex<double> {
        return std::pow(1.0 + sq(xi[0]) + sq(xi[1]) + sq(xi[2]), 0.5 * s);
    });
}

GridFunction free_propagator(const GridFunction& f, double t) {
    return multiplier_apply(f, [t](const std::array<double, 3>& xi) -> std::complex<double> {
        const double k2 = sq(xi[0]) + sq(xi[1]) + sq(xi[2]);
        return std::polar(1.0, -t * k2);
    });
}

double riesz_constant(int dim, double alpha) {
    if (!(alpha > 0.0) || !(alpha < dim)) throw std::invalid_argument("riesz_constant: need 0 < alpha < dim");
    const double num = std::lgamma(0.5 * (dim - alpha));
    const double den = std::lgamma(0.5 * alpha);
    return std::exp(num - den) / (std::pow(3.14159265358979323846, 0.5 * dim) * std::pow(2.0, alpha));
}

RieszOperator::RieszOperator(int dim_, double alpha_)
    : dim(dim_), alpha(alpha_), constant(riesz_constant(dim_, alpha_)) {}

GridFunction RieszOperator::apply(const GridFunction& f) const {
    if (f.grid.dim != dim) throw std::invalid_argument("RieszOperator: dimension mismatch");
    const GridSpec& g = f.grid;
    const GridSpec pg(g.dim, 2 * g.points, 2.0 * g.box);
    auto pad = embed_padded(f.values, g, pg);
    fft::forward(pg.dim, pg.points, pad.data());
    const double a = alpha;
    for_each_mode(pg, [&](std::size_t i, const std::array<double, 3>& xi) {
        const double k2 = sq(xi[0]) + sq(xi[1]) + sq(xi[2]);
        if (k2 == 0.0)
            pad[i] = 0.0;
        else
            pad[i] *= std::pow(k2, -0.5 * a);
    });
    fft::inverse(pg.dim, pg.points, pad.data());
    GridFunction out(g);
    out.values = extract_center(pad, g, pg);
    return out;
}

std::vector<double> RieszOperator::apply_real(const std::vector<double>& rho, const GridSpec& g) const {
    if (g.dim != dim) throw std::invalid_argument("RieszOperator: dimension mismatch");
    if (rho.size() != g.total()) throw std::invalid_argument("RieszOperator: field size mismatch");
    const GridSpec pg(g.dim, 2 * g.points, 2.0 * g.box);
    auto pad = embed_padded(rho, g, pg);
    std::vector<std::complex<double>> spec(fft::spectrum_size(pg.dim, pg.points));
    fft::forward_real(pg.dim, pg.points, pad.data(), spec.data());

    const int n2 = pg.points, d = pg.dim, half = n2 / 2 + 1;
    const auto xi = freq_table(pg);
    const double dxi = 3.14159265358979323846 / pg.box;
    std::size_t i = 0;
    for (int a = 0; a < (d >= 2 ? n2 : 1); ++a)
        for (int b = 0; b < (d >= 3 ? n2 : 1); ++b)
            for (int c = 0; c < half; ++c) {
                const double k2 = sq(xi[static_cast<std::size_t>(a)]) + sq(xi[static_cast<std::size_t>(b)]) + sq(dxi * c);
                if (k2 == 0.0)
                    spec[i] = 0.0;
                else
                    spec[i] *= std::pow(k2, -0.5 * alpha);
                ++i;
            }
    fft::inverse_real(pg.dim, pg.points, spec.data(), pad.data());
    return extract_center(pad, g, pg);
}

double riesz_cell_weight(const std::array<double, 3>& d, double h, double alpha,
                         int face_points) {
    if (!(h > 0.0) || face_points < 1) throw std::invalid_argument("riesz_cell_weight: bad h or face_points");
    const double half = 0.5 * h, step = h / face_points;
    long double flux = 0.0L;
    for (int axis = 0; axis < 3; ++axis) {
        const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
        for (int sgn = -1; sgn <= 1; sgn += 2) {
            // Face orthogonal to `axis`; y.n on it is the constant sgn*plane.
            const double plane = d[axis] + sgn * half;
            if (plane == 0.0) continue;
            long double face = 0.0L;
            for (int i = 0; i < face_points; ++i) {
                const double u = d[a1] - half + (i + 0.5) * step;
                for (int j = 0; j < face_points; ++j) {
                    const double v = d[a2] - half + (j + 0.5) * step;
                    face += std::pow(plane * plane + u * u + v * v, 0.5 * (alpha - 3.0));
                }
            }
            flux += sgn * plane * face * step * step;
        }
    }
    return static_cast<double>(flux) / alpha;
}

namespace {

// Integer-offset weight table for an n^3 lattice with spacing h: entry
// (dx,dy,dz), each axis in [-(n-1), n-1], holds \int_cell |y|^{alpha-3} dy
// over the h-cube centered at (dx,dy,dz)h — face quadrature near the
// singularity, midpoint beyond.
std::vector<double> riesz_weight_table(int n, double h, double alpha, int near_radius,
                                       int face_points) {
    const int m = 2 * n - 1;
    std::vector<double> wtab(static_cast<std::size_t>(m) * m * m);
    const double hn = h * h * h;
    for (int dx = -(n - 1); dx <= n - 1; ++dx)
        for (int dy = -(n - 1); dy <= n - 1; ++dy)
            for (int dz = -(n - 1); dz <= n - 1; ++dz) {
                const std::size_t idx =
                    (static_cast<std::size_t>(dx + n - 1) * m + static_cast<std::size_t>(dy + n - 1)) * m +
                    static_cast<std::size_t>(dz + n - 1);
                const int sup = std::max({std::abs(dx), std::abs(dy), std::abs(dz)});
                if (sup <= near_radius) {
                    wtab[idx] = riesz_cell_weight({dx * h, dy * h, dz * h}, h, alpha, face_points);
                } else {
                    const double r2 = (static_cast<double>(dx) * dx + static_cast<double>(dy) * dy +
                                       static_cast<double>(dz) * dz) * h * h;
                    wtab[idx] = hn * std::pow(r2, 0.5 * (alpha - 3.0));
                }
            }
    return wtab;
}

template <typename Body>
void parallel_indices(std::size_t total, Body&& body) {
    const int workers = std::max(1, std::min<int>(thread_budget(), static_cast<int>(total)));
    if (workers == 1) {
        body(std::size_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = std::min(total, static_cast<std::size_t>(w) * chunk);
        const std::size_t hi = std::min(total, lo + chunk);
        if (lo < hi) pool.emplace_back(body, lo, hi);
    }
    for (auto& t : pool) t.join();
}

}  // namespace

GridFunction riesz_quadrature(const GridFunction& f, double alpha, int near_radius,
                              int face_points) {
    const GridSpec& g = f.grid;
    if (g.dim != 3) throw std::invalid_argument("riesz_quadrature: dim == 3 only");
    if (!(alpha > 0.0) || !(alpha < 3.0)) throw std::invalid_argument("riesz_quadrature: need 0 < alpha < 3");
    const int n = g.points, m = 2 * n - 1;
    const double c = riesz_constant(3, alpha);
    const std::vector<double> wtab = riesz_weight_table(n, g.h(), alpha, near_radius, face_points);

    GridFunction out(g);
    parallel_indices(g.total(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const auto xi = g.unpack(i);
            std::complex<long double> acc = 0.0L;
            std::size_t j = 0;
            for (int jx = 0; jx < n; ++jx) {
                const std::size_t ox = static_cast<std::size_t>(xi[0] - jx + n - 1) * m;
                for (int jy = 0; jy < n; ++jy) {
                    const std::size_t oy = (ox + static_cast<std::size_t>(xi[1] - jy + n - 1)) * m;
                    // w(dz) = w(-dz), so the z row can be walked forward.
                    const double* wrow = wtab.data() + oy + static_cast<std::size_t>(n - 1 - xi[2]);
                    const std::complex<double>* frow = f.values.data() + j;
                    std::complex<double> r0 = 0.0, r1 = 0.0;
                    int jz = 0;
                    for (; jz + 2 <= n; jz += 2) {
                        r0 += frow[jz] * wrow[jz];
                        r1 += frow[jz + 1] * wrow[jz + 1];
                    }
                    for (; jz < n; ++jz) r0 += frow[jz] * wrow[jz];
                    acc += r0 + r1;
                    j += static_cast<std::size_t>(n);
                }
            }
            out.values[i] = std::complex<double>(static_cast<double>(acc.real()) * c,
                                                 static_cast<double>(acc.imag()) * c);
        }
    });
    return out;
}

GridFunction riesz_quadrature_sampled(const GridSpec& out_grid,
                                      const std::function<double(const std::array<double, 3>&)>& bump,
                                      double alpha, int refine, int near_radius,
                                      int face_points) {
    if (out_grid.dim != 3) throw std::invalid_argument("riesz_quadrature_sampled: dim == 3 only");
    if (!(alpha > 0.0) || !(alpha < 3.0))
        throw std::invalid_argument("riesz_quadrature_sampled: need 0 < alpha < 3");
    if (refine < 1 || refine % 2 == 0)
        throw std::invalid_argument("riesz_quadrature_sampled: refine must be odd");
    // The fine lattice never meets a transform, so it is plain index
    // arithmetic rather than a (power-of-two) GridSpec.
    const int n = out_grid.points * refine, m = 2 * n - 1;
    const double hf = out_grid.h() / refine, L = out_grid.box;
    const double c = riesz_constant(3, alpha);

    std::vector<double> samples(static_cast<std::size_t>(n) * n * n);
    {
        std::size_t i = 0;
        for (int jx = 0; jx < n; ++jx)
            for (int jy = 0; jy < n; ++jy)
                for (int jz = 0; jz < n; ++jz, ++i)
                    samples[i] = bump({-L + (jx + 0.5) * hf, -L + (jy + 0.5) * hf,
                                       -L + (jz + 0.5) * hf});
    }
    // The operator annihilates the DC mode of its input, so the oracle
    // convolves the mean-free part as well; a raw constant would otherwise
    // leak a position-dependent boundary term into the comparison.
    {
        long double mu = 0.0L;
        for (double v : samples) mu += v;
        const double mean = static_cast<double>(mu / static_cast<long double>(samples.size()));
        for (double& v : samples) v -= mean;
    }
    const std::vector<double> wtab = riesz_weight_table(n, hf, alpha, near_radius, face_points);

    GridFunction out(out_grid);
    const int shift = (refine - 1) / 2;  // coarse center j -> fine index refine*j + shift
    parallel_indices(out_grid.total(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            auto xi = out_grid.unpack(i);
            for (int d = 0; d < 3; ++d) xi[d] = refine * xi[d] + shift;
            long double acc = 0.0L;
            std::size_t j = 0;
            for (int jx = 0; jx < n; ++jx) {
                const std::size_t ox = static_cast<std::size_t>(xi[0] - jx + n - 1) * m;
                for (int jy = 0; jy < n; ++jy) {
                    const std::size_t oy = (ox + static_cast<std::size_t>(xi[1] - jy + n - 1)) * m;
                    // w(dz) = w(-dz), so the z row can be walked forward.
                    const double* wrow = wtab.data() + oy + static_cast<std::size_t>(n - 1 - xi[2]);
                    const double* srow = samples.data() + j;
                    double r0 = 0.0, r1 = 0.0, r2 = 0.0, r3 = 0.0;
                    int jz = 0;
                    for (; jz + 4 <= n; jz += 4) {
                        r0 += srow[jz] * wrow[jz];
                        r1 += srow[jz + 1] * wrow[jz + 1];
                        r2 += srow[jz + 2] * wrow[jz + 2];
                        r3 += srow[jz + 3] * wrow[jz + 3];
                    }
                    for (; jz < n; ++jz) r0 += srow[jz] * wrow[jz];
                    acc += (r0 + r1) + (r2 + r3);
                    j += static_cast<std::size_t>(n);
                }
            }
            out.values[i] = c * static_cast<double>(acc);
        }
    });
    return out;
}

namespace {

template <typename WeightFn>
double spectral_norm(const GridFunction& f, WeightFn&& w) {
    std::vector<std::complex<double>> spec = f.values;
    fft::forward(f.grid.dim, f.grid.points, spec.data());
    long double sum = 0.0L;
    for_each_mode(f.grid, [&](std::size_t i, const std::array<double, 3>& xi) {
        const double k2 = sq(xi[0]) + sq(xi[1]) + sq(xi[2]);
        sum += static_cast<long double>(w(k2) * std::norm(spec[i]));
    });
    const double scale = f.grid.cell_measure() / static_cast<double>(f.grid.total());
    return std::sqrt(scale * static_cast<double>(sum));
}

}  // namespace

double hs_norm(const GridFunction& f, double s) {
    return spectral_norm(f, [s](double k2) { return std::pow(1.0 + k2, s); });
}

double hs_dot_norm(const GridFunction& f, double s) {
    return spectral_norm(f, [s](double k2) {
        if (k2 == 0.0) return s == 0.0 ? 1.0 : 0.0;
        return std::pow(k2, s);
    });
}

double sobolev_lorentz_norm(const GridFunction& f, double s, double r, bool homogeneous) {
    GridFunction der = homogeneous ? fractional_laplacian(f, s) : bessel_potential(f, s);
    return lorentz_norm(der, r, 2.0);
}

NormSuite norm_suite(const GridFunction& f, double s, double r) {
    NormSuite out;
    out.l2 = l2_norm(f);
    out.hs = hs_norm(f, s);
    out.hs_dot = hs_dot_norm(f, s);
    out.lorentz_r2 = lorentz_norm(f, r, 2.0);
    out.wsr2 = sobolev_lorentz_norm(f, s, r, false);
    out.wsr2_dot = sobolev_lorentz_norm(f, s, r, true);
    return out;
}

double spacetime_norm(const std::vector<double>& samples, double dt, double q) {
    if (samples.empty()) throw std::invalid_argument("spacetime_norm: no samples");
    if (!(q > 0.0)) throw std::invalid_argument("spacetime_norm: q must be positive");
    if (std::isinf(q)) {
        double m = 0.0;
        for (double v : samples) m = std::max(m, v);
        return m;
    }
    if (!(dt > 0.0)) throw std::invalid_argument("spacetime_norm: dt must be positive");
    long double sum = 0.0L;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double w = (i == 0 || i + 1 == samples.size()) ? 0.5 : 1.0;
        sum += static_cast<long double>(w * std::pow(samples[i], q));
    }
    return std::pow(static_cast<double>(sum) * dt, 1.0 / q);
}

void save_snapshot(const std::string& path, const GridFunction& f) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("save_snapshot: cannot open " + tmp);
        const std::uint32_t dims = static_cast<std::uint32_t>(f.grid.dim);
        const std::uint32_t n = static_cast<std::uint32_t>(f.grid.points);
        const double box = f.grid.box;
        out.write(reinterpret_cast<const char*>(&dims), 4);
        out.write(reinterpret_cast<const char*>(&n), 4);
        out.write(reinterpret_cast<const char*>(&box), 8);
        for (const auto& v : f.values) {
            const double re = v.real(), im = v.imag();
            out.write(reinterpret_cast<const char*>(&re), 8);
            out.write(reinterpret_cast<const char*>(&im), 8);
        }
        if (!out) throw std::runtime_error("save_snapshot: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("save_snapshot: rename failed for " + path);
}

GridFunction load_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_snapshot: cannot open " + path);
    std::uint32_t dims = 0, n = 0;
    double box = 0.0;
    in.read(reinterpret_cast<char*>(&dims), 4);
    in.read(reinterpret_cast<char*>(&n), 4);
    in.read(reinterpret_cast<char*>(&box), 8);
    if (!in) throw std::runtime_error("load_snapshot: truncated header in " + path);
    GridFunction f(GridSpec(static_cast<int>(dims), static_cast<int>(n), box));
    for (auto& v : f.values) {
        double re = 0.0, im = 0.0;
        in.read(reinterpret_cast<char*>(&re), 8);
        in.read(reinterpret_cast<char*>(&im), 8);
        v = {re, im};
    }
    if (!in) throw std::runtime_error("load_snapshot: truncated payload in " + path);
    return f;
}

}  // namespace hartree
