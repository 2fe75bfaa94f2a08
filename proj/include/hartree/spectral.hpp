#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hartree/grid.hpp"

namespace hartree {

// Diagonal Fourier multiplier m(xi) applied through the trigonometric
// interpolant of f.  The cell-centered sampling only shifts per-mode phases,
// which commute with diagonal multipliers, so no phase bookkeeping is needed.
using Multiplier = std::function<std::complex<double>(const std::array<double, 3>&)>;

GridFunction multiplier_apply(const GridFunction& f, const Multiplier& m);

// (-Delta)^{s/2}: multiplier |xi|^s, zero mode annihilated for s != 0.
GridFunction fractional_laplacian(const GridFunction& f, double s);
// (1-Delta)^{s/2}: multiplier (1+|xi|^2)^{s/2}; pass -s to invert.
GridFunction bessel_potential(const GridFunction& f, double s);
// Free Schrodinger flow e^{it Delta}: multiplier e^{-i t |xi|^2}.
GridFunction free_propagator(const GridFunction& f, double t);

// Riesz potential I_alpha * f on the periodic grid, computed with 2x zero
// padding per axis so the convolution sees the kernel on the doubled box
// instead of its periodization.  The kernel c |x|^{alpha-n} with
// c = Gamma((n-alpha)/2) / (Gamma(alpha/2) pi^{n/2} 2^alpha) has Fourier
// transform exactly |xi|^{-alpha}, so the multiplier carries no constant.
// The zero mode is annihilated (the output is the mean-free convolution).
struct RieszOperator {
    int dim;
    double alpha;
    double constant;  // kernel normalization, for direct-space cross-checks

    RieszOperator(int dim_, double alpha_);
    GridFunction apply(const GridFunction& f) const;
    // Real fast path (r2c/c2r) used by the solver for densities.
    std::vector<double> apply_real(const std::vector<double>& rho, const GridSpec& g) const;
};

double riesz_constant(int dim, double alpha);

// Direct real-space quadrature of c_{n,alpha} \int f(y) |x-y|^{alpha-n} dy
// over the box (free-space sum, no periodization), the oracle RieszOperator
// is checked against.  Far cells use the midpoint weight h^n |x-y|^{alpha-n};
// every cell with sup-norm offset <= near_radius (the singular self cell
// included) integrates the kernel over the cell through the divergence
// identity div(y |y|^{alpha-n}) = alpha |y|^{alpha-n}, which turns the cell
// weight into six face integrals with bounded integrands, each evaluated by
// 2-D midpoint with face_points^2 nodes.  O(N^6) work — dim == 3 only, small
// grids only.  The output is the plain convolution; compare mean-free
// against the operator, whose zero-mode policy removes the DC part.
GridFunction riesz_quadrature(const GridFunction& f, double alpha, int near_radius = 2,
                              int face_points = 48);

// Cell weight used by riesz_quadrature: \int_cell |y|^{alpha-3} dy for the
// h-cube centered at d.  Exposed for the closed-form scaling check
// w(0, h) = h^alpha w(0, 1).
double riesz_cell_weight(const std::array<double, 3>& d, double h, double alpha,
                         int face_points = 48);

// Same quadrature with the integrand sampled analytically on a refine-times
// finer lattice (refine odd, so the coarse cell centers are refined cell
// centers), which removes the cell-constant-profile error that dominates the
// plain version.  Output is evaluated at the cells of `out` only.
GridFunction riesz_quadrature_sampled(const GridSpec& out,
                                      const std::function<double(const std::array<double, 3>&)>& bump,
                                      double alpha, int refine = 3, int near_radius = 2,
                                      int face_points = 48);

// Sobolev norms via Plancherel on the grid.
double hs_norm(const GridFunction& f, double s);      // (1+|xi|^2)^{s/2} weight
double hs_dot_norm(const GridFunction& f, double s);  // |xi|^s weight

// Sobolev-Lorentz norms W^s_{r,2} / \dot W^s_{r,2} (Bessel or Riesz
// derivative measured in L^{r,2}).
double sobolev_lorentz_norm(const GridFunction& f, double s, double r, bool homogeneous);

struct NormSuite {
    double l2 = 0.0;
    double hs = 0.0;
    double hs_dot = 0.0;
    double lorentz_r2 = 0.0;  // L^{r,2}
    double wsr2 = 0.0;        // W^s_{r,2}
    double wsr2_dot = 0.0;    // \dot W^s_{r,2}
};

NormSuite norm_suite(const GridFunction& f, double s, double r);

// L^q in time of sampled spatial norms on a uniform time grid (trapezoid in
// t); q may be infinity, which returns the max.  samples[i] is the norm at
// t = i*dt; the window is [0, (samples.size()-1)*dt].
double spacetime_norm(const std::vector<double>& samples, double dt, double q);

// Binary snapshot: header dims(u32) N(u32) L(f64), then interleaved re/im
// doubles in grid order, all little-endian.
void save_snapshot(const std::string& path, const GridFunction& f);
GridFunction load_snapshot(const std::string& path);

}  // namespace hartree
