#pragma once

#include <vector>

#include "hartree/exponents.hpp"
#include "hartree/grid.hpp"
#include "hartree/spectral.hpp"

namespace hartree {

// Grid-ready bundle for i u_t + Lap u = lambda (I_a * |x|^-b |u|^p) |x|^-b |u|^{p-2} u:
// the exact parameter point, its double caches, the precomputed singular
// weight at the (origin-offset) cell centers, and the padded Riesz operator.
struct EquationParams {
    ParameterPoint point;
    GridSpec grid;
    double lambda = 1.0;
    double p = 2.0;
    double b = 0.0;
    double s = 0.0;
    std::vector<double> weight;  // |x|^{-b}, finite on the offset grid
    RieszOperator riesz;

    EquationParams(const ParameterPoint& pt, const GridSpec& g);
};

struct SimState {
    GridFunction u;
    double t = 0.0;
};

// V(u) = lambda (I_a * (|x|^-b |u|^p)) |x|^-b |u|^{p-2}, real by construction;
// the p = 2 case needs no |u|^{p-2} factor and 0^{p-2} * 0 is taken as 0.
std::vector<double> potential(const GridFunction& u, const EquationParams& eq);
// F(u) = V(u) u.
GridFunction nonlinearity(const GridFunction& u, const EquationParams& eq);

double mass(const GridFunction& u);  // ||u||_{L^2}^2
// E = 1/2 ||grad u||^2 + (lambda/2p) <I_a * rho, rho>, rho = |x|^-b |u|^p.
double energy(const GridFunction& u, const EquationParams& eq);

// One Strang step: half-kick e^{-i dt/2 V}, full drift e^{i dt Lap}, half-kick.
// Works for either sign of dt (each sub-step is invertible).
SimState strang_step(const SimState& st, double dt, const EquationParams& eq);

struct TrajectoryRow {
    double t = 0.0;
    double mass = 0.0;
    double energy = 0.0;
    double hs = 0.0;
    double hs_dot = 0.0;
    double lorentz_r2 = 0.0;
    double wsr2 = 0.0;
};

struct Trajectory {
    std::vector<TrajectoryRow> rows;
    std::vector<SimState> snapshots;  // populated when requested
    SimState final_state;
};

struct SimOptions {
    double dt = 1e-3;
    long steps = 1000;
    long checkpoint_every = 0;       // also record every k-th step when > 0
    std::vector<long> checkpoints;   // extra explicit steps; 0 and `steps` always recorded
    bool store_snapshots = false;
    double r = 3.0;                  // Lorentz first index for the diagnostics
    long tail_check_every = 16;      // spectral-tail / finiteness monitor cadence
};

// Merged-kick Strang evolution: one potential evaluation per step, with the
// true (half-kick) state materialized at every recorded checkpoint.
Trajectory simulate(const GridFunction& u0, const EquationParams& eq, const SimOptions& opt);

// u_delta(x, t) = delta^kappa u(delta x, delta^2 t) with kappa = (2-2b+a)/(2(p-1)):
// run the original data to delta^2 t on the (N, L) grid and the dilated data
// to t on the matched (N, L/delta) grid, where dilation is exact sample
// relabeling; report the relative L^2 mismatch and the Hdot^{s_c} data ratio.
struct ScalingReport {
    int delta = 1;
    double t = 0.0;
    double dt = 0.0;
    double hs_c_ratio = 0.0;
    double mismatch_rel_l2 = 0.0;
};

ScalingReport scaling_covariance_check(const GridFunction& u0, int delta, const EquationParams& eq,
                                       double t, double dt);

}  // namespace hartree
