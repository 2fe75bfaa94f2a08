#pragma once

#include <vector>

#include "hartree/exponents.hpp"
#include "hartree/grid.hpp"
#include "hartree/sim.hpp"

namespace hartree {

// Scattering diagnostic: evolve u0, pull each checkpoint state back with the
// free group, and watch w_t = e^{-it Lap} u(t) settle.  The Cauchy column is
// ||w_{t_{m+1}} - w_{t_m}||_{H^s}; phi is w at the last checkpoint and the
// residual column is ||u(t_m) - e^{i t_m Lap} phi||_{H^s}.

struct ScatterConfig {
    double dt = 0.02;
    std::vector<double> checkpoints = {0.5, 1.0, 2.0, 4.0};  // multiples of dt
    double shell_frac = 0.125;  // boundary shell width, as a fraction of L
};

struct ScatterReport {
    std::vector<double> times;
    std::vector<double> cauchy;         // size times-1
    std::vector<double> residual;       // size times
    std::vector<double> boundary_frac;  // shell mass fraction per checkpoint
    double horizon = 0.0;               // recurrence estimate L/(4 v_eff)
    bool horizon_limited = false;       // some shell fraction exceeded 1%
    bool cauchy_decreasing = false;     // the scattering signature
    GridFunction phi;

    // True when the interval behind cauchy[m] ends before the horizon.
    bool pair_within_horizon(std::size_t m) const {
        return m + 1 < times.size() && times[m + 1] <= horizon;
    }
};

ScatterReport scattering_diagnostic(const GridFunction& u0, const ScatterConfig& cfg,
                                    const EquationParams& eq);

// Strichartz diagnostic over the Gaussian dilation family f_delta = f(x/delta):
// homogeneous ratio ||e^{it Lap} f||_{L^q_t W^s_{r,2}} / ||f||_{H^s} and the
// inhomogeneous ratio for the transported forcing F(tau) = e^{i tau Lap} f,
// whose Duhamel integral is evaluated by the same trapezoid transport the
// Picard map uses and measured against ||F|| in the conjugate exponents.
// Each rung's window is the base window rescaled parabolically (delta^2 T0)
// and sampled at matched nodes, so in the continuum both ratios are exactly
// dilation-invariant for an admissible pair.

struct StrichartzConfig {
    double T0 = 1.0;     // base time window
    int samples = 33;    // time samples per window
    double sigma = 2.0;  // base Gaussian width
};

struct StrichartzRung {
    double delta = 1.0;
    double homo_ratio = 0.0;
    double inho_ratio = 0.0;
};

struct StrichartzReport {
    AdmissiblePair pair;
    double s = 0.0;
    std::vector<StrichartzRung> rungs;
    double homo_variation = 0.0;  // max/min over the ladder
    double inho_variation = 0.0;
};

// Throws if the pair fails the exact admissibility check for n = g.dim.
StrichartzReport strichartz_diagnostic(const GridSpec& g, const AdmissiblePair& pair, double s,
                                       const StrichartzConfig& cfg);

}  // namespace hartree
