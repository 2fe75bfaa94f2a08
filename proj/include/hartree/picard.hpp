#pragma once

#include <vector>

#include "hartree/grid.hpp"
#include "hartree/sim.hpp"

namespace hartree {

// Discrete Duhamel / Picard machinery on equispaced quadrature nodes
// tau_j = j T/nodes, j = 0..nodes.  The map
//   Phi(u)(t) = e^{it Lap} u0 - i int_0^t e^{i(t-tau) Lap} F(u(tau)) dtau
// is evaluated by trapezoid quadrature with propagator transport, and the
// iteration distances are measured in the L^q_t L^{r,2}_x metric (trapezoid
// in t over the same nodes).

struct PicardConfig {
    double T = 0.5;     // horizon
    int nodes = 16;     // quadrature intervals
    int max_iter = 12;  // iteration cap (>= 3)
    double q = 4.0;     // time exponent of the contraction metric
    double r = 3.0;     // Lorentz first index of the contraction metric
    double sim_dt = 0.0;  // when > 0, compare the fixed point against simulate
    double tol = 0.0;     // early stop once d_k < tol (0 -> 1e-13 * eps scale)
};

struct PicardReport {
    std::vector<double> d;       // d_k = d(u^{k+1}, u^k) in L^q_t L^{r,2}
    std::vector<double> d_sup;   // companion sup-over-nodes L^{r,2} distance
    std::vector<double> ratios;  // d_{k+1} / d_k
    int iterations = 0;

    double strichartz_ratio = 0.0;  // ||free||_{L^q W^s_{r,2}} / ||u0||_{H^s}
    double eps = 0.0;               // ||e^{it Lap} u0||_{L^q W^s_{r,2}}
    double ball_M = 0.0;            // 2 C ||u0||_{H^s} with the measured C
    double ball_N = 0.0;            // 2 eps
    bool in_ball_M = false;         // sup-in-t H^s of the last iterate <= M
    bool in_ball_N = false;         // L^q_t W^s_{r,2} of the last iterate <= N
    bool diverged = false;          // ratio > 1 three times running (or blowup)

    double T = 0.0;       // context echoed for divergence logs
    double u0_hs = 0.0;
    double sim_mismatch = -1.0;  // rel L^2 vs simulate at t = T (when run)
};

// Free flow sampled at the nodes: j -> e^{i tau_j Lap} u0.
std::vector<GridFunction> free_flow_nodes(const GridFunction& u0, double T, int nodes);

// One application of Phi to a node trajectory; result lives on the same nodes.
std::vector<GridFunction> duhamel_map(const std::vector<GridFunction>& traj,
                                      const GridFunction& u0, double T,
                                      const EquationParams& eq);

PicardReport picard_contraction(const GridFunction& u0, const PicardConfig& cfg,
                                const EquationParams& eq);

struct DependenceReport {
    std::vector<double> sizes;      // ||u0 - v0||_{H^s}
    std::vector<double> distances;  // d(u, v) in L^q_t L^{r,2}
    std::vector<double> ratios;     // distances / sizes
    double variation = 0.0;         // max ratio / min ratio
    bool stable = false;            // variation < 2
};

// Perturb u0 by each size along a fixed smooth H^s-normalized direction,
// evolve both states, and report d(u, v)/||u0 - v0||_{H^s} across the ladder.
DependenceReport continuous_dependence_check(const GridFunction& u0,
                                             const std::vector<double>& sizes,
                                             const PicardConfig& cfg,
                                             const EquationParams& eq);

}  // namespace hartree
