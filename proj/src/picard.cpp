#include "hartree/picard.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <utility>

#include "hartree/fields.hpp"
#include "hartree/lorentz.hpp"
#include "hartree/spectral.hpp"

namespace hartree {

namespace {

void validate(const PicardConfig& cfg) {
    if (!(cfg.T > 0.0)) throw std::invalid_argument("picard: T must be positive");
    if (cfg.nodes < 2) throw std::invalid_argument("picard: need at least two intervals");
    if (cfg.max_iter < 3) throw std::invalid_argument("picard: iteration cap below 3");
    if (!(cfg.q >= 1.0) || !(cfg.r > 1.0))
        throw std::invalid_argument("picard: bad metric exponents");
}

struct NodeDistance {
    double metric = 0.0;
    double sup = 0.0;
};

// d(a, b) over the shared nodes: trapezoid L^q_t of the L^{r,2} distance,
// with the plain sup over nodes kept alongside.
NodeDistance node_distance(const std::vector<GridFunction>& a, const std::vector<GridFunction>& b,
                           double dtau, double q, double r) {
    std::vector<double> vals(a.size());
    double sup = 0.0;
    GridFunction diff(a[0].grid);
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = a[j][i] - b[j][i];
        vals[j] = lorentz_norm(diff, r, 2.0);
        sup = std::max(sup, vals[j]);
    }
    return {spacetime_norm(vals, dtau, q), sup};
}

}  // namespace

std::vector<GridFunction> free_flow_nodes(const GridFunction& u0, double T, int nodes) {
    if (!(T > 0.0) || nodes < 1) throw std::invalid_argument("free_flow_nodes: bad horizon");
    const double dtau = T / nodes;
    std::vector<GridFunction> out;
    out.reserve(nodes + 1);
    out.push_back(u0);
    for (int j = 1; j <= nodes; ++j) out.push_back(free_propagator(out.back(), dtau));
    return out;
}

std::vector<GridFunction> duhamel_map(const std::vector<GridFunction>& traj,
                                      const GridFunction& u0, double T,
                                      const EquationParams& eq) {
    if (traj.size() < 2) throw std::invalid_argument("duhamel_map: need node snapshots");
    if (u0.grid != eq.grid) throw std::invalid_argument("duhamel_map: grid mismatch");
    for (const auto& f : traj)
        if (f.grid != eq.grid) throw std::invalid_argument("duhamel_map: grid mismatch");
    const int nodes = static_cast<int>(traj.size()) - 1;
    const double dtau = T / nodes;
    const std::complex<double> mi(0.0, -1.0);

    std::vector<GridFunction> out;
    out.reserve(traj.size());
    out.push_back(u0);  // Phi(u)(0) = u0

    GridFunction integral(eq.grid);  // transported running trapezoid
    GridFunction free = u0;
    GridFunction f_prev = nonlinearity(traj[0], eq);
    for (int j = 1; j <= nodes; ++j) {
        for (std::size_t i = 0; i < integral.size(); ++i)
            integral[i] += 0.5 * dtau * f_prev[i];
        integral = free_propagator(integral, dtau);
        GridFunction f_cur = nonlinearity(traj[j], eq);
        for (std::size_t i = 0; i < integral.size(); ++i) integral[i] += 0.5 * dtau * f_cur[i];
        free = free_propagator(free, dtau);
        GridFunction phi = free;
        for (std::size_t i = 0; i < phi.size(); ++i) phi[i] += mi * integral[i];
        out.push_back(std::move(phi));
        f_prev = std::move(f_cur);
    }
    return out;
}

PicardReport picard_contraction(const GridFunction& u0, const PicardConfig& cfg,
                                const EquationParams& eq) {
    validate(cfg);
    if (u0.grid != eq.grid) throw std::invalid_argument("picard: grid mismatch");

    PicardReport rep;
    rep.T = cfg.T;
    rep.u0_hs = hs_norm(u0, eq.s);
    const double dtau = cfg.T / cfg.nodes;

    auto free_nodes = free_flow_nodes(u0, cfg.T, cfg.nodes);
    std::vector<double> wvals(free_nodes.size());
    double sup_free = 0.0;
    for (std::size_t j = 0; j < free_nodes.size(); ++j) {
        wvals[j] = sobolev_lorentz_norm(free_nodes[j], eq.s, cfg.r, false);
        sup_free = std::max(sup_free, hs_norm(free_nodes[j], eq.s));
    }
    rep.eps = spacetime_norm(wvals, dtau, cfg.q);
    rep.strichartz_ratio = rep.u0_hs > 0.0 ? rep.eps / rep.u0_hs : 0.0;
    rep.ball_M = 2.0 * sup_free;  // measured sup-in-t H^s of the free flow
    rep.ball_N = 2.0 * rep.eps;
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-13 * std::max(rep.eps, 1e-300);

    auto prev = std::move(free_nodes);  // u^(0) = free flow
    int consecutive_up = 0;
    for (int k = 0; k < cfg.max_iter; ++k) {
        auto cur = duhamel_map(prev, u0, cfg.T, eq);
        const auto nd = node_distance(cur, prev, dtau, cfg.q, cfg.r);
        rep.d.push_back(nd.metric);
        rep.d_sup.push_back(nd.sup);
        rep.iterations = k + 1;
        bool stop = false;
        if (!std::isfinite(nd.metric)) {
            rep.diverged = true;
            stop = true;
        } else {
            const std::size_t m = rep.d.size();
            if (m >= 2 && rep.d[m - 2] > 0.0) {
                const double ratio = nd.metric / rep.d[m - 2];
                rep.ratios.push_back(ratio);
                if (ratio > 1.0) {
                    if (++consecutive_up >= 3) {
                        rep.diverged = true;
                        stop = true;
                    }
                } else {
                    consecutive_up = 0;
                }
            }
            if (nd.metric < tol) stop = true;
        }
        prev = std::move(cur);
        if (stop) break;
    }

    double sup_hs = 0.0;
    std::vector<double> iter_w(prev.size());
    for (std::size_t j = 0; j < prev.size(); ++j) {
        sup_hs = std::max(sup_hs, hs_norm(prev[j], eq.s));
        iter_w[j] = sobolev_lorentz_norm(prev[j], eq.s, cfg.r, false);
    }
    rep.in_ball_M = std::isfinite(sup_hs) && sup_hs <= rep.ball_M;
    const double iter_n = spacetime_norm(iter_w, dtau, cfg.q);
    rep.in_ball_N = std::isfinite(iter_n) && iter_n <= rep.ball_N;

    if (cfg.sim_dt > 0.0 && !rep.diverged) {
        const long steps = std::lround(cfg.T / cfg.sim_dt);
        SimOptions opt;
        opt.steps = std::max(steps, 1l);
        opt.dt = cfg.T / static_cast<double>(opt.steps);
        auto traj = simulate(u0, eq, opt);
        rep.sim_mismatch = rel_l2_error(prev.back(), traj.final_state.u);
    }
    return rep;
}

DependenceReport continuous_dependence_check(const GridFunction& u0,
                                             const std::vector<double>& sizes,
                                             const PicardConfig& cfg,
                                             const EquationParams& eq) {
    validate(cfg);
    if (u0.grid != eq.grid) throw std::invalid_argument("dependence: grid mismatch");
    if (sizes.empty()) throw std::invalid_argument("dependence: no perturbation sizes");
    for (double s : sizes)
        if (!(s > 0.0)) throw std::invalid_argument("dependence: sizes must be positive");
    if (!(cfg.sim_dt > 0.0)) throw std::invalid_argument("dependence: sim_dt must be positive");

    const GridSpec& g = eq.grid;
    // Fixed smooth perturbation direction, H^s-normalized; the offset and the
    // lattice modulation keep it in generic position relative to u0.
    GridFunction dir = gaussian_field(g, 0.2 * g.box, 1.0,
                                      {0.15 * g.box, -0.1 * g.box, 0.05 * g.box},
                                      {g.freq(2), 0.0, 0.0});
    const double dn = hs_norm(dir, eq.s);
    for (std::size_t i = 0; i < dir.size(); ++i) dir[i] /= dn;

    const int substeps =
        std::max(1l, std::lround(cfg.T / cfg.nodes / cfg.sim_dt));
    const long steps = static_cast<long>(cfg.nodes) * substeps;
    auto evolve = [&](const GridFunction& w0) {
        SimOptions opt;
        opt.dt = cfg.T / static_cast<double>(steps);
        opt.steps = steps;
        opt.checkpoint_every = substeps;
        opt.store_snapshots = true;
        auto traj = simulate(w0, eq, opt);
        std::vector<GridFunction> states;
        states.reserve(traj.snapshots.size());
        for (auto& s : traj.snapshots) states.push_back(std::move(s.u));
        return states;
    };

    auto base = evolve(u0);
    DependenceReport rep;
    const double dtau = cfg.T / cfg.nodes;
    for (double size : sizes) {
        GridFunction v0 = u0;
        for (std::size_t i = 0; i < v0.size(); ++i) v0[i] += size * dir[i];
        GridFunction delta0 = v0;
        for (std::size_t i = 0; i < delta0.size(); ++i) delta0[i] -= u0[i];
        const double measured = hs_norm(delta0, eq.s);
        auto pert = evolve(v0);
        const double dist = node_distance(base, pert, dtau, cfg.q, cfg.r).metric;
        rep.sizes.push_back(measured);
        rep.distances.push_back(dist);
        rep.ratios.push_back(measured > 0.0 ? dist / measured : 0.0);
    }
    double lo = rep.ratios.front(), hi = rep.ratios.front();
    for (double r : rep.ratios) {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    rep.variation = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    rep.stable = std::isfinite(rep.variation) && rep.variation < 2.0;
    return rep;
}

}  // namespace hartree
