#include "hartree/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hartree/fields.hpp"
#include "hartree/rational.hpp"
#include "hartree/spectral.hpp"

namespace hartree {

namespace {

double shell_mass_fraction(const GridFunction& u, double shell_frac) {
    const GridSpec& g = u.grid;
    const double edge = (1.0 - shell_frac) * g.box;
    long double shell = 0.0L, all = 0.0L;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const auto x = g.point(i);
        const double m = std::norm(u[i]);
        all += m;
        double far = std::abs(x[0]);
        for (int d = 1; d < g.dim; ++d) far = std::max(far, std::abs(x[d]));
        if (far > edge) shell += m;
    }
    return all > 0.0L ? static_cast<double>(shell / all) : 0.0;
}

}  // namespace

ScatterReport scattering_diagnostic(const GridFunction& u0, const ScatterConfig& cfg,
                                    const EquationParams& eq) {
    if (u0.grid != eq.grid) throw std::invalid_argument("scatter: grid mismatch");
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("scatter: dt must be positive");
    if (cfg.checkpoints.empty()) throw std::invalid_argument("scatter: no checkpoints");
    if (!(cfg.shell_frac > 0.0) || !(cfg.shell_frac < 1.0))
        throw std::invalid_argument("scatter: shell fraction must lie in (0, 1)");
    std::vector<long> steps;
    double prev = 0.0;
    for (double t : cfg.checkpoints) {
        if (!(t > prev)) throw std::invalid_argument("scatter: checkpoints must increase");
        const long k = std::lround(t / cfg.dt);
        if (k < 1 || std::abs(k * cfg.dt - t) > 1e-9)
            throw std::invalid_argument("scatter: checkpoints must be multiples of dt");
        steps.push_back(k);
        prev = t;
    }

    SimOptions opt;
    opt.dt = cfg.dt;
    opt.steps = steps.back();
    opt.checkpoints = steps;
    opt.store_snapshots = true;
    auto traj = simulate(u0, eq, opt);
    // snapshots: t = 0 first, then one per checkpoint (the last is final).
    const std::size_t m_count = cfg.checkpoints.size();
    if (traj.snapshots.size() != m_count + 1)
        throw std::runtime_error("scatter: checkpoint bookkeeping mismatch");

    ScatterReport rep;
    rep.times = cfg.checkpoints;
    const double k_rms = hs_dot_norm(u0, 1.0) / l2_norm(u0);
    rep.horizon = k_rms > 0.0 ? eq.grid.box / (8.0 * k_rms)
                              : std::numeric_limits<double>::infinity();

    std::vector<GridFunction> w;
    w.reserve(m_count);
    for (std::size_t m = 0; m < m_count; ++m) {
        const GridFunction& ut = traj.snapshots[m + 1].u;
        rep.boundary_frac.push_back(shell_mass_fraction(ut, cfg.shell_frac));
        w.push_back(free_propagator(ut, -cfg.checkpoints[m]));
    }
    rep.horizon_limited = false;
    for (double f : rep.boundary_frac)
        if (f > 0.01) rep.horizon_limited = true;

    GridFunction diff(eq.grid);
    for (std::size_t m = 0; m + 1 < m_count; ++m) {
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = w[m + 1][i] - w[m][i];
        rep.cauchy.push_back(hs_norm(diff, eq.s));
    }
    rep.cauchy_decreasing = true;
    for (std::size_t m = 0; m + 1 < rep.cauchy.size(); ++m)
        if (!(rep.cauchy[m + 1] <= rep.cauchy[m])) rep.cauchy_decreasing = false;

    rep.phi = w.back();
    for (std::size_t m = 0; m < m_count; ++m) {
        GridFunction fwd = free_propagator(rep.phi, cfg.checkpoints[m]);
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = traj.snapshots[m + 1].u[i] - fwd[i];
        rep.residual.push_back(hs_norm(diff, eq.s));
    }
    return rep;
}

StrichartzReport strichartz_diagnostic(const GridSpec& g, const AdmissiblePair& pair, double s,
                                       const StrichartzConfig& cfg) {
    if (!pair.is_admissible(g.dim))
        throw std::invalid_argument("strichartz: pair (" + pair.q_str() + ", " + pair.r_str() +
                                    ") is not admissible for n = " + std::to_string(g.dim));
    if (!(cfg.T0 > 0.0) || cfg.samples < 2 || !(cfg.sigma > 0.0))
        throw std::invalid_argument("strichartz: bad window configuration");

    const bool q_inf = pair.inv_q == Rational(0);
    const double q = q_inf ? std::numeric_limits<double>::infinity() : 1.0 / to_double(pair.inv_q);
    const double r = 1.0 / to_double(pair.inv_r);
    // Conjugate exponents for the forcing side of the inhomogeneous estimate.
    const Rational conj_q = Rational(1) - pair.inv_q;
    const Rational conj_r = Rational(1) - pair.inv_r;
    const double qc = 1.0 / to_double(conj_q);
    const double rc = 1.0 / to_double(conj_r);

    StrichartzReport rep;
    rep.pair = pair;
    rep.s = s;
    for (double delta : dilation_ladder()) {
        GridFunction f = gaussian_field(g, cfg.sigma * delta);
        const double T = cfg.T0 * delta * delta;
        const double dt = T / (cfg.samples - 1);

        std::vector<double> homo(cfg.samples), duhamel(cfg.samples), forcing(cfg.samples);
        GridFunction u = f;             // e^{it Lap} f at the current node
        GridFunction integral(g);       // transported trapezoid of the forcing
        GridFunction f_prev = f;        // forcing at the previous node
        for (int j = 0; j < cfg.samples; ++j) {
            if (j > 0) {
                for (std::size_t i = 0; i < integral.size(); ++i)
                    integral[i] += 0.5 * dt * f_prev[i];
                integral = free_propagator(integral, dt);
                u = free_propagator(u, dt);
                for (std::size_t i = 0; i < integral.size(); ++i)
                    integral[i] += 0.5 * dt * u[i];
                f_prev = u;
            }
            homo[j] = sobolev_lorentz_norm(u, s, r, false);
            duhamel[j] = sobolev_lorentz_norm(integral, s, r, false);
            forcing[j] = sobolev_lorentz_norm(u, s, rc, false);
        }
        StrichartzRung rung;
        rung.delta = delta;
        rung.homo_ratio = spacetime_norm(homo, dt, q) / hs_norm(f, s);
        rung.inho_ratio = spacetime_norm(duhamel, dt, q) / spacetime_norm(forcing, dt, qc);
        rep.rungs.push_back(rung);
    }
    auto variation = [](const std::vector<StrichartzRung>& rungs, bool homo_col) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (const auto& r : rungs) {
            const double v = homo_col ? r.homo_ratio : r.inho_ratio;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    };
    rep.homo_variation = variation(rep.rungs, true);
    rep.inho_variation = variation(rep.rungs, false);
    return rep;
}

}  // namespace hartree
