#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "hartree/exponents.hpp"
#include "hartree/fields.hpp"
#include "hartree/grid.hpp"
#include "hartree/sim.hpp"
#include "hartree/spectral.hpp"

using namespace hartree;

namespace {

ParameterPoint reference_point(int lambda = 1) {
    // n = 3, s = 0, alpha = 2, b = 1/2 -> p = 2, s_c = 0.
    return ParameterPoint::critical(3, Rational(0), Rational(2), Rational(1, 2), lambda);
}

GridFunction smooth_data(const GridSpec& g, double amp = 1.0, double sigma = 1.5) {
    return gaussian_field(g, sigma, amp);
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("equation params validate the point and the grid") {
    GridSpec g(3, 16, 8.0);
    CHECK_NOTHROW(EquationParams(reference_point(), g));

    // p < 2 violates the solver invariant even for an otherwise sane point.
    auto sub = ParameterPoint::with_power(3, Rational(0), Rational(2), Rational(1, 2),
                                          Rational(3, 2));
    CHECK_THROWS_AS(EquationParams(sub, g), std::invalid_argument);

    // The solver is three-dimensional only.
    GridSpec g2(2, 16, 8.0);
    CHECK_THROWS_AS(EquationParams(reference_point(), g2), std::invalid_argument);
    auto n4 = ParameterPoint::critical(4, Rational(0), Rational(3), Rational(1, 2));
    CHECK_THROWS_AS(EquationParams(n4, g), std::invalid_argument);

    EquationParams eq(reference_point(-1), g);
    CHECK(eq.lambda == -1.0);
    CHECK(eq.p == 2.0);
    CHECK(eq.b == 0.5);
    CHECK(eq.weight.size() == g.total());
    for (double w : eq.weight) CHECK(std::isfinite(w));
}

TEST_CASE("nonlinearity vanishes on the zero field and is gauge covariant") {
    GridSpec g(3, 16, 8.0);
    EquationParams eq(reference_point(), g);

    GridFunction zero(g);
    auto fz = nonlinearity(zero, eq);
    for (std::size_t i = 0; i < fz.size(); ++i) CHECK(fz[i] == std::complex<double>(0.0, 0.0));
    CHECK(energy(zero, eq) == 0.0);

    GridFunction u = band_limited_random(g, 4, 20250801ull);
    const std::complex<double> phase = std::polar(1.0, 0.7331);
    GridFunction ur = u;
    for (std::size_t i = 0; i < ur.size(); ++i) ur[i] *= phase;

    auto v = potential(u, eq);
    auto vr = potential(ur, eq);
    double vmax = 0.0, vdiff = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        vmax = std::max(vmax, std::abs(v[i]));
        vdiff = std::max(vdiff, std::abs(v[i] - vr[i]));
    }
    CHECK(vdiff < 1e-12 * vmax);  // the potential only sees |u|

    auto f = nonlinearity(u, eq);
    auto fr = nonlinearity(ur, eq);
    double fmax = 0.0, fdiff = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        fmax = std::max(fmax, std::abs(f[i]));
        fdiff = std::max(fdiff, std::abs(fr[i] - phase * f[i]));
    }
    CHECK(fdiff < 1e-12 * fmax);
}

TEST_CASE("potential is real through the complex convolution path") {
    GridSpec g(3, 16, 8.0);
    EquationParams eq(reference_point(), g);
    GridFunction u = band_limited_random(g, 4, 99ull);

    // Rebuild V through the complex Riesz path: the imaginary part it drags
    // along is pure roundoff, and the real part matches the solver's V.
    GridFunction rho(g);
    for (std::size_t i = 0; i < u.size(); ++i) rho[i] = eq.weight[i] * std::norm(u[i]);
    GridFunction conv = eq.riesz.apply(rho);
    auto v = potential(u, eq);
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(std::abs(conv[i].imag()) < 1e-12 * std::max(vmax, 1.0));
        CHECK(std::abs(eq.lambda * conv[i].real() * eq.weight[i] - v[i]) < 1e-12 * vmax);
    }
}

TEST_CASE("defocusing flow with lambda zero reduces to the free propagator") {
    GridSpec g(3, 16, 8.0);
    EquationParams eq(reference_point(0), g);
    GridFunction u0 = smooth_data(g);

    SimOptions opt;
    opt.dt = 1e-3;
    opt.steps = 20;
    auto traj = simulate(u0, eq, opt);
    GridFunction free = free_propagator(u0, opt.dt * opt.steps);
    CHECK(rel_l2_error(traj.final_state.u, free) < 1e-12);
    CHECK(traj.final_state.t == doctest::Approx(0.02));
}

TEST_CASE("single simulate step equals one strang step") {
    GridSpec g(3, 16, 8.0);
    EquationParams eq(reference_point(), g);
    GridFunction u0 = smooth_data(g, 1.5);

    SimOptions opt;
    opt.dt = 5e-3;
    opt.steps = 1;
    auto traj = simulate(u0, eq, opt);
    SimState manual = strang_step({u0, 0.0}, opt.dt, eq);
    CHECK(rel_l2_error(traj.final_state.u, manual.u) < 1e-14);
    CHECK(traj.final_state.t == doctest::Approx(manual.t));
}

TEST_CASE("checkpoint states match composed strang steps") {
    GridSpec g(3, 16, 8.0);
    EquationParams eq(reference_point(), g);
    GridFunction u0 = smooth_data(g, 1.5);

    SimOptions opt;
    opt.dt = 5e-3;
    opt.steps = 5;
    opt.checkpoint_every = 1;
    opt.store_snapshots = true;
    auto traj = simulate(u0, eq, opt);
    REQUIRE(traj.snapshots.size() == 6);  // t = 0 plus every step

    SimState st{u0, 0.0};
    CHECK(rel_l2_error(traj.snapshots[0].u, u0) == 0.0);
    for (long j = 1; j <= opt.steps; ++j) {
        st = strang_step(st, opt.dt, eq);
        CHECK(rel_l2_error(traj.snapshots[j].u, st.u) < 1e-13);
    }
    CHECK(traj.rows.size() == 6);
    for (std::size_t k = 1; k < traj.rows.size(); ++k)
        CHECK(traj.rows[k].t > traj.rows[k - 1].t);
}

TEST_CASE("strang step is time reversible") {
    GridSpec g(3, 16, 8.0);
    EquationParams eq(reference_point(), g);
    GridFunction u0 = smooth_data(g, 1.5);

    SimState fwd = strang_step({u0, 0.0}, 1e-2, eq);
    SimState back = strang_step(fwd, -1e-2, eq);
    CHECK(rel_l2_error(back.u, u0) < 1e-12);
    CHECK(std::abs(back.t) < 1e-15);
}

TEST_CASE("mass is conserved and energy drift stays small for both signs") {
    GridSpec g(3, 32, 8.0);
    for (int lambda : {1, -1}) {
        CAPTURE(lambda);
        EquationParams eq(reference_point(lambda), g);
        GridFunction u0 = smooth_data(g);

        SimOptions opt;
        opt.dt = 1e-3;
        opt.steps = 100;
        opt.checkpoint_every = 20;
        auto traj = simulate(u0, eq, opt);
        REQUIRE(traj.rows.size() >= 2);
        const double m0 = traj.rows.front().mass;
        const double e0 = traj.rows.front().energy;
        for (const auto& row : traj.rows) {
            CHECK(rel_diff(row.mass, m0) < 1e-12);
            CHECK(rel_diff(row.energy, e0) < 1e-5);
        }
    }
}

TEST_CASE("energy splits linearly in lambda") {
    GridSpec g(3, 16, 8.0);
    EquationParams plus(reference_point(1), g);
    EquationParams minus(reference_point(-1), g);
    GridFunction u = smooth_data(g, 1.3);

    const double grad = hs_dot_norm(u, 1.0);
    const double sum = energy(u, plus) + energy(u, minus);
    CHECK(rel_diff(sum, grad * grad) < 1e-12);
}

TEST_CASE("halving dt cuts the terminal error by about four") {
    GridSpec g(3, 32, 8.0);
    EquationParams eq(reference_point(), g);
    GridFunction u0 = smooth_data(g, 3.0);

    auto terminal = [&](double dt, long steps) {
        SimOptions opt;
        opt.dt = dt;
        opt.steps = steps;
        return simulate(u0, eq, opt).final_state.u;
    };
    GridFunction a = terminal(1e-2, 20);
    GridFunction b = terminal(5e-3, 40);
    GridFunction c = terminal(2.5e-3, 80);

    const double e1 = rel_l2_error(a, b);
    const double e2 = rel_l2_error(b, c);
    CHECK(e1 > 1e-12);  // above roundoff, so the ratio is meaningful
    const double ratio = e1 / e2;
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
}

TEST_CASE("blowup guards abort the run") {
    GridSpec g(3, 16, 8.0);
    EquationParams eq(reference_point(), g);

    // All mass on a top-octave mode trips the resolution check immediately.
    GridFunction spike(g);
    const double xi = g.freq(g.points / 2 - 1);
    for (std::size_t i = 0; i < spike.size(); ++i)
        spike[i] = std::polar(1.0, xi * g.point(i)[0]);
    SimOptions opt;
    opt.dt = 1e-3;
    opt.steps = 4;
    CHECK_THROWS_AS(simulate(spike, eq, opt), std::runtime_error);

    GridFunction bad = smooth_data(g);
    bad[3] = std::complex<double>(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK_THROWS_AS(simulate(bad, eq, opt), std::runtime_error);
}

TEST_CASE("scaling covariance holds on matched grids") {
    GridSpec g(3, 32, 8.0);
    // Band-limit the data to the lower half-spectrum so the dilated run stays
    // resolved on the halved box.
    GridFunction u0 = spectral_truncate(smooth_data(g, 1.8, 1.2), g.points / 4);

    SUBCASE("reference point, p = 2") {
        EquationParams eq(reference_point(), g);
        auto rep = scaling_covariance_check(u0, 2, eq, 0.01, 1e-3);
        CHECK(std::abs(rep.hs_c_ratio - 1.0) < 1e-12);
        CHECK(rep.mismatch_rel_l2 < 1e-10);
    }

    SUBCASE("general power point, p = 11/5") {
        auto pt = ParameterPoint::critical(3, Rational(1), Rational(6, 5), Rational(1));
        EquationParams eq(pt, g);
        auto rep = scaling_covariance_check(u0, 2, eq, 0.01, 1e-3);
        CHECK(std::abs(rep.hs_c_ratio - 1.0) < 1e-12);
        CHECK(rep.mismatch_rel_l2 < 1e-10);
    }

    SUBCASE("delta one is the identity") {
        EquationParams eq(reference_point(), g);
        auto rep = scaling_covariance_check(u0, 1, eq, 0.01, 1e-3);
        CHECK(rep.hs_c_ratio == 1.0);
        CHECK(rep.mismatch_rel_l2 == 0.0);
    }

    SUBCASE("bad dilation factors are rejected") {
        EquationParams eq(reference_point(), g);
        CHECK_THROWS_AS(scaling_covariance_check(u0, 3, eq, 0.01, 1e-3), std::invalid_argument);
        CHECK_THROWS_AS(scaling_covariance_check(u0, 0, eq, 0.01, 1e-3), std::invalid_argument);
    }
}
