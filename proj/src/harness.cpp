#include "hartree/harness.hpp"

#include "hartree/spectral.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace hartree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Exponent carried as a Rational with 0 encoding infinity.
double exp_double(const Rational& e) { return e == 0 ? kInf : to_double(e); }

Rational inverse(const Rational& e) {
    if (e == 0) return Rational(0);
    return Rational(1) / e;
}

void require_first_index(const std::string& lemma, const std::string& name, const Rational& p) {
    if (p == 0 || !(p > 1))
        throw std::invalid_argument(lemma + ": first index " + name +
                                    " must lie strictly in (1, inf), got " + rational_str(p));
}

void require_second_index(const std::string& lemma, const std::string& name, const Rational& q) {
    if (q != 0 && q < 1)
        throw std::invalid_argument(lemma + ": second index " + name + " must lie in [1, inf], got " +
                                    rational_str(q));
}

// Same samples, box scaled by 1/delta: the exact realization of f(delta x).
GridFunction rebox(const GridFunction& f, double delta) {
    GridSpec g(f.grid.dim, f.grid.points, f.grid.box / delta);
    GridFunction out(g);
    out.values = f.values;
    return out;
}

GridFunction mean_free(const GridFunction& f) {
    std::complex<double> mean(0.0, 0.0);
    for (const auto& v : f.values) mean += v;
    mean /= static_cast<double>(f.values.size());
    GridFunction out = f;
    for (auto& v : out.values) v -= mean;
    return out;
}

// Appends one field's ratios and folds its spread into the report.
void absorb(HarnessReport& rep, const std::string& name, const std::vector<double>& deltas,
            const std::vector<double>& lhs, const std::vector<double>& rhs) {
    double lo = kInf, hi = 0.0;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        double ratio = lhs[i] / rhs[i];
        rep.rows.push_back({name, deltas[i], lhs[i], rhs[i], ratio});
        rep.sup_ratio = std::max(rep.sup_ratio, ratio);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    if (!(lo > 0.0) || !std::isfinite(hi))
        rep.max_variation = kInf;
    else
        rep.max_variation = std::max(rep.max_variation, hi / lo);
}

std::string short_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

void finish(HarnessReport& rep) {
    bool ok = std::isfinite(rep.max_variation) && rep.max_variation < 1.10;
    for (const auto& r : rep.rows)
        if (!std::isfinite(r.ratio) || !(r.ratio >= 0.0)) ok = false;
    for (const auto& c : rep.checks)
        if (!c.pass) ok = false;
    rep.pass = ok;
}

}  // namespace

IdentityReport lorentz_identity_suite(const GridFunction& f, double p, double q, double r) {
    if (!(p > 1.0) || !(q >= 1.0) || !(r > 0.0))
        throw std::invalid_argument("lorentz_identity_suite: need p > 1, q >= 1, r > 0");
    RearrangementProfile prof = rearrangement(f);
    RearrangementProfile powered;
    powered.cell = prof.cell;
    powered.value.reserve(prof.value.size());
    for (double v : prof.value) powered.value.push_back(std::pow(v, r));
    double lhs = lorentz_norm(powered, p, q);
    double rhs = std::pow(lorentz_norm(prof, p * r, q * r), r);
    IdentityReport rep;
    rep.power_residual = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
    rep.nesting_ratio = lorentz_norm(prof, p, r) / lorentz_norm(prof, p, q);
    rep.pass = rep.power_residual < 1e-10 && std::isfinite(rep.nesting_ratio);
    return rep;
}

HarnessReport holder_harness(const GridSpec& g, const Rational& p1, const Rational& q1,
                             const Rational& p2, const Rational& q2, std::uint64_t seed) {
    require_first_index("holder", "p1", p1);
    require_first_index("holder", "p2", p2);
    require_second_index("holder", "q1", q1);
    require_second_index("holder", "q2", q2);
    Rational ip = inverse(p1) + inverse(p2);
    if (!(ip < 1))
        throw std::invalid_argument("holder: 1/p1 + 1/p2 = " + rational_str(ip) +
                                    " needs a target index p > 1");
    Rational iq = inverse(q1) + inverse(q2);
    if (iq > 1)
        throw std::invalid_argument("holder: 1/q1 + 1/q2 = " + rational_str(iq) +
                                    " needs a target second index q >= 1");
    double dp = 1.0 / to_double(ip);
    double dq = iq == 0 ? kInf : 1.0 / to_double(iq);
    double dp1 = exp_double(p1), dq1 = exp_double(q1);
    double dp2 = exp_double(p2), dq2 = exp_double(q2);

    HarnessReport rep;
    rep.lemma = "holder";
    auto fam = inequality_family(g, seed);
    auto deltas = dilation_ladder();
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i; j < fam.size(); ++j) {
            std::vector<double> lhs, rhs;
            for (double d : deltas) {
                GridFunction fa = rebox(fam[i].f, d);
                GridFunction fb = rebox(fam[j].f, d);
                GridFunction prod(fa.grid);
                for (std::size_t k = 0; k < prod.size(); ++k)
                    prod[k] = fa[k] * fb[k];
                lhs.push_back(lorentz_norm(prod, dp, dq));
                rhs.push_back(lorentz_norm(fa, dp1, dq1) * lorentz_norm(fb, dp2, dq2));
            }
            absorb(rep, fam[i].name + "*" + fam[j].name, deltas, lhs, rhs);
        }
    }
    finish(rep);
    return rep;
}

HarnessReport hls_harness(const GridSpec& g, const Rational& alpha, const Rational& p,
                          const Rational& second, std::uint64_t seed) {
    long n = g.dim;
    if (!(alpha > 0) || !(alpha < n))
        throw std::invalid_argument("hls: needs 0 < alpha < n, got alpha = " + rational_str(alpha));
    require_first_index("hls", "p", p);
    require_second_index("hls", "r", second);
    Rational iq = inverse(p) - alpha / Rational(n);
    if (!(iq > 0))
        throw std::invalid_argument("hls: 1/p - alpha/n = " + rational_str(iq) +
                                    " needs a finite target index (1/p > alpha/n)");
    double dq = 1.0 / to_double(iq);
    double dp = to_double(p);
    double dd = exp_double(second);

    HarnessReport rep;
    rep.lemma = "hls";
    RieszOperator riesz(g.dim, to_double(alpha));
    auto fam = inequality_family(g, seed);
    auto deltas = dilation_ladder();
    for (const auto& tf : fam) {
        GridFunction f0 = mean_free(tf.f);
        std::vector<double> lhs, rhs;
        for (double d : deltas) {
            GridFunction fd = rebox(f0, d);
            GridFunction conv = riesz.apply(fd);
            lhs.push_back(lorentz_norm(conv, dq, dd));
            rhs.push_back(lorentz_norm(fd, dp, dd));
        }
        absorb(rep, tf.name, deltas, lhs, rhs);
    }
    finish(rep);
    return rep;
}

HarnessReport sobolev_harness(const GridSpec& g, const Rational& s, const Rational& p,
                              const Rational& second, std::uint64_t seed) {
    long n = g.dim;
    require_first_index("sobolev", "p", p);
    require_second_index("sobolev", "q", second);
    if (s < 0) throw std::invalid_argument("sobolev: needs s >= 0, got " + rational_str(s));
    if (!(s * p < n))
        throw std::invalid_argument("sobolev: needs s < n/p, got s = " + rational_str(s) +
                                    " at p = " + rational_str(p));
    Rational ip1 = inverse(p) - s / Rational(n);
    double dp1 = 1.0 / to_double(ip1);
    double dp = to_double(p);
    double dq = exp_double(second);
    double ds = to_double(s);

    HarnessReport rep;
    rep.lemma = "sobolev";
    auto fam = inequality_family(g, seed);
    auto deltas = dilation_ladder();
    bool degenerate_ok = true;
    for (const auto& tf : fam) {
        GridFunction f0 = mean_free(tf.f);
        std::vector<double> lhs, rhs;
        for (double d : deltas) {
            GridFunction fd = rebox(f0, d);
            GridFunction lap = fractional_laplacian(fd, ds);
            lhs.push_back(lorentz_norm(fd, dp1, dq));
            rhs.push_back(lorentz_norm(lap, dp, dq));
            if (s == 0 && std::abs(lhs.back() / rhs.back() - 1.0) > 1e-10) degenerate_ok = false;
        }
        absorb(rep, tf.name, deltas, lhs, rhs);
    }
    if (s == 0)
        rep.checks.push_back({"s0-identity", degenerate_ok, "s = 0 collapses to ratio 1"});
    finish(rep);
    return rep;
}

HarnessReport leibniz_stress(const GridSpec& g, double s, std::uint64_t seed) {
    if (!(s >= 0.0)) throw std::invalid_argument("leibniz: needs s >= 0");
    HarnessReport rep;
    rep.lemma = "leibniz";
    auto fam = inequality_family(g, seed);
    // Smooth members only: the product rule is a statement about derivatives.
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (fam[i].name.rfind("gauss", 0) == 0 || fam[i].name.rfind("random", 0) == 0)
            pick.push_back(i);
    auto deltas = dilation_ladder();
    for (std::size_t a = 0; a < pick.size(); ++a) {
        for (std::size_t bi = a + 1; bi < pick.size(); ++bi) {
            const auto& fa0 = fam[pick[a]];
            const auto& fb0 = fam[pick[bi]];
            std::vector<double> lhs, rhs;
            for (double d : deltas) {
                GridFunction fa = rebox(fa0.f, d);
                GridFunction fb = rebox(fb0.f, d);
                GridFunction prod(fa.grid);
                for (std::size_t k = 0; k < prod.size(); ++k)
                    prod[k] = fa[k] * fb[k];
                double l = lorentz_norm(fractional_laplacian(prod, s), 2.0, 2.0);
                double r = lorentz_norm(fractional_laplacian(fa, s), 4.0, 2.0) *
                               lorentz_norm(fb, 4.0, 2.0) +
                           lorentz_norm(fa, 4.0, 2.0) *
                               lorentz_norm(fractional_laplacian(fb, s), 4.0, 2.0);
                lhs.push_back(l);
                rhs.push_back(r);
            }
            absorb(rep, fa0.name + "*" + fb0.name, deltas, lhs, rhs);
        }
    }
    finish(rep);
    return rep;
}

HarnessReport chain_stress(const GridSpec& g, double s, std::uint64_t seed) {
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("chain: needs 0 <= s <= 1");
    HarnessReport rep;
    rep.lemma = "chain";
    auto fam = inequality_family(g, seed);
    auto deltas = dilation_ladder();
    for (const auto& tf : fam) {
        if (tf.name.rfind("gauss", 0) != 0 && tf.name.rfind("random", 0) != 0) continue;
        std::vector<double> lhs, rhs;
        for (double d : deltas) {
            GridFunction fd = rebox(tf.f, d);
            GridFunction cubed(fd.grid);    // F(u) = |u|^2 u
            GridFunction deriv(fd.grid);    // |F'(u)| bound 3|u|^2
            for (std::size_t k = 0; k < fd.size(); ++k) {
                double a = std::abs(fd[k]);
                cubed[k] = a * a * fd[k];
                deriv[k] = 3.0 * a * a;
            }
            lhs.push_back(lorentz_norm(fractional_laplacian(cubed, s), 2.0, 2.0));
            rhs.push_back(lorentz_norm(deriv, 4.0, 4.0) *
                          lorentz_norm(fractional_laplacian(fd, s), 4.0, 4.0));
        }
        absorb(rep, tf.name, deltas, lhs, rhs);
    }
    finish(rep);
    return rep;
}

NamedCheck holder_indicator_example(const GridSpec& g) {
    GridFunction chi = ball_indicator(g, 0.45 * g.box);
    // chi * chi = chi, so both sides reduce to closed-form indicator norms:
    // ||chi||_{2,1} = 2 m^{1/2} and (||chi||_{4,2})^2 = (m^{1/4} 2^{1/2})^2.
    double lhs = lorentz_norm(chi, 2.0, 1.0);
    double rhs = lorentz_norm(chi, 4.0, 2.0) * lorentz_norm(chi, 4.0, 2.0);
    double ratio = lhs / rhs;
    NamedCheck check;
    check.tag = "holder-indicator";
    check.pass = std::abs(ratio - 1.0) < 1e-10;
    check.detail = "indicator pair ratio " + short_num(ratio);
    return check;
}

IdentitySuiteReport identity_suite(const GridSpec& g, std::uint64_t seed, int draws) {
    if (g.dim != 3)
        throw std::invalid_argument("identity_suite: the weak-norm reference needs dim 3");
    if (draws < 1) throw std::invalid_argument("identity_suite: draws must be positive");
    IdentitySuiteReport rep;
    std::mt19937_64 gen(seed);
    auto u01 = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };

    // Random single-step profiles against m^{1/p}(p/q)^{1/q}.
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
        int cells = 1 + static_cast<int>(u01() * 255.0);
        double cell = 0.01 * std::exp(-3.0 + 6.0 * u01());
        double m = cells * cell;
        double p = 1.0 + 7.0 * u01();
        double q = u01() < 0.1 ? kInf : 1.0 + 11.0 * u01();
        RearrangementProfile prof;
        prof.cell = cell;
        prof.value.assign(static_cast<std::size_t>(cells), 1.0);
        double closed = std::pow(m, 1.0 / p) * (std::isinf(q) ? 1.0 : std::pow(p / q, 1.0 / q));
        double measured = lorentz_norm(prof, p, q);
        worst = std::max(worst, std::abs(measured - closed) / closed);
    }
    rep.max_indicator_residual = worst;
    rep.checks.push_back({"indicator-closed-form", worst < 1e-10,
                          "worst relative residual over random (m, p, q)"});

    // The same closed form on an actual grid indicator.
    {
        GridFunction chi = ball_indicator(g, 0.45 * g.box);
        std::size_t count = 0;
        for (const auto& v : chi.values)
            if (std::abs(v) > 0.5) ++count;
        double m = static_cast<double>(count) * chi.grid.cell_measure();
        double res = 0.0;
        for (auto [p, q] : {std::pair{2.0, 2.0}, {3.0, 1.0}, {2.0, kInf}}) {
            double closed = std::pow(m, 1.0 / p) * (std::isinf(q) ? 1.0 : std::pow(p / q, 1.0 / q));
            res = std::max(res, std::abs(lorentz_norm(chi, p, q) - closed) / closed);
        }
        rep.max_indicator_residual = std::max(rep.max_indicator_residual, res);
        rep.checks.push_back({"indicator-grid", res < 1e-10, "ball indicator vs closed form"});
    }

    // Weak norm of the truncated |x|^{-1} against the level-set constant.
    {
        GridFunction f = truncated_power_field(g, 1.0, 2.0);
        double measured = lorentz_norm(f, 3.0, kInf);
        double target = std::cbrt(4.0 * 3.14159265358979323846 / 3.0);
        rep.weak_norm_rel_error = std::abs(measured - target) / target;
        rep.checks.push_back({"weak-power-norm", rep.weak_norm_rel_error < 0.05,
                              "L^{3,inf} of truncated |x|^{-1} vs omega_3^{1/3}"});
    }

    // Power identity across the family.
    {
        auto fam = inequality_family(g, seed);
        double res = 0.0;
        struct Triple {
            double p, q, r;
        };
        for (const auto& tf : fam) {
            for (Triple t : {Triple{2.0, 4.0, 2.0}, Triple{1.5, 3.0, 2.0}, Triple{2.0, kInf, 3.0}}) {
                IdentityReport r = lorentz_identity_suite(tf.f, t.p, t.q, t.r);
                res = std::max(res, r.power_residual);
            }
        }
        rep.max_power_residual = res;
        rep.checks.push_back({"power-identity", res < 1e-10, "|| |f|^r || vs ||f||^r across family"});
    }

    // Nesting ratio invariance across matched-grid dilations.
    {
        GridFunction f = gaussian_field(g, 1.1 * g.box / 4.0, 1.0);
        double base = 0.0, drift = 0.0;
        for (double d : {0.25, 1.0, 4.0}) {
            GridFunction fd = rebox(f, d);
            double ratio = lorentz_norm(fd, 2.0, kInf) / lorentz_norm(fd, 2.0, 1.0);
            if (base == 0.0) base = ratio;
            drift = std::max(drift, std::abs(ratio / base - 1.0));
        }
        rep.max_nesting_drift = drift;
        rep.checks.push_back({"nesting-dilation", drift < 1e-6, "(2,inf)/(2,1) ratio across dilations"});
    }

    rep.pass = true;
    for (const auto& c : rep.checks)
        if (!c.pass) rep.pass = false;
    return rep;
}

}  // namespace hartree
