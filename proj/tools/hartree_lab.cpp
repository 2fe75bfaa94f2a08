#include <CLI11.hpp>

#include "hartree/config.hpp"
#include "hartree/diagnostics.hpp"
#include "hartree/exponents.hpp"
#include "hartree/harness.hpp"
#include "hartree/picard.hpp"
#include "hartree/report.hpp"
#include "hartree/sim.hpp"
#include "hartree/spectral.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace hartree;

int thread_cap() {
    long hw = std::thread::hardware_concurrency();
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("HARTREE_LAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<int>(std::min(v, hw * 4L));
    }
    return static_cast<int>(hw);
}

Rational arg_rational(const std::string& text, const std::string& flag) {
    auto q = parse_rational(text);
    if (!q)
        throw ConfigError(0, flag + " needs an exact rational (\"num/den\" or terminating decimal), got \"" +
                                 text + "\"");
    return *q;
}

void write_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    atomic_write(path, content);
}

std::string verdict_word(bool pass) { return pass ? "pass" : "fail"; }

// ---------------------------------------------------------------- gate ----

struct GateArgs {
    std::string n = "3", s = "0", alpha, b, p;
    int lambda = 1;
    std::string json_path, csv_path;
};

Report gate_to_report(const GateReport& rep, const std::string& config_key) {
    Report out("gate", Provenance{0, fnv1a_hex(config_key)});
    for (const auto& c : rep.checks) out.add(c.tag, c.pass, c.pass ? 0.0 : 1.0, 0.0, c.detail);
    return out;
}

int run_gate(const GateArgs& a) {
    long n = to_double(arg_rational(a.n, "--n"));
    Rational nr = arg_rational(a.n, "--n");
    if (nr.get_den() != 1) throw ConfigError(0, "--n needs an integer, got " + a.n);
    n = nr.get_num().get_si();
    Rational s = arg_rational(a.s, "--s");
    Rational alpha = arg_rational(a.alpha, "--alpha");
    Rational b = arg_rational(a.b, "--b");
    if (a.lambda != 1 && a.lambda != -1) throw ConfigError(0, "--lambda must be +1 or -1");

    GateReport rep;
    if (a.p.empty()) {
        rep = wellposedness_gate(n, s, alpha, b, a.lambda);
    } else {
        rep = wellposedness_gate(
            ParameterPoint::with_power(n, s, alpha, b, arg_rational(a.p, "--p"), a.lambda));
    }

    std::printf("point: n = %ld, s = %s, alpha = %s, b = %s, lambda = %+d", n,
                rational_str(s).c_str(), rational_str(alpha).c_str(), rational_str(b).c_str(),
                a.lambda);
    if (rep.point.p != 0)
        std::printf(", p = %s, s_c = %s", rational_str(rep.point.p).c_str(),
                    rational_str(rep.point.s_c).c_str());
    std::printf("\n");
    for (const auto& c : rep.checks)
        std::printf("  %-8s %s  %s\n", c.tag.c_str(), c.pass ? "pass" : "FAIL", c.detail.c_str());
    if (rep.sample)
        std::printf("  sampled admissible pair (q, r) = (%s, %s) at the window midpoint\n",
                    rep.sample->q_str().c_str(), rep.sample->r_str().c_str());
    std::printf("verdict: %s\n", verdict_word(rep.pass).c_str());

    const std::string key = a.n + "|" + a.s + "|" + a.alpha + "|" + a.b + "|" +
                            std::to_string(a.lambda) + "|" + a.p;
    Report out = gate_to_report(rep, key);
    if (!a.json_path.empty()) write_file(a.json_path, out.json());
    if (!a.csv_path.empty()) write_file(a.csv_path, out.csv());
    return rep.pass ? 0 : 1;
}

// ---------------------------------------------------------------- scan ----

struct ScanArgs {
    std::string n = "3", s = "0";
    std::string alpha_min, alpha_max, b_min, b_max;
    int alpha_steps = 100, b_steps = 100;
    int lambda = 1;
    std::string out;
};

std::vector<Rational> axis(const Rational& lo, const Rational& hi, int steps, const char* name) {
    if (steps < 1) throw ConfigError(0, std::string(name) + " needs at least 1 step");
    if (hi < lo) throw ConfigError(0, std::string(name) + ": max below min");
    std::vector<Rational> out;
    out.reserve(steps);
    if (steps == 1) {
        out.push_back(lo);
        return out;
    }
    for (int k = 0; k < steps; ++k)
        out.push_back(lo + (hi - lo) * Rational(k) / Rational(steps - 1));
    return out;
}

std::string scan_row(long n, const Rational& s, const Rational& alpha, const Rational& b,
                     int lambda) {
    GateReport rep = wellposedness_gate(n, s, alpha, b, lambda);
    bool model_ok = true;
    for (const auto& c : rep.checks)
        if (c.tag == "model") model_ok = false;
    std::string row = std::to_string(n) + "," + rational_str(s) + "," + rational_str(alpha) + "," +
                      rational_str(b) + ",";
    if (model_ok) {
        row += rational_str(rep.point.p);
        row += ",";
        row += rep.window.lo.str();
        row += ",";
        row += rep.window.hi.str();
    } else {
        row += ",,";
    }
    row += ",";
    row += verdict_word(rep.pass);
    return row;
}

int run_scan(const ScanArgs& a) {
    Rational nr = arg_rational(a.n, "--n");
    if (nr.get_den() != 1) throw ConfigError(0, "--n needs an integer");
    long n = nr.get_num().get_si();
    Rational s = arg_rational(a.s, "--s");
    auto alphas = axis(arg_rational(a.alpha_min, "--alpha-min"), arg_rational(a.alpha_max, "--alpha-max"),
                       a.alpha_steps, "--alpha-steps");
    auto bs = axis(arg_rational(a.b_min, "--b-min"), arg_rational(a.b_max, "--b-max"), a.b_steps,
                   "--b-steps");
    if (a.lambda != 1 && a.lambda != -1) throw ConfigError(0, "--lambda must be +1 or -1");

    const std::size_t total = alphas.size() * bs.size();
    std::vector<std::string> rows(total);
    const int workers = std::max(1, std::min<int>(thread_cap(), static_cast<int>(total)));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < total; i += workers) {
                const Rational& alpha = alphas[i / bs.size()];
                const Rational& b = bs[i % bs.size()];
                rows[i] = scan_row(n, s, alpha, b, a.lambda);
            }
        });
    }
    for (auto& t : pool) t.join();

    std::string csv = "n,s,alpha,b,p,window_lo,window_hi,verdict\n";
    std::size_t passing = 0;
    for (const auto& r : rows) {
        csv += r;
        csv += '\n';
        if (r.size() >= 4 && r.compare(r.size() - 4, 4, "pass") == 0) ++passing;
    }
    write_file(a.out, csv);
    std::printf("scan: %zu rows (%zu pass) -> %s\n", total, passing, a.out.c_str());
    return 0;
}

// -------------------------------------------------------------- verify ----

struct VerifyArgs {
    std::string suite;
    int grid = 0;  // 0 = per-suite default
    double box = 0.0;
    std::uint64_t seed = 42;
    std::string json_path, csv_path;
};

void add_harness(Report& rep, const HarnessReport& h, std::string& rows_csv,
                 const std::string& label = "") {
    const std::string name = label.empty() ? h.lemma : label;
    rep.add(name + "-ratios-finite",
            std::isfinite(h.sup_ratio) && h.sup_ratio > 0.0, h.sup_ratio, 0.0,
            "supremum of LHS/RHS over family and dilations");
    rep.add(name + "-dilation-stable", std::isfinite(h.max_variation) && h.max_variation < 1.10,
            h.max_variation, 1.10, "max per-family ratio spread across dilations");
    for (const auto& c : h.checks)
        rep.add(c.tag, c.pass, c.pass ? 0.0 : 1.0, 0.0, c.detail);
    for (const auto& r : h.rows)
        rows_csv += h.lemma + "," + r.field + "," + format_double(r.delta) + "," +
                    format_double(r.lhs) + "," + format_double(r.rhs) + "," +
                    format_double(r.ratio) + "\n";
}

int run_verify(const VerifyArgs& a) {
    const std::string& suite = a.suite;
    int N = a.grid;
    double L = a.box;
    if (N == 0) N = suite == "identities" ? 128 : 64;
    if (L == 0.0) L = suite == "identities" ? 4.0 : (suite == "strichartz" ? 16.0 : 8.0);
    GridSpec g(3, N, L);
    const std::string key = suite + "|" + std::to_string(N) + "|" + format_double(L);
    Report rep("verify-" + suite, Provenance{a.seed, fnv1a_hex(key)});
    std::string rows_csv = suite == "strichartz" ? "suite,pair,delta,homo_ratio,inho_ratio\n"
                                                 : "lemma,field,delta,lhs,rhs,ratio\n";

    if (suite == "identities") {
        IdentitySuiteReport id = identity_suite(g, a.seed, 100);
        rep.add("indicator-closed-form", id.checks[0].pass, id.max_indicator_residual, 1e-10,
                id.checks[0].detail);
        rep.add("indicator-grid", id.checks[1].pass, 0.0, 1e-10, id.checks[1].detail);
        rep.add("weak-power-norm", id.checks[2].pass, id.weak_norm_rel_error, 0.05,
                id.checks[2].detail);
        rep.add("power-identity", id.checks[3].pass, id.max_power_residual, 1e-10,
                id.checks[3].detail);
        rep.add("nesting-dilation", id.checks[4].pass, id.max_nesting_drift, 1e-6,
                id.checks[4].detail);
    } else if (suite == "holder") {
        add_harness(rep, holder_harness(g, Rational(4), Rational(2), Rational(4), Rational(2), a.seed),
                    rows_csv);
        NamedCheck ind = holder_indicator_example(g);
        rep.add(ind.tag, ind.pass, ind.pass ? 0.0 : 1.0, 1e-10, ind.detail);
        add_harness(rep, leibniz_stress(g, 0.5, a.seed), rows_csv);
    } else if (suite == "hls") {
        add_harness(rep, hls_harness(g, Rational(2), Rational(5, 4), Rational(2), a.seed), rows_csv);
    } else if (suite == "sobolev") {
        add_harness(rep, sobolev_harness(g, Rational(1, 2), Rational(2), Rational(2), a.seed),
                    rows_csv);
        add_harness(rep, sobolev_harness(g, Rational(0), Rational(2), Rational(2), a.seed + 1),
                    rows_csv, "sobolev-s0");
        add_harness(rep, chain_stress(g, 0.5, a.seed), rows_csv);
    } else if (suite == "strichartz") {
        StrichartzConfig sc;
        sc.T0 = 1.0;
        sc.samples = 33;
        sc.sigma = 2.0;
        StrichartzReport endpoint =
            strichartz_diagnostic(g, AdmissiblePair{Rational(0), Rational(1, 2)}, 0.0, sc);
        StrichartzReport gate_pair =
            strichartz_diagnostic(g, AdmissiblePair{Rational(1, 4), Rational(1, 3)}, 0.0, sc);
        double endpoint_dev = 0.0;
        for (const auto& r : endpoint.rungs)
            endpoint_dev = std::max({endpoint_dev, std::abs(r.homo_ratio - 1.0),
                                     std::abs(r.inho_ratio - 1.0)});
        rep.add("endpoint-ratio", endpoint_dev < 1e-10, endpoint_dev, 1e-10,
                "(inf,2) homogeneous and inhomogeneous ratios vs 1");
        rep.add("gate-pair-homo-stable", gate_pair.homo_variation < 1.10, gate_pair.homo_variation,
                1.10, "(4,3) homogeneous ratio spread across dilations");
        rep.add("gate-pair-inho-stable", gate_pair.inho_variation < 1.10, gate_pair.inho_variation,
                1.10, "(4,3) inhomogeneous ratio spread across dilations");
        for (const auto& rep_pair : {std::pair<const char*, const StrichartzReport*>{"inf-2", &endpoint},
                                     {"4-3", &gate_pair}})
            for (const auto& r : rep_pair.second->rungs)
                rows_csv += std::string("strichartz,") + rep_pair.first + "," +
                            format_double(r.delta) + "," + format_double(r.homo_ratio) + "," +
                            format_double(r.inho_ratio) + "\n";
    } else {
        throw ConfigError(0, "unknown suite \"" + suite +
                                 "\" (identities|holder|hls|sobolev|strichartz)");
    }

    for (const auto& r : rep.rows())
        std::printf("  %-24s %s  measured %.6g (tol %.3g)\n", r.key.c_str(),
                    r.pass ? "pass" : "FAIL", r.measured, r.tolerance);
    std::printf("verdict: %s\n", verdict_word(rep.all_pass()).c_str());
    if (!a.json_path.empty()) write_file(a.json_path, rep.json());
    if (!a.csv_path.empty()) write_file(a.csv_path, rows_csv);
    return rep.all_pass() ? 0 : 1;
}

// ------------------------------------------------------- config-driven ----

struct Setup {
    ParameterPoint pt;
    GridSpec grid;
    GridFunction u0;
    std::uint64_t seed = 0;
};

const std::vector<std::string> kCommonKeys = {"n",          "s",        "alpha",    "b",
                                              "lambda",     "p",        "grid_points", "box",
                                              "seed",       "init",     "init_sigma",  "init_amp",
                                              "init_band",  "init_hs"};

std::vector<std::string> with_common(std::initializer_list<const char*> extra) {
    std::vector<std::string> keys = kCommonKeys;
    for (const char* e : extra) keys.emplace_back(e);
    return keys;
}

Setup build_setup(const RunConfig& cfg) {
    Setup st;
    long n = cfg.integer_or("n", 3);
    Rational s = cfg.rational_or("s", Rational(0));
    Rational alpha = cfg.rational("alpha");
    Rational b = cfg.rational("b");
    long lambda = cfg.integer_or("lambda", 1);
    if (lambda != 1 && lambda != -1)
        throw ConfigError(cfg.line_of("lambda"), "lambda must be +1 or -1");
    st.pt = cfg.has("p") ? ParameterPoint::with_power(n, s, alpha, b, cfg.rational("p"),
                                                      static_cast<int>(lambda))
                         : ParameterPoint::critical(n, s, alpha, b, static_cast<int>(lambda));

    int N = static_cast<int>(cfg.integer_or("grid_points", 64));
    double L = cfg.number_or("box", 8.0);
    st.grid = GridSpec(3, N, L);
    st.seed = static_cast<std::uint64_t>(cfg.integer_or("seed", 42));

    std::string init = cfg.text_or("init", "gaussian");
    if (init == "gaussian") {
        st.u0 = gaussian_field(st.grid, cfg.number_or("init_sigma", 1.5),
                               cfg.number_or("init_amp", 0.5));
    } else if (init == "band") {
        st.u0 = band_limited_random(st.grid, static_cast<int>(cfg.integer_or("init_band", N / 8)),
                                    st.seed);
    } else {
        throw ConfigError(cfg.line_of("init"), "unknown init \"" + init + "\" (gaussian | band)");
    }
    if (cfg.has("init_hs")) {
        double target = cfg.number("init_hs");
        if (!(target > 0.0)) throw ConfigError(cfg.line_of("init_hs"), "init_hs must be positive");
        double have = hs_norm(st.u0, to_double(st.pt.s));
        for (auto& v : st.u0.values) v *= target / have;
    }
    return st;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string csv = "t,mass,energy,hs,hs_dot,lorentz_r2,wsr2\n";
    for (const auto& row : traj.rows)
        csv += format_double(row.t) + "," + format_double(row.mass) + "," +
               format_double(row.energy) + "," + format_double(row.hs) + "," +
               format_double(row.hs_dot) + "," + format_double(row.lorentz_r2) + "," +
               format_double(row.wsr2) + "\n";
    return csv;
}

struct ConfigArgs {
    std::string config_path;
    std::string out_dir;
};

std::filesystem::path ensure_out(const std::string& dir) {
    std::filesystem::path p(dir);
    std::filesystem::create_directories(p);
    return p;
}

int finish_report(const Report& rep, const std::string& out_dir, const std::string& csv_name,
                  const std::string& csv_payload) {
    for (const auto& r : rep.rows())
        std::printf("  %-22s %s  measured %.6g (tol %.3g)%s%s\n", r.key.c_str(),
                    r.pass ? "pass" : "FAIL", r.measured, r.tolerance,
                    r.detail.empty() ? "" : "  ", r.detail.c_str());
    std::printf("verdict: %s\n", verdict_word(rep.all_pass()).c_str());
    if (!out_dir.empty()) {
        auto dir = ensure_out(out_dir);
        atomic_write((dir / "report.json").string(), rep.json());
        atomic_write((dir / "report.csv").string(), rep.csv());
        if (!csv_name.empty()) atomic_write((dir / csv_name).string(), csv_payload);
    }
    return rep.all_pass() ? 0 : 1;
}

int run_simulate(const ConfigArgs& a) {
    RunConfig cfg = RunConfig::load_file(a.config_path);
    cfg.require({"alpha", "b"});
    cfg.require_known(with_common({"dt", "steps", "checkpoint_every", "r", "tail_check_every",
                                   "store_snapshots", "mass_tol", "energy_tol"}));
    Setup st = build_setup(cfg);
    EquationParams eq(st.pt, st.grid);

    SimOptions opt;
    opt.dt = cfg.number_or("dt", 1e-3);
    opt.steps = cfg.integer_or("steps", 1000);
    opt.checkpoint_every = cfg.integer_or("checkpoint_every", 0);
    opt.r = cfg.number_or("r", 3.0);
    opt.tail_check_every = cfg.integer_or("tail_check_every", 16);
    opt.store_snapshots = cfg.flag_or("store_snapshots", false);
    const double mass_tol = cfg.number_or("mass_tol", 1e-8);
    const double energy_tol = cfg.number_or("energy_tol", 1e-4);

    Report rep("simulate", Provenance{st.seed, fnv1a_hex(cfg.source_text())});
    try {
        Trajectory traj = simulate(st.u0, eq, opt);
        double m0 = traj.rows.front().mass, e0 = traj.rows.front().energy;
        double dm = 0.0, de = 0.0;
        for (const auto& row : traj.rows) {
            dm = std::max(dm, std::abs(row.mass - m0) / m0);
            de = std::max(de, std::abs(row.energy - e0) / std::max(std::abs(e0), 1e-300));
        }
        rep.add("mass-drift", dm < mass_tol, dm, mass_tol, "relative over the run");
        rep.add("energy-drift", de < energy_tol, de, energy_tol, "relative over the run");
        rep.add("stability", true, 0.0, 0.0, "no resolution or finiteness abort");
        if (!a.out_dir.empty()) {
            auto dir = ensure_out(a.out_dir);
            atomic_write((dir / "trajectory.csv").string(), trajectory_csv(traj));
            save_snapshot((dir / "final.bin").string(), traj.final_state.u);
            for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
                char name[32];
                std::snprintf(name, sizeof name, "snapshot_%04zu.bin", i);
                save_snapshot((dir / name).string(), traj.snapshots[i].u);
            }
        }
    } catch (const std::runtime_error& e) {
        rep.add("stability", false, 1.0, 0.0, e.what());
    }
    return finish_report(rep, a.out_dir, "", "");
}

int run_picard(const ConfigArgs& a) {
    RunConfig cfg = RunConfig::load_file(a.config_path);
    cfg.require({"alpha", "b"});
    cfg.require_known(with_common({"T", "nodes", "max_iter", "q", "r", "sim_dt", "tol", "fix_tol"}));
    Setup st = build_setup(cfg);
    EquationParams eq(st.pt, st.grid);

    PicardConfig pc;
    pc.T = cfg.number_or("T", 0.5);
    pc.nodes = cfg.integer_or("nodes", 16);
    pc.max_iter = cfg.integer_or("max_iter", 12);
    pc.q = cfg.number_or("q", 4.0);
    pc.r = cfg.number_or("r", 3.0);
    pc.sim_dt = cfg.number_or("sim_dt", 0.0);
    pc.tol = cfg.number_or("tol", 0.0);
    const double fix_tol = cfg.number_or("fix_tol", 1e-4);

    PicardReport pr = picard_contraction(st.u0, pc, eq);

    Report rep("picard", Provenance{st.seed, fnv1a_hex(cfg.source_text())});
    double early = 1.0;
    for (std::size_t k = 0; k < pr.ratios.size() && k < 3; ++k)
        early = std::min(early, pr.ratios[k]);
    rep.add("contraction-by-3", !pr.diverged && !pr.ratios.empty() && early < 0.5, early, 0.5,
            "smallest distance ratio within three iterations");
    rep.add("in-ball", !pr.diverged && pr.in_ball_M && pr.in_ball_N,
            pr.in_ball_M && pr.in_ball_N ? 0.0 : 1.0, 0.0,
            "final iterate inside the contraction ball (M, N)");
    if (pc.sim_dt > 0.0)
        rep.add("fixpoint-vs-simulate", !pr.diverged && pr.sim_mismatch >= 0.0 &&
                                            pr.sim_mismatch < fix_tol,
                pr.sim_mismatch, fix_tol, "relative L2 against the split-step run");
    if (pr.diverged)
        rep.add("divergence", false, 1.0, 0.0,
                "ratio > 1 three times: T = " + format_double(pr.T) +
                    ", ||u0||_{H^s} = " + format_double(pr.u0_hs));

    std::string csv = "k,d,d_sup,ratio\n";
    for (std::size_t k = 0; k < pr.d.size(); ++k)
        csv += std::to_string(k + 1) + "," + format_double(pr.d[k]) + "," +
               format_double(pr.d_sup[k]) + "," +
               (k < pr.ratios.size() ? format_double(pr.ratios[k]) : "") + "\n";
    return finish_report(rep, a.out_dir, "iterations.csv", csv);
}

int run_scatter(const ConfigArgs& a) {
    RunConfig cfg = RunConfig::load_file(a.config_path);
    cfg.require({"alpha", "b"});
    cfg.require_known(with_common({"dt", "checkpoints", "shell_frac"}));
    Setup st = build_setup(cfg);
    EquationParams eq(st.pt, st.grid);

    ScatterConfig sc;
    sc.dt = cfg.number_or("dt", 0.02);
    if (cfg.has("checkpoints")) {
        sc.checkpoints.clear();
        for (const Rational& q : cfg.rational_list("checkpoints"))
            sc.checkpoints.push_back(to_double(q));
    }
    sc.shell_frac = cfg.number_or("shell_frac", 0.125);

    ScatterReport sr = scattering_diagnostic(st.u0, sc, eq);

    Report rep("scatter", Provenance{st.seed, fnv1a_hex(cfg.source_text())});
    double worst_pair = 0.0;
    int pairs_in_horizon = 0;
    bool halves = true;
    for (std::size_t m = 0; m + 1 < sr.cauchy.size(); ++m) {
        if (!sr.pair_within_horizon(m + 1)) continue;
        double r = sr.cauchy[m + 1] / sr.cauchy[m];
        worst_pair = std::max(worst_pair, r);
        ++pairs_in_horizon;
        if (!(r <= 0.5)) halves = false;
    }
    rep.add("cauchy-decreasing", sr.cauchy_decreasing,
            sr.cauchy_decreasing ? 0.0 : 1.0, 0.0,
            "free-frame Cauchy differences decrease along checkpoints");
    rep.add("cauchy-halving", halves, worst_pair, 0.5,
            "consecutive Cauchy ratio, " + std::to_string(pairs_in_horizon) +
                " pair(s) within the recurrence horizon");
    double boundary = 0.0;
    for (double f : sr.boundary_frac) boundary = std::max(boundary, f);
    rep.add("boundary-mass", !sr.horizon_limited, boundary, 0.01,
            "shell mass fraction stays below 1% (horizon " + format_double(sr.horizon) + ")");

    std::string csv = "t,cauchy,residual,boundary_frac\n";
    for (std::size_t m = 0; m < sr.times.size(); ++m)
        csv += format_double(sr.times[m]) + "," +
               (m > 0 ? format_double(sr.cauchy[m - 1]) : "") + "," +
               format_double(sr.residual[m]) + "," + format_double(sr.boundary_frac[m]) + "\n";
    return finish_report(rep, a.out_dir, "scatter.csv", csv);
}

int run_depend(const ConfigArgs& a) {
    RunConfig cfg = RunConfig::load_file(a.config_path);
    cfg.require({"alpha", "b", "sim_dt"});
    cfg.require_known(with_common({"T", "nodes", "q", "r", "sim_dt", "sizes"}));
    Setup st = build_setup(cfg);
    EquationParams eq(st.pt, st.grid);

    PicardConfig pc;
    pc.T = cfg.number_or("T", 0.25);
    pc.nodes = cfg.integer_or("nodes", 8);
    pc.q = cfg.number_or("q", 4.0);
    pc.r = cfg.number_or("r", 3.0);
    pc.sim_dt = cfg.number("sim_dt");

    std::vector<double> sizes = {1e-2, 1e-3, 1e-4};
    if (cfg.has("sizes")) {
        sizes.clear();
        for (const Rational& q : cfg.rational_list("sizes")) sizes.push_back(to_double(q));
    }

    DependenceReport dr = continuous_dependence_check(st.u0, sizes, pc, eq);

    Report rep("depend", Provenance{st.seed, fnv1a_hex(cfg.source_text())});
    rep.add("dependence-stable", dr.stable, dr.variation, 2.0,
            "distance/size ratio spread across perturbation sizes");
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < dr.distances.size(); ++i)
        if (!(dr.distances[i + 1] <= dr.distances[i])) monotone = false;
    rep.add("distance-monotone", monotone, monotone ? 0.0 : 1.0, 0.0,
            "smaller perturbations stay closer");

    std::string csv = "size,distance,ratio\n";
    for (std::size_t i = 0; i < dr.sizes.size(); ++i)
        csv += format_double(dr.sizes[i]) + "," + format_double(dr.distances[i]) + "," +
               format_double(dr.ratios[i]) + "\n";
    return finish_report(rep, a.out_dir, "depend.csv", csv);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic gates and desk-scale numerics for an inhomogeneous Hartree model"};
    app.require_subcommand(1);
    int rc = 0;

    GateArgs ga;
    auto* gate = app.add_subcommand("gate", "hypothesis gate at one parameter point");
    gate->add_option("--n", ga.n, "dimension (integer >= 3)");
    gate->add_option("--s", ga.s, "regularity s (exact rational)");
    gate->add_option("--alpha", ga.alpha, "Riesz order alpha (exact rational)")->required();
    gate->add_option("--b", ga.b, "weight strength b (exact rational)")->required();
    gate->add_option("--lambda", ga.lambda, "sign +1 (defocusing) or -1 (focusing)");
    gate->add_option("--p", ga.p, "override the derived power p (exact rational)");
    gate->add_option("--json", ga.json_path, "write the JSON report here");
    gate->add_option("--csv", ga.csv_path, "write the CSV report here");
    gate->callback([&] { rc = run_gate(ga); });

    ScanArgs sa;
    auto* scan = app.add_subcommand("scan", "gate verdict over an (alpha, b) rectangle");
    scan->add_option("--n", sa.n, "dimension (integer >= 3)");
    scan->add_option("--s", sa.s, "regularity s (exact rational)");
    scan->add_option("--alpha-min", sa.alpha_min, "alpha range start")->required();
    scan->add_option("--alpha-max", sa.alpha_max, "alpha range end")->required();
    scan->add_option("--alpha-steps", sa.alpha_steps, "alpha grid points (default 100)");
    scan->add_option("--b-min", sa.b_min, "b range start")->required();
    scan->add_option("--b-max", sa.b_max, "b range end")->required();
    scan->add_option("--b-steps", sa.b_steps, "b grid points (default 100)");
    scan->add_option("--lambda", sa.lambda, "sign +1 or -1");
    scan->add_option("--out", sa.out, "CSV output path")->required();
    scan->callback([&] { rc = run_scan(sa); });

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "numerical inequality and identity suites");
    verify->add_option("--suite", va.suite, "identities | holder | hls | sobolev | strichartz")
        ->required();
    verify->add_option("--grid", va.grid, "points per axis (default per suite)");
    verify->add_option("--box", va.box, "box half-width (default per suite)");
    verify->add_option("--seed", va.seed, "random seed (default 42)");
    verify->add_option("--json", va.json_path, "write the JSON report here");
    verify->add_option("--csv", va.csv_path, "write the ratio rows CSV here");
    verify->callback([&] { rc = run_verify(va); });

    ConfigArgs sim_args, pic_args, sct_args, dep_args;
    auto* simc = app.add_subcommand("simulate", "split-step evolution from a config file");
    simc->add_option("--config", sim_args.config_path, "key = value config file")->required();
    simc->add_option("--out", sim_args.out_dir, "output directory (trajectory, snapshots, report)");
    simc->callback([&] { rc = run_simulate(sim_args); });

    auto* pic = app.add_subcommand("picard", "fixed-point iteration on the Duhamel map");
    pic->add_option("--config", pic_args.config_path, "key = value config file")->required();
    pic->add_option("--out", pic_args.out_dir, "output directory");
    pic->callback([&] { rc = run_picard(pic_args); });

    auto* sct = app.add_subcommand("scatter", "free-frame Cauchy / scattering diagnostic");
    sct->add_option("--config", sct_args.config_path, "key = value config file")->required();
    sct->add_option("--out", sct_args.out_dir, "output directory");
    sct->callback([&] { rc = run_scatter(sct_args); });

    auto* dep = app.add_subcommand("depend", "continuous dependence on initial data");
    dep->add_option("--config", dep_args.config_path, "key = value config file")->required();
    dep->add_option("--out", dep_args.out_dir, "output directory");
    dep->callback([&] { rc = run_depend(dep_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return rc;
}
