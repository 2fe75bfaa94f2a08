#include "hartree/exponents.hpp"

#include <algorithm>
#include <stdexcept>

namespace hartree {

namespace {

Rational rmax(const Rational& a, const Rational& b) { return a > b ? a : b; }
Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }

void validate_base(long n, const Rational& s, const Rational& alpha, const Rational& b) {
    if (n < 3) throw std::domain_error("dimension must be >= 3");
    if (s < 0 || s > 1) throw std::domain_error("regularity s must lie in [0, 1]");
    if (2 * s >= n) throw std::domain_error("need 2s < n");
    if (alpha <= 0) throw std::domain_error("alpha must be positive");
    if (b <= 0) throw std::domain_error("b must be positive");
}

}  // namespace

ParameterPoint ParameterPoint::critical(long n, const Rational& s, const Rational& alpha,
                                        const Rational& b, int lambda) {
    validate_base(n, s, alpha, b);
    Rational sigma = 2 - 2 * b + alpha;
    if (sigma <= 0) throw std::domain_error("need 2 - 2b + alpha > 0 for a power p > 1");
    ParameterPoint pt;
    pt.n = n;
    pt.s = s;
    pt.alpha = alpha;
    pt.b = b;
    pt.lambda = lambda;
    pt.p = 1 + sigma / Rational(n - 2 * s);
    pt.s_c = s;
    return pt;
}

ParameterPoint ParameterPoint::with_power(long n, const Rational& s, const Rational& alpha,
                                          const Rational& b, const Rational& p, int lambda) {
    validate_base(n, s, alpha, b);
    if (p <= 1) throw std::domain_error("power p must exceed 1");
    ParameterPoint pt;
    pt.n = n;
    pt.s = s;
    pt.alpha = alpha;
    pt.b = b;
    pt.lambda = lambda;
    pt.p = p;
    pt.s_c = Rational(n) / 2 - (2 - 2 * b + alpha) / (2 * (p - 1));
    return pt;
}

CriticalExponents critical_exponents(long n, const Rational& s, const Rational& alpha,
                                     const Rational& b) {
    ParameterPoint pt = ParameterPoint::critical(n, s, alpha, b);
    CriticalExponents ce;
    ce.p = pt.p;
    ce.s_c = Rational(n) / 2 - (2 - 2 * b + alpha) / (2 * (ce.p - 1));
    ce.p_mass = 1 + (alpha + 2 - 2 * b) / Rational(n);
    ce.p_energy = 1 + (2 - 2 * b + alpha) / Rational(n - 2);
    return ce;
}

bool check_alpha_range(long n, const Rational& alpha) {
    Rational lo = rmax(Rational(n - 2) / 3, Rational(n - 4));
    return alpha > lo && alpha < n;
}

ExponentWindow b_window(long n, const Rational& s, const Rational& alpha) {
    if (n < 3) throw std::domain_error("dimension must be >= 3");
    // Lower bound: alpha/2 + 1 - (n-2s)(n+4+sqrt(9n^2-8n+16))/(8(n-2)), clamped at 0.
    Rational m = n - 2 * s;
    Rational denom = Rational(8) * (n - 2);
    AlgebraicBound raw(alpha / 2 + 1 - m * (n + 4) / denom, -m / denom,
                      static_cast<unsigned long>(9 * n * n - 8 * n + 16));
    AlgebraicBound lo = raw.sign() > 0 ? raw : AlgebraicBound(Rational(0));
    AlgebraicBound hi(alpha / 2 + 1 - m / 2);
    return ExponentWindow(lo, hi, /*lo_strict=*/true, /*hi_strict=*/false);
}

ExponentWindow r_window(const ParameterPoint& pt) {
    const Rational &s = pt.s, &alpha = pt.alpha, &b = pt.b, &p = pt.p;
    Rational n(pt.n);
    Rational lo = rmax(rmax(s, s + (alpha - b) / p), n / 2 - 2 / (2 * p - 1));
    Rational hi = rmin((s * (p - 1) - b + n) / p, n / 2 - 1 / (2 * p - 1));
    return ExponentWindow(Rational(lo), Rational(hi), true, true);
}

RawConstraints raw_constraint_windows(const ParameterPoint& pt) {
    const Rational &s = pt.s, &alpha = pt.alpha, &b = pt.b, &p = pt.p;
    Rational n(pt.n);
    RawConstraints rc;
    auto add = [&rc](const std::string& tag, const Rational& lo, const Rational& hi,
                     bool lo_strict = true, bool hi_strict = true) {
        rc.windows.push_back({tag, ExponentWindow(Rational(lo), Rational(hi), lo_strict, hi_strict)});
    };

    // Admissible range of n/r after eliminating the dual exponent (closed).
    add("2cc1", n / 2 - 2 / (2 * p - 1), n / 2 - 1 / (2 * p - 1), false, false);
    add("2cc2", s + (alpha - b) / p,
        rmin((s * (p - 2) + n - b) / (p - 1), s + (n - b + alpha) / p));
    add("2cc", s, (s * (p - 2) + n) / (p - 1));
    add("2cc3", rmax(s, s + (alpha - b) / p), s + (n - b) / p);
    // Combined display of the three windows above.
    add("r2", rmax(s, s + (alpha - b) / p),
        rmin((s * (p - 2) + n - b) / (p - 1), s + (n - b) / p));
    add("2cc4", rmax(s - b / (p - 1), (s * (p - 1) + alpha - b) / p),
        rmin(s + (n - b) / (p - 1), (s * (p - 1) + alpha - b + n) / p));
    add("2cc7", s, s + n / (p - 1));
    add("2cc6", rmax(s, (s * (p - 1) + alpha - b) / p), (s * (p - 1) + n - b) / p);
    // Combined display of 2cc4/2cc7/2cc6.
    add("r3", rmax(s, (s * (p - 1) + alpha - b) / p), (s * (p - 1) + n - b) / p);
    // r2 and r3 merged (r3's lower and r2's upper drop out when 0 < b < n-s).
    add("rr2", rmax(s, s + (alpha - b) / p), (s * (p - 1) + n - b) / p);
    add("r1", s + (alpha - b) / p,
        rmin((s * (p - 2) + n - b) / (p - 1), (s * (p - 1) + n - b + alpha) / p));
    add("2cc8", s, (s * (p - 2) + n) / (p - 1));
    add("2cc9", rmax(s, s + (alpha - b) / p), s + (n - b) / p);
    add("2cc11", s, s + n / (p - 1));
    add("2cc10", rmax(s, (s * (p - 1) + alpha - b) / p), s + (n - b) / p);
    // Combined display of the r1/2cc8/2cc9/2cc11/2cc10 group, itself subsumed
    // by rr2.
    add("rr3", rmax(s, s + (alpha - b) / p), (s * (p - 2) + n - b) / (p - 1));

    bool cb = b > 0 && b < n - s;
    rc.side_conditions.push_back(
        {"cb", cb, "0 < b < n - s with b = " + rational_str(b) + ", n - s = " + rational_str(n - s)});
    bool side10 = s < alpha && alpha < n;
    rc.side_conditions.push_back({"2cc10", side10, "s < alpha < n with s = " + rational_str(s) +
                                                       ", alpha = " + rational_str(alpha)});
    return rc;
}

EquivalenceResult window_equivalence(const ParameterPoint& pt) {
    EquivalenceResult res;
    RawConstraints rc = raw_constraint_windows(pt);
    ExponentWindow inter = rc.windows.front().window;
    for (size_t i = 1; i < rc.windows.size(); ++i)
        inter = ExponentWindow::intersect(inter, rc.windows[i].window);
    res.raw_intersection = inter;
    res.derived = r_window(pt);
    res.pass = inter.same_interior(res.derived);
    if (!res.pass) {
        // Both windows have rational endpoints; probe midpoints of the
        // differing bounds for a value in exactly one interior.
        auto interior = [](const ExponentWindow& w, const Rational& x) {
            return !w.empty() && x > w.lo.rational_value() && x < w.hi.rational_value();
        };
        std::vector<Rational> cands;
        auto mid = [](const ExponentWindow& w) {
            return (w.lo.rational_value() + w.hi.rational_value()) / 2;
        };
        if (!inter.empty()) cands.push_back(mid(inter));
        if (!res.derived.empty()) cands.push_back(mid(res.derived));
        if (!inter.empty() && !res.derived.empty()) {
            cands.push_back((inter.lo.rational_value() + res.derived.lo.rational_value()) / 2);
            cands.push_back((inter.hi.rational_value() + res.derived.hi.rational_value()) / 2);
        }
        for (const Rational& c : cands) {
            if (interior(inter, c) != interior(res.derived, c)) {
                res.witness = c;
                break;
            }
        }
    }
    return res;
}

AlgebraicBound p_upper_bound(long n) {
    if (n < 3) throw std::domain_error("dimension must be >= 3");
    Rational denom = Rational(4) * (n - 2);
    return AlgebraicBound(Rational(5 * n - 4) / denom, 1 / denom,
                          static_cast<unsigned long>(9 * n * n - 8 * n + 16));
}

bool AdmissiblePair::is_admissible(long n) const {
    if (inv_q < 0 || inv_q > Rational(1, 2)) return false;
    Rational lo_ir = Rational(n - 2) / (2 * n), hi_ir(1, 2);
    if (inv_r < lo_ir || inv_r > hi_ir) return false;
    return 2 * inv_q + n * inv_r == Rational(n) / 2;
}

std::string AdmissiblePair::q_str() const {
    if (inv_q == 0) return "inf";
    return rational_str(1 / inv_q);
}

std::string AdmissiblePair::r_str() const {
    if (inv_r == 0) return "inf";
    return rational_str(1 / inv_r);
}

AdmissiblePair AdmissiblePair::from_n_over_r(long n, const Rational& n_over_r) {
    AdmissiblePair pr;
    pr.inv_r = n_over_r / n;
    pr.inv_q = (Rational(n) / 2 - n_over_r) / 2;
    return pr;
}

DualPairResult dual_pair(const ParameterPoint& pt, const AdmissiblePair& pair) {
    if (!pair.is_admissible(pt.n))
        throw std::invalid_argument("dual_pair requires an admissible input pair, got (" +
                                    pair.q_str() + ", " + pair.r_str() + ")");
    const Rational &s = pt.s, &alpha = pt.alpha, &b = pt.b, &p = pt.p;
    Rational n(pt.n);
    DualPairResult out;
    out.pair = pair;
    out.inv_qd_prime = (2 * p - 1) * pair.inv_q;
    out.inv_rd_prime = (2 * p - 1) * pair.inv_r + (2 * b - alpha - 2 * s * (p - 1)) / n;
    out.rd_prime_in_range = out.inv_rd_prime > 0 && out.inv_rd_prime < 1;
    out.dual.inv_q = 1 - out.inv_qd_prime;
    out.dual.inv_r = 1 - out.inv_rd_prime;
    out.identity_ok = 2 * out.dual.inv_q + n * out.dual.inv_r == n / 2;
    out.dual_admissible = out.dual.is_admissible(pt.n);
    return out;
}

HolderSplit holder_splits(const ParameterPoint& pt, const Rational& n_over_r) {
    const Rational &s = pt.s, &alpha = pt.alpha, &b = pt.b, &p = pt.p;
    Rational n(pt.n);
    const Rational& u = n_over_r;
    HolderSplit hs;
    hs.inv_r1 = ((p - 1) * u + b - s * (p - 2)) / n;
    hs.inv_r3 = (p * u + b - alpha - s * p) / n;
    hs.inv_r5 = ((p - 1) * u + b - s * (p - 1)) / n;
    hs.inv_r7 = (p * u + b - alpha - s * (p - 1)) / n;

    hs.second_indices = {
        {"4(p+1)/(p+2)", 4 * (p + 1) / (p + 2)},
        {"4(p+1)/p", 4 * (p + 1) / p},
        {"4(p+1)/(p-1)", 4 * (p + 1) / (p - 1)},
        {"4(p+1)/(p+3)", 4 * (p + 1) / (p + 3)},
        {"2(2p-1)/(p-1)", 2 * (2 * p - 1) / (p - 1)},
        {"2(2p-1)/p", 2 * (2 * p - 1) / p},
        {"2(2p-1)/3", 2 * (2 * p - 1) / 3},
        {"2(2p-1)/(p-2)", std::nullopt},
    };
    if (p == 2) {
        hs.p2_degenerate = true;  // flagged, not a validity failure
    } else {
        hs.second_indices.back().value = 2 * (2 * p - 1) / (p - 2);
    }

    struct Named {
        const char* name;
        const Rational* inv;
        const char* low_tag;   // condition enforcing inv < 1 (upper bound on n/r)
        const char* high_tag;  // condition enforcing inv > 0 (lower bound on n/r)
    };
    const Named firsts[] = {
        {"r1", &hs.inv_r1, "2cc2", ""},
        {"r3", &hs.inv_r3, "2cc2", "2cc2"},
        {"r5", &hs.inv_r5, "2cc4", "2cc4"},
        {"r7", &hs.inv_r7, "2cc4", "2cc6"},
    };
    for (const auto& f : firsts) {
        if (*f.inv <= 0) {
            std::string v = std::string(f.name) + " not in (1, inf): 1/" + f.name + " <= 0";
            if (*f.high_tag) v += " (violates lower bound of " + std::string(f.high_tag) + ")";
            hs.violations.push_back(v);
        } else if (*f.inv >= 1) {
            std::string v = std::string(f.name) + " not in (1, inf): 1/" + f.name + " >= 1";
            if (*f.low_tag) v += " (violates upper bound of " + std::string(f.low_tag) + ")";
            hs.violations.push_back(v);
        }
    }
    hs.valid = hs.violations.empty();
    return hs;
}

GateReport wellposedness_gate(const ParameterPoint& pt) {
    GateReport rep;
    rep.point = pt;
    auto push = [&rep](const std::string& tag, bool ok, const std::string& detail) {
        rep.checks.push_back({tag, ok, detail});
    };

    push("as-1", check_alpha_range(pt.n, pt.alpha), "alpha = " + rational_str(pt.alpha) +
                                                        " vs range (max{(n-2)/3, n-4}, n)");
    ExponentWindow bw = b_window(pt.n, pt.s, pt.alpha);
    push("as-2", bw.contains(AlgebraicBound(pt.b)),
         "b = " + rational_str(pt.b) + " vs window " + bw.str());
    push("p>=2", pt.p >= 2, "p = " + rational_str(pt.p));

    RawConstraints rc = raw_constraint_windows(pt);
    for (const NamedCheck& side : rc.side_conditions) rep.checks.push_back(side);

    rep.window = r_window(pt);
    push("as-r", !rep.window.empty(),
         rep.window.empty() ? "empty window on n/r: lower bound " + rep.window.lo.str() +
                                  " meets upper bound " + rep.window.hi.str()
                            : "n/r window " + rep.window.str());

    if (!rep.window.empty()) {
        Rational mid = rep.window.midpoint_rational();
        AdmissiblePair sample = AdmissiblePair::from_n_over_r(pt.n, mid);
        rep.sample = sample;
        if (sample.is_admissible(pt.n)) {
            DualPairResult d = dual_pair(pt, sample);
            rep.dual = d;
            push("dual", d.rd_prime_in_range && d.identity_ok && d.dual_admissible,
                 "(q, r) = (" + sample.q_str() + ", " + sample.r_str() + "), dual (" +
                     d.dual.q_str() + ", " + d.dual.r_str() + ")");
        } else {
            push("dual", false, "sampled pair (" + sample.q_str() + ", " + sample.r_str() +
                                    ") is not admissible");
        }
        HolderSplit hsp = holder_splits(pt, mid);
        rep.split = hsp;
        std::string det = hsp.valid ? "split exponents in (1, inf)" : hsp.violations.front();
        if (hsp.p2_degenerate) det += "; p = 2 second index flagged (needs p > 2)";
        push("holder", hsp.valid, det);
    }

    rep.pass = true;
    for (const NamedCheck& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

GateReport wellposedness_gate(long n, const Rational& s, const Rational& alpha, const Rational& b,
                              int lambda) {
    // Structural failures (p <= 1, 2s >= n, ...) become named findings rather
    // than exceptions so scans can map the whole rectangle.
    try {
        return wellposedness_gate(ParameterPoint::critical(n, s, alpha, b, lambda));
    } catch (const std::domain_error& e) {
        GateReport rep;
        rep.point.n = n;
        rep.point.s = s;
        rep.point.alpha = alpha;
        rep.point.b = b;
        rep.point.lambda = lambda;
        rep.checks.push_back({"model", false, e.what()});
        rep.pass = false;
        return rep;
    }
}

ContainmentReport remark_containment_check(long n, const Rational& s, int grid_points) {
    if (grid_points < 100) throw std::invalid_argument("containment grid needs >= 100 points");
    if (n < 3) throw std::domain_error("dimension must be >= 3");
    if (s < 0 || 2 * s >= 1) throw std::domain_error("containment check needs 0 <= s < 1/2");
    ContainmentReport rep;
    rep.n = n;
    rep.s = s;
    Rational lo_as1 = Rational(n - 2) / 3 > Rational(n - 4) ? Rational(n - 2) / 3 : Rational(n - 4);
    rep.alpha_range_ok = lo_as1 < Rational(n - 2);
    rep.grid_points = grid_points;

    Rational m = n - 2 * s;
    Rational denom = Rational(8) * (n - 2);
    for (int j = 1; j <= grid_points; ++j) {
        Rational alpha = Rational(n - 2) + Rational(2 * j, grid_points + 1);
        alpha.canonicalize();
        AlgebraicBound as2_raw(alpha / 2 + 1 - m * (n + 4) / denom, -m / denom,
                               static_cast<unsigned long>(9 * n * n - 8 * n + 16));
        Rational pre_raw = (alpha - n) / 2 + Rational(n + 2) * s / n;
        // Clamped comparison max{0, as2_raw} <= max{0, pre_raw}.
        bool ok = as2_raw.sign() <= 0 || AlgebraicBound::compare(as2_raw, AlgebraicBound(pre_raw)) <= 0;
        if (!ok) {
            ++rep.failures;
            if (!rep.first_failure_alpha) rep.first_failure_alpha = alpha;
        }
    }
    rep.pass = rep.alpha_range_ok && rep.failures == 0;
    return rep;
}

}  // namespace hartree
