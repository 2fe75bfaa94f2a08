#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hartree/algebraic.hpp"
#include "hartree/exponents.hpp"
#include "hartree/rational.hpp"
#include "hartree/sampling.hpp"
#include "hartree/window.hpp"

#include <cmath>
#include <random>

using namespace hartree;

namespace {

// mt19937_64 raw output is pinned by the standard, so modulo draws are
// reproducible everywhere (uniform_int_distribution is not).
struct Rng {
    std::mt19937_64 g;
    explicit Rng(unsigned long seed) : g(seed) {}
    long pick(long lo, long hi) { return lo + static_cast<long>(g() % static_cast<unsigned long>(hi - lo + 1)); }
    Rational rational(long max_num, long max_den) {
        Rational q(pick(-max_num, max_num), pick(1, max_den));
        q.canonicalize();
        return q;
    }
};

mpf_class mpf_value(const AlgebraicBound& x) { return x.approx_mpf(256); }

const NamedCheck& find_check(const GateReport& rep, const std::string& tag) {
    for (const NamedCheck& c : rep.checks)
        if (c.tag == tag) return c;
    FAIL("missing check tag ", tag);
    static NamedCheck dummy;
    return dummy;
}

const ExponentWindow& find_window(const RawConstraints& rc, const std::string& tag) {
    for (const NamedWindow& w : rc.windows)
        if (w.tag == tag) return w.window;
    FAIL("missing window tag ", tag);
    static ExponentWindow dummy;
    return dummy;
}

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(*parse_rational("3") == rat(3));
    CHECK(*parse_rational("-7/4") == rat(-7, 4));
    CHECK(*parse_rational("1.25") == rat(5, 4));
    CHECK(*parse_rational("0.49") == rat(49, 100));
    CHECK(*parse_rational("6/4") == rat(3, 2));  // canonicalized
    CHECK(*parse_rational(".5") == rat(1, 2));
    CHECK(!parse_rational("0.1/3"));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational(""));
    CHECK(!parse_rational("1."));
    CHECK(!parse_rational("two"));
    CHECK(rational_str(rat(-3, 7)) == "-3/7");
    CHECK(rational_str(rat(4)) == "4");
}

TEST_CASE("algebraic bound canonical form") {
    AlgebraicBound x(rat(0), rat(1), 128);  // sqrt(128) = 8*sqrt(2)
    CHECK(x.radicand() == 2);
    CHECK(x.surd_coeff() == rat(8));
    AlgebraicBound y(rat(0), rat(1), 4);  // perfect square collapses
    CHECK(y.is_rational());
    CHECK(y.rational_value() == rat(2));
    AlgebraicBound z(rat(1), rat(3), 50);  // sqrt(50) = 5*sqrt(2)
    CHECK(z.radicand() == 2);
    CHECK(z.surd_coeff() == rat(15));
    CHECK(AlgebraicBound(rat(5), rat(7), 0).is_rational());
    CHECK(AlgebraicBound(rat(5), rat(7), 1).rational_value() == rat(12));
    // Same value built two ways compares equal.
    CHECK(AlgebraicBound(rat(1, 2), rat(2), 3) == AlgebraicBound(rat(1, 2), rat(1), 12));
}

TEST_CASE("algebraic bound signs and ordering") {
    CHECK(AlgebraicBound(rat(9, 8), rat(-1, 8), 73).sign() == 1);   // 9 > sqrt(73)
    CHECK(AlgebraicBound(rat(1), rat(-1, 8), 73).sign() == -1);     // 8 < sqrt(73)
    CHECK(AlgebraicBound(rat(-3), rat(1), 9).sign() == 0);          // -3 + 3
    CHECK(AlgebraicBound().sign() == 0);
    CHECK(AlgebraicBound(rat(0), rat(1), 2) < AlgebraicBound(rat(0), rat(1), 3));
    CHECK(AlgebraicBound(rat(1), rat(1), 2) < AlgebraicBound(rat(0), rat(1), 6));   // 2.414 < 2.449
    CHECK(AlgebraicBound(rat(3), rat(1), 2) > AlgebraicBound(rat(2), rat(1), 5));   // 4.414 > 4.236
    CHECK(AlgebraicBound(rat(1, 3), rat(2, 5), 7) == AlgebraicBound(rat(1, 3), rat(2, 5), 7));
    double v = AlgebraicBound(rat(11, 4), rat(1, 4), 73).approx();
    CHECK(std::abs(v - (11.0 + std::sqrt(73.0)) / 4.0) < 1e-12);
}

TEST_CASE("algebraic comparison agrees with 256-bit floating evaluation") {
    Rng rng(20240817);
    int checked = 0;
    for (int i = 0; i < 100000; ++i) {
        AlgebraicBound x(rng.rational(60, 20), rng.rational(20, 12), static_cast<unsigned long>(rng.pick(0, 150)));
        // Half the draws compare against a plain rational, half against another surd.
        AlgebraicBound y = (i % 2 == 0)
                               ? AlgebraicBound(rng.rational(80, 20))
                               : AlgebraicBound(rng.rational(60, 20), rng.rational(20, 12),
                                                static_cast<unsigned long>(rng.pick(0, 150)));
        int exact = AlgebraicBound::compare(x, y);
        mpf_class diff(0, 256);
        diff = mpf_value(x) - mpf_value(y);
        int approx = sgn(diff);
        if (approx == 0) {
            // Zero float difference at this precision means genuinely equal
            // inputs (bounded-height surds cannot collide that closely).
            CHECK(exact == 0);
        } else {
            CHECK(exact == approx);
        }
        ++checked;
    }
    CHECK(checked == 100000);
    // Engineered ties, including cross-representation ones.
    for (int k = 1; k <= 50; ++k) {
        Rational a(k, 7);
        a.canonicalize();
        CHECK(AlgebraicBound(a, rat(k), 45) == AlgebraicBound(a, rat(3 * k), 5));
        CHECK(AlgebraicBound::compare(AlgebraicBound(a, rat(-k), 45), AlgebraicBound(a, rat(-3 * k), 5)) == 0);
    }
}

TEST_CASE("window algebra") {
    ExponentWindow a(rat(1), rat(2), false, false);  // [1, 2]
    ExponentWindow b(rat(1), rat(3), true, true);    // (1, 3)
    ExponentWindow c = ExponentWindow::intersect(a, b);
    CHECK(c.lo == AlgebraicBound(rat(1)));
    CHECK(c.lo_strict);  // strictness wins on endpoint ties
    CHECK(c.hi == AlgebraicBound(rat(2)));
    CHECK(!c.hi_strict);
    CHECK(!c.empty());
    CHECK(c.contains(AlgebraicBound(rat(2))));
    CHECK(!c.contains(AlgebraicBound(rat(1))));

    ExponentWindow point(rat(1), rat(1), false, false);
    CHECK(!point.empty());
    CHECK(ExponentWindow(rat(1), rat(1), true, false).empty());
    CHECK(ExponentWindow(rat(2), rat(1), false, false).empty());

    ExponentWindow empty(rat(2), rat(1));
    CHECK(ExponentWindow::intersect(empty, b).empty());

    CHECK(c.midpoint_rational() == rat(3, 2));
    CHECK(a.same_interior(ExponentWindow(rat(1), rat(2), true, true)));
    CHECK(!a.same_interior(b));
}

TEST_CASE("window emptiness matches high-precision float on random instances") {
    Rng rng(777);
    for (int i = 0; i < 10000; ++i) {
        AlgebraicBound lo(rng.rational(40, 12), rng.rational(10, 8), static_cast<unsigned long>(rng.pick(0, 80)));
        AlgebraicBound hi(rng.rational(40, 12), rng.rational(10, 8), static_cast<unsigned long>(rng.pick(0, 80)));
        bool lo_strict = rng.pick(0, 1) == 1, hi_strict = rng.pick(0, 1) == 1;
        ExponentWindow w(lo, hi, lo_strict, hi_strict);
        mpf_class diff(0, 256);
        diff = mpf_value(hi) - mpf_value(lo);
        bool float_empty = sgn(diff) < 0 || (sgn(diff) == 0 && (lo_strict || hi_strict));
        CHECK(w.empty() == float_empty);
        // Intersection properties on the same draws.
        ExponentWindow u(lo, hi, false, false);
        CHECK(ExponentWindow::intersect(u, u) == u);
        ExponentWindow v(hi, lo, lo_strict, hi_strict);
        CHECK(ExponentWindow::intersect(u, v) == ExponentWindow::intersect(v, u));
    }
}

TEST_CASE("critical exponents at the worked points") {
    CriticalExponents ce = critical_exponents(3, rat(0), rat(2), rat(1, 2));
    CHECK(ce.p == rat(2));
    CHECK(ce.s_c == rat(0));
    CHECK(ce.p_mass == rat(2));
    CHECK(ce.p_energy == rat(4));

    ParameterPoint pt = ParameterPoint::critical(3, rat(1), rat(6, 5), rat(1));
    CHECK(pt.p == rat(11, 5));
    CHECK(pt.s_c == rat(1));
    // Round trip through the s_c formula.
    CHECK(ParameterPoint::with_power(3, rat(1), rat(6, 5), rat(1), pt.p).s_c == rat(1));

    // p = p_* forces s_c = 0 regardless of which s the point carries.
    for (long n = 3; n <= 6; ++n)
        for (long num = 1; num < 2 * n; ++num) {
            Rational alpha(num, 2);
            alpha.canonicalize();
            if (alpha >= n) continue;
            Rational bb = rat(1, 3);
            if (2 - 2 * bb + alpha <= 0) continue;
            CriticalExponents c2 = critical_exponents(n, rat(1, 2), alpha, bb);
            CHECK(ParameterPoint::with_power(n, rat(1, 2), alpha, bb, c2.p_mass).s_c == rat(0));
            CHECK(ParameterPoint::with_power(n, rat(1, 2), alpha, bb, c2.p_energy).s_c == rat(1));
            // Round trip on the derived point.
            ParameterPoint q = ParameterPoint::critical(n, rat(1, 2), alpha, bb);
            CHECK(ParameterPoint::with_power(n, rat(1, 2), alpha, bb, q.p).s_c == rat(1, 2));
        }

    CHECK_THROWS_AS(ParameterPoint::critical(3, rat(3, 2), rat(2), rat(1, 2)), std::domain_error);
    CHECK_THROWS_AS(ParameterPoint::critical(3, rat(1), rat(1, 2), rat(5, 4)), std::domain_error);
    CHECK_THROWS_AS(ParameterPoint::with_power(3, rat(0), rat(2), rat(1, 2), rat(1)), std::domain_error);
    CHECK_THROWS_AS(critical_exponents(2, rat(0), rat(1), rat(1, 2)), std::domain_error);
}

TEST_CASE("alpha range condition") {
    CHECK(check_alpha_range(3, rat(2)));
    CHECK(!check_alpha_range(6, rat(2)));  // n-4 = 2 not strictly below alpha
    CHECK(!check_alpha_range(3, rat(1, 3)));
    CHECK(!check_alpha_range(3, rat(3)));
    CHECK(check_alpha_range(6, rat(5, 2)));
    CHECK(check_alpha_range(10, rat(13, 2)));
    CHECK(!check_alpha_range(10, rat(6)));
}

TEST_CASE("b window") {
    ExponentWindow w = b_window(3, rat(1), rat(2));
    CHECK(w.lo == AlgebraicBound(rat(9, 8), rat(-1, 8), 73));  // 2 - (7+sqrt(73))/8
    CHECK(w.lo_strict);
    CHECK(std::abs(w.lo.approx() - 0.0570) < 5e-4);
    CHECK(w.hi == AlgebraicBound(rat(3, 2)));
    CHECK(!w.hi_strict);

    ExponentWindow w0 = b_window(3, rat(0), rat(2));
    CHECK(w0.lo == AlgebraicBound(rat(0)));  // raw bound negative, clamped
    CHECK(w0.hi == AlgebraicBound(rat(1, 2)));
    CHECK(!w0.hi_strict);
    // Raw bound really is negative there: 2 - 3(7+sqrt(73))/8 = -5/8 - (3/8)sqrt(73).
    CHECK(AlgebraicBound(rat(-5, 8), rat(-3, 8), 73).sign() < 0);

    // Inclusive upper endpoint is exactly the p = 2 line.
    CHECK(ParameterPoint::critical(3, rat(0), rat(2), rat(1, 2)).p == rat(2));
    CHECK(ParameterPoint::critical(3, rat(1), rat(2), rat(3, 2)).p == rat(2));

    // The lower bound is the image of the p upper bound under p -> b:
    // solving p(b) = p_up for b reproduces the raw (as-2) bound exactly.
    for (long n : {3L, 4L, 5L, 6L}) {
        for (const Rational& s : {rat(0), rat(1, 2), rat(1)}) {
            Rational alpha = rat(2 * n - 1, 2);
            AlgebraicBound from_p = AlgebraicBound(alpha / 2 + 1) +
                                    (p_upper_bound(n) - AlgebraicBound(rat(1))) * (-(n - 2 * s) / rat(2));
            ExponentWindow bw = b_window(n, s, alpha);
            if (from_p.sign() > 0)
                CHECK(bw.lo == from_p);
            else
                CHECK(bw.lo == AlgebraicBound(rat(0)));  // clamped
        }
    }
}

TEST_CASE("r window at the worked points") {
    ParameterPoint a = ParameterPoint::critical(3, rat(1), rat(6, 5), rat(1));
    ExponentWindow wa = r_window(a);
    CHECK(wa.lo == AlgebraicBound(rat(12, 11)));
    CHECK(wa.hi == AlgebraicBound(rat(41, 34)));
    CHECK(wa.lo_strict);
    CHECK(wa.hi_strict);
    CHECK(!wa.empty());

    ParameterPoint bpt = ParameterPoint::critical(3, rat(0), rat(2), rat(1, 2));
    ExponentWindow wb = r_window(bpt);
    CHECK(wb.lo == AlgebraicBound(rat(5, 6)));
    CHECK(wb.hi == AlgebraicBound(rat(7, 6)));

    ParameterPoint c = ParameterPoint::critical(3, rat(1), rat(2), rat(1));
    CHECK(c.p == rat(3));
    ExponentWindow wc = r_window(c);
    CHECK(wc.empty());
    CHECK(wc.lo == AlgebraicBound(rat(4, 3)));
    CHECK(wc.hi == AlgebraicBound(rat(13, 10)));
}

TEST_CASE("raw constraint windows") {
    ParameterPoint pt = ParameterPoint::critical(3, rat(0), rat(2), rat(1, 2));
    RawConstraints rc = raw_constraint_windows(pt);

    const ExponentWindow& w1 = find_window(rc, "2cc1");
    CHECK(w1.lo == AlgebraicBound(rat(5, 6)));
    CHECK(w1.hi == AlgebraicBound(rat(7, 6)));
    CHECK(!w1.lo_strict);  // admissible-range window is closed
    CHECK(!w1.hi_strict);

    const ExponentWindow& wr2 = find_window(rc, "r2");
    CHECK(wr2.lo == AlgebraicBound(rat(3, 4)));
    CHECK(wr2.hi == AlgebraicBound(rat(5, 4)));
    CHECK(wr2.lo_strict);
    CHECK(wr2.hi_strict);

    // Side condition (cb) violated when b >= n - s.
    ParameterPoint bad = ParameterPoint::critical(3, rat(1), rat(5, 2), rat(2));
    RawConstraints rc2 = raw_constraint_windows(bad);
    bool cb_pass = true;
    for (const NamedCheck& sc : rc2.side_conditions)
        if (sc.tag == "cb") cb_pass = sc.pass;
    CHECK(!cb_pass);
}

TEST_CASE("window equivalence oracle at the worked points") {
    EquivalenceResult ra = window_equivalence(ParameterPoint::critical(3, rat(0), rat(2), rat(1, 2)));
    CHECK(ra.pass);
    CHECK(ra.raw_intersection.same_interior(ExponentWindow(rat(5, 6), rat(7, 6))));

    EquivalenceResult rb = window_equivalence(ParameterPoint::critical(3, rat(1), rat(6, 5), rat(1)));
    CHECK(rb.pass);
    CHECK(rb.raw_intersection.same_interior(ExponentWindow(rat(12, 11), rat(41, 34))));
}

TEST_CASE("p upper bound") {
    AlgebraicBound p3 = p_upper_bound(3);
    CHECK(p3 == AlgebraicBound(rat(11, 4), rat(1, 4), 73));
    CHECK(std::abs(p3.approx() - 4.886) < 1e-3);
    AlgebraicBound p4 = p_upper_bound(4);
    CHECK(p4 == AlgebraicBound(rat(2), rat(1), 2));  // (16+sqrt(128))/8 = 2+sqrt(2)
    CHECK(std::abs(p4.approx() - 3.414) < 1e-3);
}

TEST_CASE("dual pair at the worked points") {
    ParameterPoint pt = ParameterPoint::critical(3, rat(0), rat(2), rat(1, 2));
    AdmissiblePair qr{rat(1, 4), rat(1, 3)};
    CHECK(qr.is_admissible(3));
    DualPairResult d = dual_pair(pt, qr);
    CHECK(d.inv_qd_prime == rat(3, 4));  // q~' = 4/3
    CHECK(d.inv_rd_prime == rat(2, 3));  // r~' = 3/2
    CHECK(d.dual.inv_q == rat(1, 4));    // self-dual
    CHECK(d.dual.inv_r == rat(1, 3));
    CHECK(d.rd_prime_in_range);
    CHECK(d.identity_ok);
    CHECK(d.dual_admissible);
    CHECK(d.dual.q_str() == "4");
    CHECK(d.dual.r_str() == "3");

    ParameterPoint pt2 = ParameterPoint::critical(3, rat(1), rat(6, 5), rat(1));
    AdmissiblePair qr2 = AdmissiblePair::from_n_over_r(3, rat(23, 20));
    CHECK(qr2.inv_q == rat(7, 40));
    DualPairResult d2 = dual_pair(pt2, qr2);
    CHECK(d2.inv_qd_prime == rat(119, 200));
    CHECK(d2.inv_rd_prime == rat(77, 100));
    CHECK(2 * d2.dual.inv_q + 3 * d2.dual.inv_r == rat(3, 2));
    CHECK(d2.identity_ok);

    // Endpoint input (q, r) = (inf, 2): computation proceeds, the dual fails
    // admissibility (q~ = 1) while the scaling identity still holds exactly.
    AdmissiblePair endpoint{rat(0), rat(1, 2)};
    CHECK(endpoint.is_admissible(3));
    CHECK(endpoint.q_str() == "inf");
    DualPairResult d3 = dual_pair(pt, endpoint);
    CHECK(d3.inv_qd_prime == rat(0));
    CHECK(d3.inv_rd_prime == rat(7, 6));  // r~' = 6/7, outside (1, inf)
    CHECK(!d3.rd_prime_in_range);
    CHECK(d3.identity_ok);
    CHECK(!d3.dual_admissible);

    AdmissiblePair not_adm{rat(1, 4), rat(1, 4)};
    CHECK(!not_adm.is_admissible(3));
    CHECK_THROWS_AS(dual_pair(pt, not_adm), std::invalid_argument);
}

TEST_CASE("holder splits at the worked point") {
    ParameterPoint pt = ParameterPoint::critical(3, rat(0), rat(2), rat(1, 2));
    HolderSplit hs = holder_splits(pt, rat(1));  // r = 3
    CHECK(hs.inv_r1 == rat(1, 2));
    CHECK(hs.inv_r3 == rat(1, 6));
    CHECK(hs.inv_r5 == rat(1, 2));
    CHECK(hs.inv_r7 == rat(1, 6));
    CHECK(hs.valid);

    // Split identities: both sums equal 1/r~'.
    DualPairResult d = dual_pair(pt, AdmissiblePair::from_n_over_r(3, rat(1)));
    CHECK(hs.inv_r1 + hs.inv_r3 == d.inv_rd_prime);
    CHECK(hs.inv_r5 + hs.inv_r7 == d.inv_rd_prime);

    // Second indices at p = 2, in the listed family order.
    REQUIRE(hs.second_indices.size() == 8);
    CHECK(hs.second_indices[0].label == "4(p+1)/(p+2)");
    CHECK(*hs.second_indices[0].value == rat(3));
    CHECK(*hs.second_indices[1].value == rat(6));
    CHECK(*hs.second_indices[2].value == rat(12));
    CHECK(*hs.second_indices[3].value == rat(12, 5));
    CHECK(*hs.second_indices[4].value == rat(6));
    CHECK(*hs.second_indices[5].value == rat(3));
    CHECK(*hs.second_indices[6].value == rat(2));
    CHECK(hs.second_indices[7].label == "2(2p-1)/(p-2)");
    CHECK(!hs.second_indices[7].value.has_value());
    CHECK(hs.p2_degenerate);

    // p > 2 fills in the last index and drops the flag.
    ParameterPoint pt2 = ParameterPoint::critical(3, rat(1), rat(6, 5), rat(1));
    HolderSplit hs2 = holder_splits(pt2, rat(23, 20));
    CHECK(!hs2.p2_degenerate);
    CHECK(hs2.second_indices[7].value.has_value());
    CHECK(*hs2.second_indices[7].value == 2 * (2 * pt2.p - 1) / (pt2.p - 2));
    DualPairResult d2 = dual_pair(pt2, AdmissiblePair::from_n_over_r(3, rat(23, 20)));
    CHECK(hs2.inv_r1 + hs2.inv_r3 == d2.inv_rd_prime);
    CHECK(hs2.inv_r5 + hs2.inv_r7 == d2.inv_rd_prime);

    // Out-of-window sample produces a named violation.
    HolderSplit bad = holder_splits(pt, rat(3));
    CHECK(!bad.valid);
    CHECK(!bad.violations.empty());
}

TEST_CASE("theorem gate on the three reference points") {
    GateReport g1 = wellposedness_gate(3, rat(0), rat(2), rat(1, 2));
    CHECK(g1.pass);
    CHECK(find_check(g1, "as-1").pass);
    CHECK(find_check(g1, "as-2").pass);
    CHECK(find_check(g1, "as-r").pass);
    CHECK(g1.window.lo == AlgebraicBound(rat(5, 6)));
    CHECK(g1.window.hi == AlgebraicBound(rat(7, 6)));
    REQUIRE(g1.sample.has_value());
    CHECK(g1.sample->q_str() == "4");
    CHECK(g1.sample->r_str() == "3");
    REQUIRE(g1.dual.has_value());
    CHECK(g1.dual->dual.q_str() == "4");  // self-dual
    CHECK(g1.dual->dual.r_str() == "3");

    GateReport g2 = wellposedness_gate(3, rat(1), rat(6, 5), rat(1));
    CHECK(g2.pass);
    CHECK(g2.window.lo == AlgebraicBound(rat(12, 11)));
    CHECK(g2.window.hi == AlgebraicBound(rat(41, 34)));

    GateReport g3 = wellposedness_gate(3, rat(1), rat(2), rat(1));
    CHECK(!g3.pass);
    CHECK(find_check(g3, "as-1").pass);
    CHECK(find_check(g3, "as-2").pass);
    CHECK(!find_check(g3, "as-r").pass);  // named empty-window finding
    CHECK(find_check(g3, "as-r").detail.find("empty") != std::string::npos);

    GateReport g4 = wellposedness_gate(3, rat(0), rat(1, 4), rat(1, 10));
    CHECK(!g4.pass);
    CHECK(!find_check(g4, "as-1").pass);
}

TEST_CASE("gate handles structurally degenerate parameters as findings") {
    GateReport g = wellposedness_gate(3, rat(0), rat(1, 2), rat(3, 2));  // 2-2b+alpha = 0
    CHECK(!g.pass);
    REQUIRE(!g.checks.empty());
    CHECK(g.checks.front().tag == "model");
}

TEST_CASE("remark containment across the claimed range") {
    for (long n = 3; n <= 10; ++n)
        for (const Rational& s : {rat(0), rat(1, 4), rat(49, 100)}) {
            ContainmentReport rep = remark_containment_check(n, s, 128);
            CHECK(rep.alpha_range_ok);
            CHECK(rep.failures == 0);
            CHECK(rep.pass);
        }
    CHECK_THROWS_AS(remark_containment_check(3, rat(1, 2), 128), std::domain_error);
    CHECK_THROWS_AS(remark_containment_check(3, rat(0), 50), std::invalid_argument);
}

TEST_CASE("sampled gate-passing points satisfy the elimination audit and dual identities") {
    std::vector<ParameterPoint> pool = gate_passing_points(200);
    REQUIRE(pool.size() == 200);
    Rng rng(991);
    for (const ParameterPoint& pt : pool) {
        CHECK(pt.p >= rat(2));
        EquivalenceResult eq = window_equivalence(pt);
        CHECK(eq.pass);
        ExponentWindow w = r_window(pt);
        REQUIRE(!w.empty());
        const Rational lo = w.lo.rational_value(), hi = w.hi.rational_value();
        for (int k = 0; k < 5; ++k) {
            long K = rng.pick(1, 40);
            Rational u = lo + (hi - lo) * Rational(rng.pick(1, K), K + 1);
            u.canonicalize();
            if (!(u > lo && u < hi)) continue;  // endpoint draws excluded
            AdmissiblePair pr = AdmissiblePair::from_n_over_r(pt.n, u);
            DualPairResult d = dual_pair(pt, pr);
            CHECK(d.identity_ok);
            CHECK(d.rd_prime_in_range);
            HolderSplit hs = holder_splits(pt, u);
            CHECK(hs.valid);
            CHECK(hs.inv_r1 + hs.inv_r3 == d.inv_rd_prime);
            CHECK(hs.inv_r5 + hs.inv_r7 == d.inv_rd_prime);
        }
    }
}

TEST_CASE("raw windows all contain the derived window") {
    for (const ParameterPoint& pt : gate_passing_points(60)) {
        ExponentWindow target = r_window(pt);
        Rational mid = target.midpoint_rational();
        RawConstraints rc = raw_constraint_windows(pt);
        for (const NamedWindow& nw : rc.windows) {
            INFO("window ", nw.tag);
            CHECK(nw.window.contains(AlgebraicBound(mid)));
        }
        for (const NamedCheck& sc : rc.side_conditions) {
            INFO("side ", sc.tag);
            CHECK(sc.pass);
        }
    }
}
