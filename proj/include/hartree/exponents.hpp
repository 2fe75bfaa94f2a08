#pragma once

#include "hartree/window.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hartree {

/** Critical powers derived from (n, s, alpha, b). */
struct CriticalExponents {
    Rational p;         // 1 + (2 - 2b + alpha)/(n - 2s)
    Rational s_c;       // n/2 - (2 - 2b + alpha)/(2(p - 1))
    Rational p_mass;    // power with s_c = 0:  1 + (alpha + 2 - 2b)/n
    Rational p_energy;  // power with s_c = 1:  1 + (2 - 2b + alpha)/(n - 2)
};

/** One parameter point of the model equation. p is the nonlinearity power and
 *  s_c the scaling-critical regularity; for critical() points s_c == s by
 *  construction. lambda = +1 defocusing, -1 focusing. */
struct ParameterPoint {
    long n = 3;
    Rational s, alpha, b;
    int lambda = 1;
    Rational p, s_c;

    /** Derives p from s via the criticality relation. Requires n >= 3,
     *  0 <= 2s < n, alpha > 0, b > 0 and 2 - 2b + alpha > 0 (so p > 1). */
    static ParameterPoint critical(long n, const Rational& s, const Rational& alpha,
                                   const Rational& b, int lambda = 1);
    /** Keeps s independent and derives s_c from the supplied power (p > 1). */
    static ParameterPoint with_power(long n, const Rational& s, const Rational& alpha,
                                     const Rational& b, const Rational& p, int lambda = 1);
};

CriticalExponents critical_exponents(long n, const Rational& s, const Rational& alpha,
                                     const Rational& b);

/** max{(n-2)/3, n-4} < alpha < n, both strict. */
bool check_alpha_range(long n, const Rational& alpha);

/** Range of admissible b at (n, s): strict lower bound
 *  max{0, alpha/2 + 1 - (n-2s)(n+4+sqrt(9n^2-8n+16))/(8(n-2))}, inclusive
 *  upper bound alpha/2 + 1 - (n-2s)/2. */
ExponentWindow b_window(long n, const Rational& s, const Rational& alpha);

/** Final admissibility window on n/r (both ends strict):
 *  max{s, s+(alpha-b)/p, n/2-2/(2p-1)} < n/r < min{(s(p-1)-b+n)/p, n/2-1/(2p-1)}. */
ExponentWindow r_window(const ParameterPoint& pt);

struct NamedWindow {
    std::string tag;
    ExponentWindow window;
};

struct NamedCheck {
    std::string tag;
    bool pass = false;
    std::string detail;
};

/** The individual constraint windows on n/r from the contraction-estimate
 *  chain, keyed by condition tag, plus the standalone side conditions. */
struct RawConstraints {
    std::vector<NamedWindow> windows;
    std::vector<NamedCheck> side_conditions;  // "cb": 0<b<n-s, "2cc10": s<alpha<n
};
RawConstraints raw_constraint_windows(const ParameterPoint& pt);

/** Audit that intersecting every raw window reproduces r_window (as open
 *  interiors; the admissible-range window is closed while the final one is
 *  strict). On mismatch, witness holds an n/r value in the symmetric
 *  difference. */
struct EquivalenceResult {
    bool pass = false;
    ExponentWindow raw_intersection, derived;
    std::optional<Rational> witness;
};
EquivalenceResult window_equivalence(const ParameterPoint& pt);

/** Supremum of treatable powers at dimension n:
 *  (5n - 4 + sqrt(9n^2 - 8n + 16))/(4(n - 2)). */
AlgebraicBound p_upper_bound(long n);

/** Space-time exponent pair held as exact inverse exponents, so q = infinity
 *  is just inv_q == 0. Admissible means 2/q + n/r == n/2 with
 *  2 <= q <= inf and 2 <= r <= 2n/(n-2). */
struct AdmissiblePair {
    Rational inv_q, inv_r;

    bool is_admissible(long n) const;
    std::string q_str() const;
    std::string r_str() const;
    /** Pair determined by n/r through the admissibility relation. */
    static AdmissiblePair from_n_over_r(long n, const Rational& n_over_r);
};

/** Dual pair construction: 1/q~' = (2p-1)/q and
 *  1/r~' = (2p-1)/r + (2b - alpha - 2s(p-1))/n, conjugated back to (q~, r~). */
struct DualPairResult {
    AdmissiblePair pair;                  // input
    Rational inv_qd_prime, inv_rd_prime;  // inverses of q~', r~'
    AdmissiblePair dual;                  // (q~, r~)
    bool rd_prime_in_range = false;       // r~' in (1, inf)
    bool identity_ok = false;             // 2/q~ + n/r~ == n/2 exactly
    bool dual_admissible = false;
};
DualPairResult dual_pair(const ParameterPoint& pt, const AdmissiblePair& pair);

struct SecondIndex {
    std::string label;
    std::optional<Rational> value;  // absent for the index degenerate at p = 2
};

/** Split exponents used by the nonlinearity estimates:
 *  1/r1 = (p-1)/r + (b - s(p-2))/n     1/r3 = p/r + (b - alpha - sp)/n
 *  1/r5 = (p-1)/r + (b - s(p-1))/n     1/r7 = p/r + (b - alpha - s(p-1))/n
 *  valid iff every first index lies strictly in (1, inf). */
struct HolderSplit {
    Rational inv_r1, inv_r3, inv_r5, inv_r7;
    std::vector<SecondIndex> second_indices;
    bool p2_degenerate = false;  // 2(2p-1)/(p-2) needs p > 2
    std::vector<std::string> violations;
    bool valid = false;
};
HolderSplit holder_splits(const ParameterPoint& pt, const Rational& n_over_r);

/** Full hypothesis gate. Every check is named; verdict is the conjunction.
 *  When the window is nonempty the midpoint n/r is sampled and the dual pair
 *  and split exponents are evaluated there. */
struct GateReport {
    ParameterPoint point;
    std::vector<NamedCheck> checks;
    ExponentWindow window;
    std::optional<AdmissiblePair> sample;
    std::optional<DualPairResult> dual;
    std::optional<HolderSplit> split;
    bool pass = false;
};
GateReport wellposedness_gate(const ParameterPoint& pt);
GateReport wellposedness_gate(long n, const Rational& s, const Rational& alpha, const Rational& b,
                              int lambda = 1);

/** Exact audit of the range-containment remark: on a rational alpha-grid in
 *  (n-2, n), the clamped lower b-bound never exceeds the clamped reference
 *  bound max{0, (alpha-n)/2 + (n+2)s/n}. */
struct ContainmentReport {
    long n = 0;
    Rational s;
    bool alpha_range_ok = false;  // max{(n-2)/3, n-4} < n-2 exactly
    int grid_points = 0;
    int failures = 0;
    std::optional<Rational> first_failure_alpha;
    bool pass = false;
};
ContainmentReport remark_containment_check(long n, const Rational& s, int grid_points = 128);

}  // namespace hartree
