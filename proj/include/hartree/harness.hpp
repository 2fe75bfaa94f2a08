#pragma once

#include "hartree/exponents.hpp"
#include "hartree/fields.hpp"
#include "hartree/lorentz.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hartree {

/** Per-function Lorentz identity checks: the power identity
 *  || |f|^r ||_{p,q} = ||f||^r_{pr,qr} (exact on step profiles) and the
 *  second-index nesting ratio ||f||_{p,r} / ||f||_{p,q} for q <= r. */
struct IdentityReport {
    double power_residual = 0.0;  // relative
    double nesting_ratio = 0.0;
    bool pass = false;  // residual < 1e-10 and ratio finite
};
IdentityReport lorentz_identity_suite(const GridFunction& f, double p, double q, double r);

/** One measured inequality instance at one dilation. */
struct RatioRow {
    std::string field;  // family member or pair name
    double delta = 1.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

/** Family-wide stress report for one inequality: LHS/RHS ratios over the
 *  test-function family and the dilation ladder (matched grids: same samples,
 *  box scaled by 1/delta).  The exponent hypotheses are verified exactly in
 *  rational arithmetic before any norm is touched; violations throw with the
 *  offending relation named.  Verdict: every ratio finite and the per-family
 *  spread across dilations within 10%. */
struct HarnessReport {
    std::string lemma;
    std::vector<RatioRow> rows;
    std::vector<NamedCheck> checks;
    double sup_ratio = 0.0;
    double max_variation = 1.0;  // max over fields of max/min ratio
    bool pass = false;
};

/** Exponents are Rationals; 0 encodes infinity (valid second indices only).
 *  holder: ||fg||_{p,q} <= C ||f||_{p1,q1} ||g||_{p2,q2},
 *          1/p = 1/p1 + 1/p2 and 1/q = 1/q1 + 1/q2. */
HarnessReport holder_harness(const GridSpec& g, const Rational& p1, const Rational& q1,
                             const Rational& p2, const Rational& q2, std::uint64_t seed);

/** hls: ||I_alpha * f||_{q,d} <= C ||f||_{p,d} with 1/q = 1/p - alpha/n,
 *  1 < p < q < infinity; evaluated on mean-free fields (the grid operator
 *  annihilates the zero mode). */
HarnessReport hls_harness(const GridSpec& g, const Rational& alpha, const Rational& p,
                          const Rational& second, std::uint64_t seed);

/** sobolev: ||f||_{p1,q} <= C ||(-Delta)^{s/2} f||_{p,q} with
 *  1/p1 = 1/p - s/n, 0 <= s < n/p (s = 0 degenerates to ratio 1). */
HarnessReport sobolev_harness(const GridSpec& g, const Rational& s, const Rational& p,
                              const Rational& second, std::uint64_t seed);

/** Qualitative product/chain-rule stress rows (bounded-ratio checks only,
 *  no constants): Leibniz splits (-Delta)^{s/2}(fg), chain uses F(u)=|u|^2 u. */
HarnessReport leibniz_stress(const GridSpec& g, double s, std::uint64_t seed);
HarnessReport chain_stress(const GridSpec& g, double s, std::uint64_t seed);

/** The closed-form indicator example for the Holder harness: with
 *  p1 = p2 = 4, q1 = q2 = 2 and f = g a ball indicator, the measured ratio
 *  equals 1 exactly (both sides reduce to the same step-profile values). */
NamedCheck holder_indicator_example(const GridSpec& g);

/** Named closed-form identity checks: random-profile indicator norms against
 *  m^{1/p}(p/q)^{1/q}, the grid ball indicator, the weak norm of the
 *  truncated |x|^{-1} against omega_3^{1/3}, the power identity across the
 *  field family, and nesting-ratio dilation invariance. */
struct IdentitySuiteReport {
    std::vector<NamedCheck> checks;
    double max_indicator_residual = 0.0;
    double weak_norm_rel_error = 0.0;
    double max_power_residual = 0.0;
    double max_nesting_drift = 0.0;
    bool pass = false;
};
IdentitySuiteReport identity_suite(const GridSpec& g, std::uint64_t seed, int draws = 100);

}  // namespace hartree
