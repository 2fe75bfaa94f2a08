#pragma once

#include "hartree/rational.hpp"

#include <string>

namespace hartree {

/** Exact number of the form a + c*sqrt(d), a and c rational, d a non-negative
 *  integer. Canonical form: square factors of d are folded into c, so the
 *  stored d is squarefree; if the surd collapses to a rational it is stored
 *  with c == 0, d == 0. Comparisons are exact, by sign analysis and squaring
 *  (at most twice) -- no floating point anywhere.
 *
 *  Sums of two incompatible surds are not representable and throw; the window
 *  algebra never needs them (every derived bound carries at most one radical).
 */
class AlgebraicBound {
  public:
    AlgebraicBound() : a_(0), c_(0), d_(0) {}
    AlgebraicBound(const Rational& value) : a_(value), c_(0), d_(0) {}  // NOLINT: implicit by design
    AlgebraicBound(long value) : a_(rat(value)), c_(0), d_(0) {}        // NOLINT
    AlgebraicBound(const Rational& a, const Rational& c, unsigned long d);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_coeff() const { return c_; }
    unsigned long radicand() const { return d_; }
    bool is_rational() const { return c_ == 0; }
    /** Throws unless is_rational(). */
    const Rational& rational_value() const;

    /** Exact sign: -1, 0, +1. */
    int sign() const;
    /** Exact three-way comparison (works across different radicands). */
    static int compare(const AlgebraicBound& x, const AlgebraicBound& y);

    bool operator==(const AlgebraicBound& o) const { return compare(*this, o) == 0; }
    bool operator!=(const AlgebraicBound& o) const { return compare(*this, o) != 0; }
    bool operator<(const AlgebraicBound& o) const { return compare(*this, o) < 0; }
    bool operator<=(const AlgebraicBound& o) const { return compare(*this, o) <= 0; }
    bool operator>(const AlgebraicBound& o) const { return compare(*this, o) > 0; }
    bool operator>=(const AlgebraicBound& o) const { return compare(*this, o) >= 0; }

    AlgebraicBound operator-() const;
    AlgebraicBound operator+(const AlgebraicBound& o) const;  // throws on incompatible surds
    AlgebraicBound operator-(const AlgebraicBound& o) const;
    AlgebraicBound operator*(const Rational& k) const;
    AlgebraicBound operator/(const Rational& k) const;

    double approx() const;
    /** High-precision evaluation, used by tests to cross-check comparisons. */
    mpf_class approx_mpf(unsigned prec_bits = 256) const;

    std::string str() const;

  private:
    Rational a_, c_;
    unsigned long d_;
};

}  // namespace hartree
