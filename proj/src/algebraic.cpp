#include "hartree/algebraic.hpp"

#include <cmath>
#include <stdexcept>

namespace hartree {

namespace {

// gmpxx provides sgn() for mpq_class expressions.

/** Exact sign of a + c*sqrt(d) for canonical (squarefree, non-square) d. */
int surd_sign(const Rational& a, const Rational& c, unsigned long d) {
    if (c == 0) return sgn(a);
    if (d == 0) return sgn(a);  // defensive; canonical form has c==0 here
    if (a == 0) return sgn(c);
    int sa = sgn(a), sc = sgn(c);
    if (sa == sc) return sa;
    // Opposite signs: |a| vs |c|*sqrt(d); square both (equality would force d
    // to be a perfect square, excluded by canonical form).
    Rational lhs = a * a, rhs = c * c * Rational(static_cast<long>(d));
    return lhs > rhs ? sa : sc;
}

}  // namespace

AlgebraicBound::AlgebraicBound(const Rational& a, const Rational& c, unsigned long d)
    : a_(a), c_(c), d_(d) {
    if (c_ == 0 || d_ == 0) {
        c_ = 0;
        d_ = 0;
        return;
    }
    // Pull square factors out of the radicand: d = k^2 * d' -> c *= k.
    unsigned long k = 1, rest = d_;
    for (unsigned long f = 2; f * f <= rest;) {
        if (rest % (f * f) == 0) {
            k *= f;
            rest /= f * f;
        } else {
            ++f;
        }
    }
    if (k > 1) {
        c_ *= Rational(static_cast<long>(k));
        d_ = rest;
    }
    if (d_ == 1) {
        a_ += c_;
        c_ = 0;
        d_ = 0;
    }
}

const Rational& AlgebraicBound::rational_value() const {
    if (!is_rational()) throw std::logic_error("algebraic bound is irrational: " + str());
    return a_;
}

int AlgebraicBound::sign() const { return surd_sign(a_, c_, d_); }

int AlgebraicBound::compare(const AlgebraicBound& x, const AlgebraicBound& y) {
    Rational a = x.a_ - y.a_;
    if (x.c_ == 0 && y.c_ == 0) return sgn(a);
    if (y.c_ == 0) return surd_sign(a, x.c_, x.d_);
    if (x.c_ == 0) return -surd_sign(-a, y.c_, y.d_);
    if (x.d_ == y.d_) return surd_sign(a, x.c_ - y.c_, x.d_);
    // Two distinct squarefree radicands: decide sign of L - R with
    // L = a + xc*sqrt(xd) and R = yc*sqrt(yd), via one more squaring.
    int sl = surd_sign(a, x.c_, x.d_);
    int sr = sgn(y.c_);
    if (sl != sr) {
        if (sl == 0) return -sr;
        if (sr == 0) return sl;
        return sl > sr ? 1 : -1;
    }
    // Same (nonzero) sign: compare L^2 vs R^2. L^2 carries a single surd:
    // (a^2 + xc^2*xd - yc^2*yd) + 2*a*xc*sqrt(xd). The surd term vanishes only
    // if a == 0, in which case the comparison below is purely rational and
    // cannot tie (distinct squarefree radicands).
    Rational body = a * a + x.c_ * x.c_ * Rational(static_cast<long>(x.d_)) -
                    y.c_ * y.c_ * Rational(static_cast<long>(y.d_));
    int s2 = surd_sign(body, 2 * a * x.c_, x.d_);
    return sl > 0 ? s2 : -s2;
}

AlgebraicBound AlgebraicBound::operator-() const { return AlgebraicBound(-a_, -c_, d_); }

AlgebraicBound AlgebraicBound::operator+(const AlgebraicBound& o) const {
    if (o.c_ == 0) return AlgebraicBound(a_ + o.a_, c_, d_);
    if (c_ == 0) return AlgebraicBound(a_ + o.a_, o.c_, o.d_);
    if (d_ != o.d_)
        throw std::invalid_argument("sum of incompatible surds: " + str() + " + " + o.str());
    return AlgebraicBound(a_ + o.a_, c_ + o.c_, d_);
}

AlgebraicBound AlgebraicBound::operator-(const AlgebraicBound& o) const { return *this + (-o); }

AlgebraicBound AlgebraicBound::operator*(const Rational& k) const {
    if (k == 0) return AlgebraicBound();
    return AlgebraicBound(a_ * k, c_ * k, d_);
}

AlgebraicBound AlgebraicBound::operator/(const Rational& k) const {
    if (k == 0) throw std::invalid_argument("division of algebraic bound by zero");
    return AlgebraicBound(a_ / k, c_ / k, d_);
}

double AlgebraicBound::approx() const {
    return a_.get_d() + c_.get_d() * std::sqrt(static_cast<double>(d_));
}

mpf_class AlgebraicBound::approx_mpf(unsigned prec_bits) const {
    mpf_class a(a_, prec_bits), c(c_, prec_bits), root(0, prec_bits);
    if (d_ != 0) {
        mpf_class d(static_cast<unsigned long>(d_), prec_bits);
        mpf_sqrt(root.get_mpf_t(), d.get_mpf_t());
    }
    return a + c * root;
}

std::string AlgebraicBound::str() const {
    if (is_rational()) return rational_str(a_);
    std::string surd = rational_str(c_) + "*sqrt(" + std::to_string(d_) + ")";
    if (a_ == 0) return surd;
    if (c_ > 0) return rational_str(a_) + " + " + surd;
    return rational_str(a_) + " - " + rational_str(-c_) + "*sqrt(" + std::to_string(d_) + ")";
}

}  // namespace hartree
