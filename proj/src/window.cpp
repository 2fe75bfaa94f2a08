#include "hartree/window.hpp"

#include <stdexcept>

namespace hartree {

bool ExponentWindow::empty() const {
    int c = AlgebraicBound::compare(lo, hi);
    if (c > 0) return true;
    if (c == 0) return lo_strict || hi_strict;
    return false;
}

bool ExponentWindow::contains(const AlgebraicBound& x) const {
    int cl = AlgebraicBound::compare(x, lo);
    if (cl < 0 || (cl == 0 && lo_strict)) return false;
    int ch = AlgebraicBound::compare(x, hi);
    if (ch > 0 || (ch == 0 && hi_strict)) return false;
    return true;
}

bool ExponentWindow::operator==(const ExponentWindow& o) const {
    return lo == o.lo && hi == o.hi && lo_strict == o.lo_strict && hi_strict == o.hi_strict;
}

bool ExponentWindow::same_interior(const ExponentWindow& o) const {
    bool e1 = empty(), e2 = o.empty();
    if (e1 || e2) return e1 == e2;
    return lo == o.lo && hi == o.hi;
}

ExponentWindow ExponentWindow::intersect(const ExponentWindow& a, const ExponentWindow& b) {
    ExponentWindow out;
    int cl = AlgebraicBound::compare(a.lo, b.lo);
    if (cl > 0) {
        out.lo = a.lo;
        out.lo_strict = a.lo_strict;
    } else if (cl < 0) {
        out.lo = b.lo;
        out.lo_strict = b.lo_strict;
    } else {
        out.lo = a.lo;
        out.lo_strict = a.lo_strict || b.lo_strict;
    }
    int ch = AlgebraicBound::compare(a.hi, b.hi);
    if (ch < 0) {
        out.hi = a.hi;
        out.hi_strict = a.hi_strict;
    } else if (ch > 0) {
        out.hi = b.hi;
        out.hi_strict = b.hi_strict;
    } else {
        out.hi = a.hi;
        out.hi_strict = a.hi_strict || b.hi_strict;
    }
    return out;
}

Rational ExponentWindow::midpoint_rational() const {
    if (empty()) throw std::logic_error("midpoint of empty window");
    if (!lo.is_rational() || !hi.is_rational())
        throw std::logic_error("midpoint of window with irrational endpoints: " + str());
    return (lo.rational_value() + hi.rational_value()) / 2;
}

std::string ExponentWindow::str() const {
    if (empty()) return "(empty)";
    std::string s = lo_strict ? "(" : "[";
    s += lo.str() + ", " + hi.str();
    s += hi_strict ? ")" : "]";
    return s;
}

}  // namespace hartree
