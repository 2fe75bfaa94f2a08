#pragma once

#include "hartree/algebraic.hpp"

#include <string>

namespace hartree {

/** Interval with exact algebraic endpoints and per-endpoint strictness.
 *  Intersection and membership are exact; an interval is empty when lo > hi,
 *  or lo == hi with either endpoint excluded. */
struct ExponentWindow {
    AlgebraicBound lo, hi;
    bool lo_strict = true;
    bool hi_strict = true;

    ExponentWindow() = default;
    ExponentWindow(AlgebraicBound lo_, AlgebraicBound hi_, bool lo_strict_ = true,
                   bool hi_strict_ = true)
        : lo(std::move(lo_)), hi(std::move(hi_)), lo_strict(lo_strict_), hi_strict(hi_strict_) {}

    bool empty() const;
    bool contains(const AlgebraicBound& x) const;
    /** Same endpoint values and the same strictness flags. */
    bool operator==(const ExponentWindow& o) const;
    /** Same open interior: equal endpoint values (emptiness agrees), ignoring
     *  strictness. Two empty windows always match. */
    bool same_interior(const ExponentWindow& o) const;

    static ExponentWindow intersect(const ExponentWindow& a, const ExponentWindow& b);

    /** Midpoint, for sampling; requires rational endpoints and nonemptiness. */
    Rational midpoint_rational() const;

    std::string str() const;
};

}  // namespace hartree
