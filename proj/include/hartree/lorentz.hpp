#pragma once

#include <vector>

#include "hartree/grid.hpp"

namespace hartree {

// Decreasing rearrangement of a grid function, kept as an exact step profile:
// f* equals value[i] on [i*cell, (i+1)*cell) and 0 beyond.  All Lorentz
// norms of the sampled field are evaluated from this profile in closed form,
// so quasi-norm identities hold to rounding, not to quadrature error.
struct RearrangementProfile {
    std::vector<double> value;  // |f| sorted decreasing, one entry per cell
    double cell = 0.0;          // measure of one cell

    double total_measure() const { return cell * static_cast<double>(value.size()); }
};

RearrangementProfile rearrangement(const std::vector<double>& abs_values, double cell_measure);
RearrangementProfile rearrangement(const GridFunction& f);

// Measure of {|f| > lambda}.
double distribution_function(const RearrangementProfile& prof, double lambda);

// ||f||_{L^{p,q}} computed exactly from the step profile; q may be
// infinity (std::numeric_limits<double>::infinity()).  Requires p > 0.
double lorentz_norm(const RearrangementProfile& prof, double p, double q);
double lorentz_norm(const GridFunction& f, double p, double q);

// Equivalent Banach norm via the maximal average f**(t) = t^{-1} int_0^t f*.
// Piecewise Gauss-Legendre in t plus the analytic tail integral.
double lorentz_norm_equivalent(const RearrangementProfile& prof, double p, double q);

// Plain L^p of the profile, for Lebesgue cross-checks.
double lebesgue_norm(const RearrangementProfile& prof, double p);

}  // namespace hartree
