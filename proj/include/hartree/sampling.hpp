#pragma once

#include "hartree/exponents.hpp"

#include <cstddef>
#include <vector>

namespace hartree {

/** k-th of K evenly spaced rationals strictly inside (lo, hi):
 *  lo + (hi - lo)(k + 1)/(K + 1), for 0 <= k < K. */
Rational interpolate(const Rational& lo, const Rational& hi, int k, int K);

/** Deterministic pool of parameter points that pass the full hypothesis
 *  gate. Scans a rational grid over n in {3,...,6}, s in {0, 1/4, ..., 1},
 *  alpha inside its admissible range and b inside its window, keeps the
 *  gate-passing points, and enlarges the grid until `count` are available.
 *  Same count always yields the same points. */
std::vector<ParameterPoint> gate_passing_points(std::size_t count);

/** The candidate grid behind gate_passing_points at a fixed resolution,
 *  without the gate filter (useful for negative-path tests). */
std::vector<ParameterPoint> candidate_grid(int resolution);

}  // namespace hartree
