#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace hartree {

// Uniform periodic grid on the box [-L, L)^dim with N cells per axis.
// Cells are center-sampled: x_j = -L + (j + 1/2) h with h = 2L/N, so no
// sample sits on the coordinate planes and power weights |x|^{-b} stay finite.
// The dual lattice carries xi_k = (pi/L) k~ with k~ the signed FFT index.
struct GridSpec {
    int dim = 3;       // spatial dimension, 1..3
    int points = 64;   // cells per axis, power of two, >= 8
    double box = 1.0;  // half-width L

    GridSpec() = default;
    GridSpec(int dim_, int points_, double box_);

    double h() const { return 2.0 * box / points; }
    double cell_measure() const;
    std::size_t total() const;

    // Center of cell j along one axis, j in [0, points).
    double coord(int j) const { return -box + (j + 0.5) * h(); }
    // Signed frequency index for FFT bin k.
    int signed_index(int k) const { return k < points / 2 ? k : k - points; }
    // Frequency of FFT bin k along one axis.
    double freq(int k) const { return (3.14159265358979323846 / box) * signed_index(k); }

    // Row-major decode of a flat index into per-axis cell indices (unused axes 0).
    std::array<int, 3> unpack(std::size_t flat) const;
    std::size_t pack(const std::array<int, 3>& idx) const;
    std::array<double, 3> point(std::size_t flat) const;

    bool operator==(const GridSpec&) const = default;
};

// Complex scalar field sampled on a GridSpec, row-major (last axis fastest).
struct GridFunction {
    GridSpec grid;
    std::vector<std::complex<double>> values;

    GridFunction() = default;
    explicit GridFunction(const GridSpec& g)
        : grid(g), values(g.total(), std::complex<double>(0.0, 0.0)) {}

    std::size_t size() const { return values.size(); }
    std::complex<double>& operator[](std::size_t i) { return values[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return values[i]; }
};

double l2_norm(const GridFunction& f);
double max_abs(const GridFunction& f);
// Relative L^2 distance ||f-g||/||g||; returns absolute distance if ||g||=0.
double rel_l2_error(const GridFunction& f, const GridFunction& g);

// Worker count for data-parallel loops: HARTREE_LAB_THREADS if set, else the
// hardware concurrency, clamped to [1, 4 x hardware].  Results never depend
// on the value; it only partitions work.
int thread_budget();

}  // namespace hartree
