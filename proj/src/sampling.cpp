#include "hartree/sampling.hpp"

#include <stdexcept>

namespace hartree {

Rational interpolate(const Rational& lo, const Rational& hi, int k, int K) {
    if (K <= 0 || k < 0 || k >= K) throw std::invalid_argument("interpolate: need 0 <= k < K");
    Rational t(k + 1, K + 1);
    t.canonicalize();
    Rational out = lo + (hi - lo) * t;
    return out;
}

std::vector<ParameterPoint> candidate_grid(int resolution) {
    std::vector<ParameterPoint> grid;
    const Rational s_values[] = {rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)};
    for (long n = 3; n <= 6; ++n) {
        Rational a_lo = Rational(n - 2) / 3 > Rational(n - 4) ? Rational(n - 2) / 3 : Rational(n - 4);
        for (const Rational& s : s_values) {
            for (int i = 0; i < resolution; ++i) {
                Rational alpha = interpolate(a_lo, rat(n), i, resolution);
                ExponentWindow bw = b_window(n, s, alpha);
                if (bw.empty()) continue;
                // Upper endpoint is rational and attained (p == 2 there); the
                // lower endpoint may be irrational, so interpolate down from
                // the top and keep only candidates above it (exact compare).
                const Rational hi = bw.hi.rational_value();
                for (int j = 0; j <= resolution; ++j) {
                    Rational b = j == 0 ? hi : hi * Rational(resolution - j, resolution);
                    b.canonicalize();
                    if (b <= 0) continue;
                    if (!bw.contains(AlgebraicBound(b))) continue;
                    grid.push_back(ParameterPoint::critical(n, s, alpha, b));
                }
            }
        }
    }
    return grid;
}

std::vector<ParameterPoint> gate_passing_points(std::size_t count) {
    for (int resolution = 8; resolution <= 128; resolution *= 2) {
        std::vector<ParameterPoint> passing;
        for (const ParameterPoint& pt : candidate_grid(resolution)) {
            if (wellposedness_gate(pt).pass) {
                passing.push_back(pt);
                if (passing.size() == count) return passing;
            }
        }
        if (passing.size() >= count) return passing;
    }
    throw std::runtime_error("gate_passing_points: grid exhausted before reaching request");
}

}  // namespace hartree
