#include "hartree/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hartree {

namespace {

// (i+1)^a - i^a without cancellation: i^a * expm1(a * log1p(1/i)).
double power_gap(std::size_t i, double a) {
    if (i == 0) return 1.0;  // 1^a - 0^a with a > 0
    const double di = static_cast<double>(i);
    return std::pow(di, a) * std::expm1(a * std::log1p(1.0 / di));
}

void check_indices(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::invalid_argument("lorentz_norm: indices must be positive");
}

}  // namespace

RearrangementProfile rearrangement(const std::vector<double>& abs_values, double cell_measure) {
    if (!(cell_measure > 0.0)) throw std::invalid_argument("rearrangement: cell measure must be positive");
    RearrangementProfile prof;
    prof.cell = cell_measure;
    prof.value = abs_values;
    for (double v : prof.value)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("rearrangement: values must be finite and non-negative");
    std::sort(prof.value.begin(), prof.value.end(), std::greater<double>());
    return prof;
}

RearrangementProfile rearrangement(const GridFunction& f) {
    std::vector<double> mag(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) mag[i] = std::abs(f.values[i]);
    return rearrangement(mag, f.grid.cell_measure());
}

double distribution_function(const RearrangementProfile& prof, double lambda) {
    auto it = std::lower_bound(prof.value.begin(), prof.value.end(), lambda,
                               [](double v, double lam) { return v > lam; });
    return prof.cell * static_cast<double>(std::distance(prof.value.begin(), it));
}

double lorentz_norm(const RearrangementProfile& prof, double p, double q) {
    check_indices(p, q);
    if (prof.value.empty()) return 0.0;
    const double inv_p = 1.0 / p;
    if (std::isinf(q)) {
        // sup over [t_i, t_{i+1}) of t^{1/p} v_i is attained as t -> t_{i+1}.
        double best = 0.0;
        for (std::size_t i = 0; i < prof.value.size(); ++i) {
            if (prof.value[i] <= 0.0) break;  // sorted decreasing
            best = std::max(best, prof.value[i] * std::pow(static_cast<double>(i + 1), inv_p));
        }
        return std::pow(prof.cell, inv_p) * best;
    }
    // int_0^inf (t^{1/p} f*)^q dt/t = (p/q) sum_i v_i^q (t_{i+1}^{q/p} - t_i^{q/p}).
    const double a = q / p;
    long double sum = 0.0L;
    for (std::size_t i = 0; i < prof.value.size(); ++i) {
        const double v = prof.value[i];
        if (v <= 0.0) break;
        sum += static_cast<long double>(std::pow(v, q)) * power_gap(i, a);
    }
    if (sum <= 0.0L) return 0.0;
    const double body = static_cast<double>(sum) * (p / q);
    return std::pow(prof.cell, inv_p) * std::pow(body, 1.0 / q);
}

double lorentz_norm(const GridFunction& f, double p, double q) {
    return lorentz_norm(rearrangement(f), p, q);
}

double lorentz_norm_equivalent(const RearrangementProfile& prof, double p, double q) {
    check_indices(p, q);
    if (!(p > 1.0))
        throw std::invalid_argument("lorentz_norm_equivalent: requires p > 1 (f** tail integrable)");
    const std::size_t m = prof.value.size();
    if (m == 0) return 0.0;
    const double cell = prof.cell;
    const double inv_p = 1.0 / p;

    // 8-point Gauss-Legendre nodes/weights on [-1, 1].
    static const double gx[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                 -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                 0.7966664774136267,  0.9602898564975363};
    static const double gw[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                 0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};

    long double prefix = 0.0L;  // int_0^{t_i} f*
    long double total = 0.0L;   // Gauss sum for q < inf
    double best = 0.0;          // sup for q = inf
    const bool sup_norm = std::isinf(q);
    for (std::size_t i = 0; i < m; ++i) {
        const double v = prof.value[i];
        const double t_lo = cell * static_cast<double>(i);
        const double t_hi = cell * static_cast<double>(i + 1);
        const double pref = static_cast<double>(prefix);
        if (pref <= 0.0 && v <= 0.0) break;
        if (sup_norm) {
            // phi(t) = t^{1/p - 1} (c0 + v t) with c0 = pref - v t_lo >= 0; the
            // only interior critical point is t* = (p - 1) c0 / v.
            const double c0 = std::max(0.0, pref - v * t_lo);
            auto phi = [&](double t) { return std::pow(t, inv_p - 1.0) * (c0 + v * t); };
            best = std::max(best, phi(t_hi));
            if (i > 0) best = std::max(best, phi(t_lo));
            if (v > 0.0 && c0 > 0.0) {
                const double t_star = (p - 1.0) * c0 / v;
                if (t_star > t_lo && t_star < t_hi) best = std::max(best, phi(t_star));
            }
        } else {
            const double half = 0.5 * (t_hi - t_lo);
            const double mid = 0.5 * (t_hi + t_lo);
            long double piece = 0.0L;
            for (int g = 0; g < 8; ++g) {
                const double t = mid + half * gx[g];
                const double fss = (pref + v * (t - t_lo)) / t;
                piece += static_cast<long double>(gw[g]) *
                         static_cast<long double>(std::pow(t, q * inv_p - 1.0) * std::pow(fss, q));
            }
            total += piece * half;
        }
        prefix += static_cast<long double>(v) * cell;
    }
    const double mass = static_cast<double>(prefix);
    const double t_end = cell * static_cast<double>(m);
    if (sup_norm) {
        if (mass > 0.0) best = std::max(best, std::pow(t_end, inv_p - 1.0) * mass);
        return best;
    }
    if (mass > 0.0) {
        // Tail t > t_end where f** = mass / t: integral of mass^q t^{q/p - q - 1}.
        const double expo = q * inv_p - q;  // negative since p > 1
        total += static_cast<long double>(std::pow(mass, q) * std::pow(t_end, expo) / (-expo));
    }
    if (total <= 0.0L) return 0.0;
    return std::pow(static_cast<double>(total), 1.0 / q);
}

double lebesgue_norm(const RearrangementProfile& prof, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("lebesgue_norm: p must be positive");
    long double sum = 0.0L;
    for (double v : prof.value) {
        if (v <= 0.0) break;
        sum += static_cast<long double>(std::pow(v, p));
    }
    return std::pow(static_cast<double>(sum) * prof.cell, 1.0 / p);
}

}  // namespace hartree
