#include "hartree/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace hartree {

GridSpec::GridSpec(int dim_, int points_, double box_) : dim(dim_), points(points_), box(box_) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("grid dimension must be 1, 2 or 3");
    if (points < 8 || (points & (points - 1)) != 0)
        throw std::invalid_argument("grid points per axis must be a power of two >= 8");
    if (!(box > 0.0)) throw std::invalid_argument("grid box half-width must be positive");
}

double GridSpec::cell_measure() const {
    double m = 1.0;
    for (int d = 0; d < dim; ++d) m *= h();
    return m;
}

std::size_t GridSpec::total() const {
    std::size_t t = 1;
    for (int d = 0; d < dim; ++d) t *= static_cast<std::size_t>(points);
    return t;
}

std::array<int, 3> GridSpec::unpack(std::size_t flat) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int d = dim - 1; d >= 0; --d) {
        idx[d] = static_cast<int>(flat % points);
        flat /= points;
    }
    return idx;
}

std::size_t GridSpec::pack(const std::array<int, 3>& idx) const {
    std::size_t flat = 0;
    for (int d = 0; d < dim; ++d) flat = flat * points + static_cast<std::size_t>(idx[d]);
    return flat;
}

std::array<double, 3> GridSpec::point(std::size_t flat) const {
    auto idx = unpack(flat);
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int d = 0; d < dim; ++d) x[d] = coord(idx[d]);
    return x;
}

double l2_norm(const GridFunction& f) {
    double s = 0.0;
    for (const auto& v : f.values) s += std::norm(v);
    return std::sqrt(f.grid.cell_measure() * s);
}

double max_abs(const GridFunction& f) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double rel_l2_error(const GridFunction& f, const GridFunction& g) {
    if (f.grid != g.grid || f.values.size() != g.values.size())
        throw std::invalid_argument("rel_l2_error: mismatched grids");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        num += std::norm(f.values[i] - g.values[i]);
        den += std::norm(g.values[i]);
    }
    num = std::sqrt(num);
    den = std::sqrt(den);
    return den > 0.0 ? num / den : num;
}

int thread_budget() {
    const int hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HARTREE_LAB_THREADS")) {
        try {
            return std::clamp(std::stoi(env), 1, 4 * hw);
        } catch (const std::exception&) {
        }
    }
    return hw;
}

}  // namespace hartree
