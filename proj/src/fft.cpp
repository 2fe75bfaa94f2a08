#include "hartree/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hartree::fft {

namespace {

// One cached FFTW plan together with the aligned buffers it was planned on.
// Callers' data is copied through these buffers, so plan/array alignment is
// always consistent and plans are reused across calls of the same shape.
struct PlanSlot {
    fftw_plan plan = nullptr;
    void* in = nullptr;
    void* out = nullptr;
};

enum class Kind { C2CForward, C2CBackward, R2C, C2R };

using Key = std::tuple<int, int, Kind>;

std::map<Key, PlanSlot>& cache() {
    static std::map<Key, PlanSlot> c;
    return c;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::size_t logical_size(int dim, int n) {
    std::size_t t = 1;
    for (int d = 0; d < dim; ++d) t *= static_cast<std::size_t>(n);
    return t;
}

void check_shape(int dim, int n) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("fft: dim must be 1..3");
    if (n < 2) throw std::invalid_argument("fft: n must be >= 2");
}

PlanSlot& slot_for(int dim, int n, Kind kind) {
    auto& slots = cache();
    Key key{dim, n, kind};
    auto it = slots.find(key);
    if (it != slots.end()) return it->second;

    PlanSlot slot;
    int dims[3] = {n, n, n};
    const std::size_t full = logical_size(dim, n);
    const std::size_t half = spectrum_size(dim, n);
    switch (kind) {
        case Kind::C2CForward:
        case Kind::C2CBackward: {
            slot.in = fftw_malloc(sizeof(fftw_complex) * full);
            slot.out = slot.in;  // in-place
            slot.plan = fftw_plan_dft(dim, dims, static_cast<fftw_complex*>(slot.in),
                                      static_cast<fftw_complex*>(slot.out),
                                      kind == Kind::C2CForward ? FFTW_FORWARD : FFTW_BACKWARD,
                                      FFTW_ESTIMATE);
            break;
        }
        case Kind::R2C: {
            slot.in = fftw_malloc(sizeof(double) * full);
            slot.out = fftw_malloc(sizeof(fftw_complex) * half);
            slot.plan = fftw_plan_dft_r2c(dim, dims, static_cast<double*>(slot.in),
                                          static_cast<fftw_complex*>(slot.out), FFTW_ESTIMATE);
            break;
        }
        case Kind::C2R: {
            slot.in = fftw_malloc(sizeof(fftw_complex) * half);
            slot.out = fftw_malloc(sizeof(double) * full);
            slot.plan = fftw_plan_dft_c2r(dim, dims, static_cast<fftw_complex*>(slot.in),
                                          static_cast<double*>(slot.out), FFTW_ESTIMATE);
            break;
        }
    }
    if (!slot.plan) throw std::runtime_error("fftw plan creation failed");
    return slots.emplace(key, slot).first->second;
}

}  // namespace

std::size_t spectrum_size(int dim, int n) {
    std::size_t t = static_cast<std::size_t>(n / 2 + 1);
    for (int d = 1; d < dim; ++d) t *= static_cast<std::size_t>(n);
    return t;
}

void forward(int dim, int n, std::complex<double>* data) {
    check_shape(dim, n);
    std::lock_guard<std::mutex> lock(cache_mutex());
    PlanSlot& slot = slot_for(dim, n, Kind::C2CForward);
    const std::size_t bytes = sizeof(fftw_complex) * logical_size(dim, n);
    std::memcpy(slot.in, data, bytes);
    fftw_execute(slot.plan);
    std::memcpy(data, slot.out, bytes);
}

void inverse(int dim, int n, std::complex<double>* data) {
    check_shape(dim, n);
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        PlanSlot& slot = slot_for(dim, n, Kind::C2CBackward);
        const std::size_t bytes = sizeof(fftw_complex) * logical_size(dim, n);
        std::memcpy(slot.in, data, bytes);
        fftw_execute(slot.plan);
        std::memcpy(data, slot.out, bytes);
    }
    const std::size_t full = logical_size(dim, n);
    const double scale = 1.0 / static_cast<double>(full);
    for (std::size_t i = 0; i < full; ++i) data[i] *= scale;
}

void forward_real(int dim, int n, const double* in, std::complex<double>* out) {
    check_shape(dim, n);
    std::lock_guard<std::mutex> lock(cache_mutex());
    PlanSlot& slot = slot_for(dim, n, Kind::R2C);
    std::memcpy(slot.in, in, sizeof(double) * logical_size(dim, n));
    fftw_execute(slot.plan);
    std::memcpy(out, slot.out, sizeof(fftw_complex) * spectrum_size(dim, n));
}

void inverse_real(int dim, int n, const std::complex<double>* in, double* out) {
    check_shape(dim, n);
    const std::size_t full = logical_size(dim, n);
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        PlanSlot& slot = slot_for(dim, n, Kind::C2R);
        std::memcpy(slot.in, in, sizeof(fftw_complex) * spectrum_size(dim, n));
        fftw_execute(slot.plan);
        std::memcpy(out, slot.out, sizeof(double) * full);
    }
    const double scale = 1.0 / static_cast<double>(full);
    for (std::size_t i = 0; i < full; ++i) out[i] *= scale;
}

}  // namespace hartree::fft
