#include "strata/transform.hpp"

#include <fftw3.h>

#include <array>
#include <map>
#include <mutex>

namespace strata {

namespace {

// One r2c/c2r plan pair per grid signature. Plans are created once under a
// mutex (FFTW planning is not thread-safe) and executed through the new-array
// interface, which is safe to call concurrently on distinct buffers.
// FFTW_UNALIGNED lifts the SIMD alignment requirement so plain std::vector
// storage works; FFTW_ESTIMATE keeps planning deterministic.
struct PlanPair {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

std::mutex& plan_mutex() {
    static std::mutex mu;
    return mu;
}

PlanPair& plans3(const Grid& g) {
    static std::map<std::array<int, 3>, PlanPair> cache;
    std::scoped_lock lock(plan_mutex());
    auto key = std::array<int, 3>{g.nx, g.ny, g.nz};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<double> re(g.sample_count());
    std::vector<Complex> co(g.coeff_count());
    PlanPair p;
    p.r2c = fftw_plan_dft_r2c_3d(g.nz, g.ny, g.nx, re.data(),
                                 reinterpret_cast<fftw_complex*>(co.data()),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.c2r = fftw_plan_dft_c2r_3d(g.nz, g.ny, g.nx, reinterpret_cast<fftw_complex*>(co.data()),
                                 re.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(key, p).first->second;
}

PlanPair& plans2(const Grid& g) {
    static std::map<std::array<int, 2>, PlanPair> cache;
    std::scoped_lock lock(plan_mutex());
    auto key = std::array<int, 2>{g.nx, g.ny};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<double> re(g.horizontal_sample_count());
    std::vector<Complex> co(g.horizontal_coeff_count());
    PlanPair p;
    p.r2c = fftw_plan_dft_r2c_2d(g.ny, g.nx, re.data(),
                                 reinterpret_cast<fftw_complex*>(co.data()),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.c2r = fftw_plan_dft_c2r_2d(g.ny, g.nx, reinterpret_cast<fftw_complex*>(co.data()),
                                 re.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(key, p).first->second;
}

}  // namespace

SpectralField forward(const Field& f) {
    const Grid& g = f.grid;
    if (f.values.size() != g.sample_count())
        throw InvalidInput("forward transform: sample count does not match grid");
    SpectralField out(g, f.parity);
    fftw_execute_dft_r2c(plans3(g).r2c, const_cast<double*>(f.values.data()),
                         reinterpret_cast<fftw_complex*>(out.coeffs.data()));
    const double scale = 1.0 / double(g.sample_count());
    const std::size_t plane = g.coeff_count() / g.nz;
    for (int iz = 0; iz < g.nz; ++iz) {
        const double s = (iz % 2 == 0) ? scale : -scale;  // z-origin phase (-1)^m
        Complex* c = out.coeffs.data() + std::size_t(iz) * plane;
        for (std::size_t i = 0; i < plane; ++i) c[i] *= s;
    }
    return out;
}

Field inverse(const SpectralField& s) {
    const Grid& g = s.grid;
    if (s.coeffs.size() != g.coeff_count())
        throw InvalidInput("inverse transform: coefficient count does not match grid");
    std::vector<Complex> scratch(s.coeffs);
    const std::size_t plane = g.coeff_count() / g.nz;
    for (int iz = 1; iz < g.nz; iz += 2) {
        Complex* c = scratch.data() + std::size_t(iz) * plane;
        for (std::size_t i = 0; i < plane; ++i) c[i] = -c[i];
    }
    Field out(g, s.parity);
    fftw_execute_dft_c2r(plans3(g).c2r, reinterpret_cast<fftw_complex*>(scratch.data()),
                         out.values.data());
    return out;
}

SpectralField2 forward(const Field2& f) {
    const Grid& g = f.grid;
    if (f.values.size() != g.horizontal_sample_count())
        throw InvalidInput("forward transform: sample count does not match grid");
    SpectralField2 out(g);
    fftw_execute_dft_r2c(plans2(g).r2c, const_cast<double*>(f.values.data()),
                         reinterpret_cast<fftw_complex*>(out.coeffs.data()));
    const double scale = 1.0 / double(g.horizontal_sample_count());
    for (auto& c : out.coeffs) c *= scale;
    return out;
}

Field2 inverse(const SpectralField2& s) {
    const Grid& g = s.grid;
    if (s.coeffs.size() != g.horizontal_coeff_count())
        throw InvalidInput("inverse transform: coefficient count does not match grid");
    std::vector<Complex> scratch(s.coeffs);
    Field2 out(g);
    fftw_execute_dft_c2r(plans2(g).c2r, reinterpret_cast<fftw_complex*>(scratch.data()),
                         out.values.data());
    return out;
}

}  // namespace strata
