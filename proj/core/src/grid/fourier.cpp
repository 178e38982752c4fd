#include "mzsplit/grid/fourier.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace mz::grid {

namespace {

// FFTW's planner is not thread-safe; execution with new arrays is.
std::mutex& plannerMutex() {
    static std::mutex m;
    return m;
}

}  // namespace

struct FourierPlan::Impl {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

FourierPlan::FourierPlan(std::size_t n) : n_(n), impl_(std::make_unique<Impl>()) {
    if (n == 0) throw std::invalid_argument("transform length must be positive");
    std::lock_guard lock(plannerMutex());
    fftw_complex* a = fftw_alloc_complex(n);
    fftw_complex* b = fftw_alloc_complex(n);
    const int len = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    impl_->fwd = fftw_plan_dft_1d(len, a, b, FFTW_FORWARD, flags);
    impl_->bwd = fftw_plan_dft_1d(len, a, b, FFTW_BACKWARD, flags);
    fftw_free(a);
    fftw_free(b);
    if (!impl_->fwd || !impl_->bwd) throw std::runtime_error("FFTW planning failed");
}

FourierPlan::~FourierPlan() {
    std::lock_guard lock(plannerMutex());
    if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
    if (impl_->bwd) fftw_destroy_plan(impl_->bwd);
}

std::shared_ptr<const FourierPlan> FourierPlan::forSize(std::size_t n) {
    static std::mutex cacheMutex;
    static std::map<std::size_t, std::weak_ptr<const FourierPlan>> cache;
    std::lock_guard lock(cacheMutex);
    if (auto hit = cache[n].lock()) return hit;
    std::shared_ptr<const FourierPlan> plan(new FourierPlan(n));
    cache[n] = plan;
    return plan;
}

void FourierPlan::forward(const std::complex<double>* in, std::complex<double>* out) const {
    // fftw_complex is layout-compatible with std::complex<double>
    fftw_execute_dft(impl_->fwd, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

void FourierPlan::backward(const std::complex<double>* in, std::complex<double>* out) const {
    fftw_execute_dft(impl_->bwd, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace mz::grid
