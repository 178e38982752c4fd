#pragma once

#include <complex>
#include <cstddef>
#include <memory>

namespace mz::grid {

/// Out-of-place complex DFT of a fixed length. Plans are shared per length and
/// safe to execute from several threads at once.
class FourierPlan {
public:
    static std::shared_ptr<const FourierPlan> forSize(std::size_t n);

    ~FourierPlan();
    FourierPlan(const FourierPlan&) = delete;
    FourierPlan& operator=(const FourierPlan&) = delete;

    std::size_t size() const noexcept { return n_; }

    /// out[q] = sum_n in[n] exp(-2 pi i q n / size)
    void forward(const std::complex<double>* in, std::complex<double>* out) const;
    /// out[n] = sum_q in[q] exp(+2 pi i q n / size)   (unnormalized)
    void backward(const std::complex<double>* in, std::complex<double>* out) const;

private:
    explicit FourierPlan(std::size_t n);
    struct Impl;
    std::size_t n_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace mz::grid
