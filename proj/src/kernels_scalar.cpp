#include "toda/kernels.hpp"

namespace toda::kernels {
namespace {

cplx dotu_scalar(const cplx* a, const cplx* b, std::size_t n) {
    // two accumulators so the compiler can overlap the dependent adds
    cplx acc0 = 0.0, acc1 = 0.0;
    std::size_t i = 0;
    for (; i + 1 < n; i += 2) {
        acc0 += a[i] * b[i];
        acc1 += a[i + 1] * b[i + 1];
    }
    if (i < n) acc0 += a[i] * b[i];
    return acc0 + acc1;
}

void hadamard_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void hadamard_add_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] += a[i] * b[i];
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

namespace detail {

const Ops& scalar_ops() {
    static const Ops ops{dotu_scalar, hadamard_scalar, hadamard_add_scalar, axpy_scalar};
    return ops;
}

}  // namespace detail
}  // namespace toda::kernels
