// NEON variants of the complex array kernels (aarch64). One float64x2_t holds
// a single complex double; loops are unrolled by two for ILP.

#include "toda/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace toda::kernels {
namespace {

// (a*b).re = ar*br - ai*bi, (a*b).im = ai*br + ar*bi
inline float64x2_t cmul1(float64x2_t a, float64x2_t b) {
    const float64x2_t signs = {-1.0, 1.0};
    float64x2_t bre = vdupq_laneq_f64(b, 0);
    float64x2_t bim = vdupq_laneq_f64(b, 1);
    float64x2_t asw = vextq_f64(a, a, 1);
    return vfmaq_f64(vmulq_f64(a, bre), vmulq_f64(asw, bim), signs);
}

cplx dotu_neon(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc0 = vaddq_f64(acc0, cmul1(vld1q_f64(pa + 2 * i), vld1q_f64(pb + 2 * i)));
        acc1 = vaddq_f64(acc1, cmul1(vld1q_f64(pa + 2 * i + 2), vld1q_f64(pb + 2 * i + 2)));
    }
    float64x2_t acc = vaddq_f64(acc0, acc1);
    cplx result(vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1));
    for (; i < n; ++i) result += a[i] * b[i];
    return result;
}

void hadamard_neon(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* po = reinterpret_cast<double*>(out);
    for (std::size_t i = 0; i < n; ++i)
        vst1q_f64(po + 2 * i, cmul1(vld1q_f64(pa + 2 * i), vld1q_f64(pb + 2 * i)));
}

void hadamard_add_neon(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* po = reinterpret_cast<double*>(out);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t acc = vld1q_f64(po + 2 * i);
        acc = vaddq_f64(acc, cmul1(vld1q_f64(pa + 2 * i), vld1q_f64(pb + 2 * i)));
        vst1q_f64(po + 2 * i, acc);
    }
}

void axpy_neon(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const float64x2_t signs = {-1.0, 1.0};
    const float64x2_t are = vdupq_n_f64(alpha.real());
    const float64x2_t aim = vdupq_n_f64(alpha.imag());
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(px + 2 * i);
        float64x2_t xsw = vextq_f64(xv, xv, 1);
        float64x2_t prod = vfmaq_f64(vmulq_f64(xv, are), vmulq_f64(xsw, aim), signs);
        vst1q_f64(py + 2 * i, vaddq_f64(vld1q_f64(py + 2 * i), prod));
    }
}

}  // namespace

namespace detail {

const Ops* neon_ops() {
    static const Ops ops{dotu_neon, hadamard_neon, hadamard_add_neon, axpy_neon};
    return &ops;
}

}  // namespace detail
}  // namespace toda::kernels

#else

namespace toda::kernels::detail {
const Ops* neon_ops() { return nullptr; }
}

#endif
