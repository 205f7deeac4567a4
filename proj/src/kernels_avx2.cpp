// AVX2/FMA variants of the complex array kernels. Compiled with -mavx2 -mfma;
// only reached when cpuid reports both features.

#include "toda/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace toda::kernels {
namespace {

// One __m256d holds two interleaved complex doubles (re0, im0, re1, im1).
// (a*b).re = ar*br - ai*bi, (a*b).im = ai*br + ar*bi; fmaddsub supplies the
// -/+ lane pattern.
inline __m256d cmul2(__m256d a, __m256d b) {
    __m256d bre = _mm256_movedup_pd(b);         // br, br
    __m256d bim = _mm256_permute_pd(b, 0xF);    // bi, bi
    __m256d asw = _mm256_permute_pd(a, 0x5);    // ai, ar
    return _mm256_fmaddsub_pd(a, bre, _mm256_mul_pd(asw, bim));
}

cplx dotu_avx2(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(acc0, cmul2(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i)));
        acc1 = _mm256_add_pd(acc1, cmul2(_mm256_loadu_pd(pa + 2 * i + 4), _mm256_loadu_pd(pb + 2 * i + 4)));
    }
    for (; i + 2 <= n; i += 2)
        acc0 = _mm256_add_pd(acc0, cmul2(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i)));
    alignas(32) double buf[8];
    _mm256_store_pd(buf, acc0);
    _mm256_store_pd(buf + 4, acc1);
    cplx acc(buf[0] + buf[2] + buf[4] + buf[6], buf[1] + buf[3] + buf[5] + buf[7]);
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void hadamard_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* po = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(po + 2 * i, cmul2(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void hadamard_add_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* po = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d acc = _mm256_loadu_pd(po + 2 * i);
        acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i)));
        _mm256_storeu_pd(po + 2 * i, acc);
    }
    for (; i < n; ++i) out[i] += a[i] * b[i];
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const __m256d are = _mm256_set1_pd(alpha.real());
    const __m256d aim = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(px + 2 * i);
        __m256d xsw = _mm256_permute_pd(xv, 0x5);
        __m256d prod = _mm256_fmaddsub_pd(xv, are, _mm256_mul_pd(xsw, aim));
        _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

namespace detail {

const Ops* avx2_ops() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    static const Ops ops{dotu_avx2, hadamard_avx2, hadamard_add_avx2, axpy_avx2};
    return &ops;
}

}  // namespace detail
}  // namespace toda::kernels

#else

namespace toda::kernels::detail {
const Ops* avx2_ops() { return nullptr; }
}

#endif
