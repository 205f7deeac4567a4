#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Complex array kernels used by the contour-analysis inner loops.
// A scalar reference implementation always exists; wider variants (AVX2 on
// x86-64, NEON on aarch64) are selected at runtime and must agree with the
// scalar path to roundoff (see tests/kernels_test.cpp).

namespace toda::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2, neon };

const char* name(Isa isa);

// ISA selected at startup (widest supported); override with set_active or the
// TODA_KERNEL_ISA environment variable ("scalar", "avx2", "neon").
Isa active();
void set_active(Isa isa);  // throws std::invalid_argument if unsupported
std::vector<Isa> available();

// sum_i a[i]*b[i], no conjugation
cplx dotu(const cplx* a, const cplx* b, std::size_t n);
// out[i] = a[i]*b[i]
void hadamard(const cplx* a, const cplx* b, cplx* out, std::size_t n);
// out[i] += a[i]*b[i]
void hadamard_add(const cplx* a, const cplx* b, cplx* out, std::size_t n);
// y[i] += alpha*x[i]
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);

// y = A x with A row-major (rows x cols); built on dotu
void gemv(const cplx* A, std::size_t rows, std::size_t cols, const cplx* x, cplx* y);

namespace detail {

struct Ops {
    cplx (*dotu)(const cplx*, const cplx*, std::size_t);
    void (*hadamard)(const cplx*, const cplx*, cplx*, std::size_t);
    void (*hadamard_add)(const cplx*, const cplx*, cplx*, std::size_t);
    void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when not compiled in or unsupported at runtime
const Ops* neon_ops();

}  // namespace detail

}  // namespace toda::kernels
