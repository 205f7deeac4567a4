#include "toda/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace toda::kernels {
namespace {

const detail::Ops* ops_for(Isa isa) {
    switch (isa) {
        case Isa::scalar: return &detail::scalar_ops();
        case Isa::avx2: return detail::avx2_ops();
        case Isa::neon: return detail::neon_ops();
    }
    return nullptr;
}

Isa detect() {
    if (const char* env = std::getenv("TODA_KERNEL_ISA")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0 && detail::avx2_ops()) return Isa::avx2;
        if (std::strcmp(env, "neon") == 0 && detail::neon_ops()) return Isa::neon;
    }
    if (detail::avx2_ops()) return Isa::avx2;
    if (detail::neon_ops()) return Isa::neon;
    return Isa::scalar;
}

struct State {
    Isa isa;
    const detail::Ops* ops;
    State() : isa(detect()), ops(ops_for(isa)) {}
};

State& state() {
    static State s;
    return s;
}

}  // namespace

const char* name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "?";
}

Isa active() { return state().isa; }

void set_active(Isa isa) {
    const detail::Ops* ops = ops_for(isa);
    if (!ops) throw std::invalid_argument(std::string("kernel ISA unavailable: ") + name(isa));
    state().isa = isa;
    state().ops = ops;
}

std::vector<Isa> available() {
    std::vector<Isa> out{Isa::scalar};
    if (detail::avx2_ops()) out.push_back(Isa::avx2);
    if (detail::neon_ops()) out.push_back(Isa::neon);
    return out;
}

cplx dotu(const cplx* a, const cplx* b, std::size_t n) { return state().ops->dotu(a, b, n); }

void hadamard(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    state().ops->hadamard(a, b, out, n);
}

void hadamard_add(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    state().ops->hadamard_add(a, b, out, n);
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) { state().ops->axpy(alpha, x, y, n); }

void gemv(const cplx* A, std::size_t rows, std::size_t cols, const cplx* x, cplx* y) {
    const detail::Ops* ops = state().ops;
    for (std::size_t r = 0; r < rows; ++r) y[r] = ops->dotu(A + r * cols, x, cols);
}

}  // namespace toda::kernels
