#include <doctest.h>

#include <random>
#include <vector>

#include "toda/kernels.hpp"

using namespace toda::kernels;

namespace {

std::vector<cplx> random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& x : v) x = cplx(u(rng), u(rng));
    return v;
}

}  // namespace

TEST_CASE("every available ISA agrees with the scalar reference") {
    const Isa original = active();
    std::mt19937_64 rng(12345);
    const std::size_t sizes[] = {0, 1, 2, 3, 4, 7, 8, 15, 64, 255, 256, 257};

    for (Isa isa : available()) {
        if (isa == Isa::scalar) continue;
        for (std::size_t n : sizes) {
            auto a = random_vec(rng, n);
            auto b = random_vec(rng, n);
            auto y0 = random_vec(rng, n);
            const cplx alpha(0.37, -1.21);

            set_active(Isa::scalar);
            const cplx d_ref = dotu(a.data(), b.data(), n);
            std::vector<cplx> h_ref(n), ha_ref = y0, y_ref = y0;
            hadamard(a.data(), b.data(), h_ref.data(), n);
            hadamard_add(a.data(), b.data(), ha_ref.data(), n);
            axpy(alpha, a.data(), y_ref.data(), n);

            set_active(isa);
            const cplx d = dotu(a.data(), b.data(), n);
            std::vector<cplx> h(n), ha = y0, y = y0;
            hadamard(a.data(), b.data(), h.data(), n);
            hadamard_add(a.data(), b.data(), ha.data(), n);
            axpy(alpha, a.data(), y.data(), n);

            const double scale = std::max(1.0, static_cast<double>(n));
            CHECK(std::abs(d - d_ref) <= 1e-13 * scale);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(std::abs(h[i] - h_ref[i]) <= 1e-14);
                CHECK(std::abs(ha[i] - ha_ref[i]) <= 1e-14);
                CHECK(std::abs(y[i] - y_ref[i]) <= 1e-14);
            }
        }
    }
    set_active(original);
}

TEST_CASE("gemv matches per-row dotu") {
    std::mt19937_64 rng(99);
    const std::size_t rows = 17, cols = 41;
    auto A = random_vec(rng, rows * cols);
    auto x = random_vec(rng, cols);
    std::vector<cplx> y(rows);
    gemv(A.data(), rows, cols, x.data(), y.data());
    for (std::size_t r = 0; r < rows; ++r) {
        const cplx expect = dotu(A.data() + r * cols, x.data(), cols);
        CHECK(std::abs(y[r] - expect) <= 1e-13 * cols);
    }
}
