#pragma once

#include <span>
#include <vector>

#include "toda/contour.hpp"

namespace toda {

// Truncated Laurent expansion sum_{|n|<=N} c_n z^n; the computational model of
// the Hardy space on the annulus.
struct LaurentVector {
    int N = 0;
    std::vector<cplx> c;  // index n+N, n = -N..N
    // |c_{+-N}| relative to max|c_n|; analyze() fills it in
    double edge_ratio = 0.0;

    LaurentVector() = default;
    explicit LaurentVector(int n) : N(n), c(2 * n + 1, 0.0) {}
    cplx& at(int n) { return c[static_cast<std::size_t>(n + N)]; }
    cplx at(int n) const { return c[static_cast<std::size_t>(n + N)]; }
    int size() const { return 2 * N + 1; }

    bool truncation_warning() const { return edge_ratio > 1e-8; }

    static LaurentVector basis(int N, int n) {
        LaurentVector u(N);
        u.at(n) = 1.0;
        return u;
    }
};

// Laurent coefficients of the Hardy-space part of f: c_n for n >= 0 read from
// the outer circle, c_n for n < 0 from the inner one. Composed with
// synthesize this realizes the Riesz projection p+.
LaurentVector analyze(const AnnulusDomain& dom, const GridFunction& f);

// u(z) = sum c_n z^n evaluated on the grid / at arbitrary points of the
// closed annulus.
GridFunction synthesize_grid(const AnnulusDomain& dom, const LaurentVector& u);
cplx synthesize_at(const LaurentVector& u, cplx z);
std::vector<cplx> synthesize_at(const LaurentVector& u, std::span<const cplx> pts);

GridFunction project_plus(const AnnulusDomain& dom, const GridFunction& f);
GridFunction project_minus(const AnnulusDomain& dom, const GridFunction& f);

// (1/2pi i) int_C f(lambda)/(zeta - lambda) dlambda for zeta strictly in D-.
// Throws EvalTooClose within one grid spacing of C.
cplx eval_hminus(const AnnulusDomain& dom, const GridFunction& f, cplx zeta);
// d/dzeta of the same Cauchy integral.
cplx eval_hminus_derivative(const AnnulusDomain& dom, const GridFunction& f, cplx zeta);

// (Rf)(z) = z^{-1} f(z^{-1}); exact node permutation plus scaling.
GridFunction apply_R(const AnnulusDomain& dom, const GridFunction& f);

// pointwise helpers
GridFunction gf_add(const GridFunction& a, const GridFunction& b);
GridFunction gf_sub(const GridFunction& a, const GridFunction& b);
double gf_max_abs(const GridFunction& a);

}  // namespace toda
