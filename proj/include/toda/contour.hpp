#pragma once

#include <complex>
#include <vector>

namespace toda {

using cplx = std::complex<double>;

// Function sampled on the two boundary circles; outer[k] belongs to the node
// R*exp(2*pi*i*k/M), inner[k] to (1/R)*exp(-2*pi*i*k/M).
struct GridFunction {
    std::vector<cplx> outer, inner;

    GridFunction() = default;
    explicit GridFunction(int m) : outer(m, 0.0), inner(m, 0.0) {}
    int size() const { return static_cast<int>(outer.size()); }
};

// Quadrature nodes and weights on C = C1 (outer, anti-clockwise) u C2 (inner,
// clockwise). The node indexing makes z -> 1/z the identity on indices
// (1/outer[k] == inner[k]) and z -> conj(z) the index map k -> M-k mod M.
struct ContourGrid {
    int points = 0;       // nodes per circle (M)
    double radius = 0.0;  // outer radius R; inner radius is exactly 1/R
    std::vector<cplx> outer_nodes, inner_nodes;
    std::vector<cplx> outer_weights, inner_weights;  // encode dlambda and orientation

    int conj_index(int k) const { return k == 0 ? 0 : points - k; }
    // closest admissible distance to C for Cauchy-kernel evaluation
    double min_distance() const;
};

struct AnnulusDomain {
    double lambda0 = 0.0;  // spectral bound, > 2
    double ell = 0.0;      // (lambda0 + sqrt(lambda0^2 - 4)) / 2
    double R = 0.0;        // outer radius, > ell
    int M = 0;             // grid points per circle, even
    int N = 0;             // Laurent truncation order

    ContourGrid grid;

    // Power tables: row p (p = -P..P, P = N+1) holds lambda_k^p over the M
    // nodes of a circle, contiguous per row. These back the analysis and
    // synthesis inner loops.
    int max_power() const { return N + 1; }
    const cplx* outer_power_row(int p) const;
    const cplx* inner_power_row(int p) const;

    bool inside_annulus(cplx z) const;  // strictly between the circles
    bool in_dminus(cplx z) const;       // strictly outside the closed annulus

    std::vector<cplx> pow_outer_, pow_inner_;  // (2P+1) x M, row-major
};

inline constexpr double kDefaultLambda0 = 2.5;
inline constexpr double kDefaultRadius = 3.0;
inline constexpr int kDefaultGridPoints = 256;
inline constexpr int kDefaultTruncation = 64;

double ell_of(double lambda0);

// Preconditions: lambda0 > 2 is not required (lambda0 = 2 gives ell = 1, a
// legal boundary case); R > ell, M even >= 8, N >= 1, M >= 4N.
AnnulusDomain build_domain(double lambda0, double R, int M, int N);
AnnulusDomain default_domain();

// Trapezoidal quadrature of f over C with the stated orientations.
cplx contour_integral(const AnnulusDomain& dom, const GridFunction& f);
cplx contour_integral_outer(const AnnulusDomain& dom, const GridFunction& f);

// Sample a callable on the grid.
template <typename F>
GridFunction sample(const AnnulusDomain& dom, F&& f) {
    GridFunction g(dom.M);
    for (int k = 0; k < dom.M; ++k) {
        g.outer[k] = f(dom.grid.outer_nodes[k]);
        g.inner[k] = f(dom.grid.inner_nodes[k]);
    }
    return g;
}

}  // namespace toda
