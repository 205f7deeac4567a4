#include "toda/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "toda/errors.hpp"
#include "toda/kernels.hpp"

namespace toda {

namespace {
const cplx kTwoPiI(0.0, 2.0 * std::numbers::pi);
}

LaurentVector analyze(const AnnulusDomain& dom, const GridFunction& f) {
    const int M = dom.M;
    const int N = dom.N;
    LaurentVector u(N);
    const double inv_m = 1.0 / M;
    // c_n = (1/2pi i) oint f(lambda) lambda^{-n-1} dlambda reduces to a plain
    // DFT against the power rows once the circle weights are folded in.
    for (int n = 0; n <= N; ++n)
        u.at(n) = inv_m * kernels::dotu(dom.outer_power_row(-n), f.outer.data(), M);
    for (int n = -N; n < 0; ++n)
        u.at(n) = inv_m * kernels::dotu(dom.inner_power_row(-n), f.inner.data(), M);

    double peak = 0.0;
    for (const cplx& v : u.c) peak = std::max(peak, std::abs(v));
    if (peak > 0.0)
        u.edge_ratio = std::max(std::abs(u.at(N)), std::abs(u.at(-N))) / peak;
    return u;
}

GridFunction synthesize_grid(const AnnulusDomain& dom, const LaurentVector& u) {
    const int M = dom.M;
    GridFunction g(M);
    for (int n = -u.N; n <= u.N; ++n) {
        const cplx cn = u.at(n);
        if (cn == cplx(0.0)) continue;
        kernels::axpy(cn, dom.outer_power_row(n), g.outer.data(), M);
        kernels::axpy(cn, dom.inner_power_row(n), g.inner.data(), M);
    }
    return g;
}

cplx synthesize_at(const LaurentVector& u, cplx z) {
    // Horner on the z part and the 1/z part separately
    cplx pos = 0.0;
    for (int n = u.N; n >= 1; --n) pos = (pos + u.at(n)) * z;
    cplx neg = 0.0;
    const cplx zi = 1.0 / z;
    for (int n = -u.N; n <= -1; ++n) neg = (neg + u.at(n)) * zi;
    return pos + neg + u.at(0);
}

std::vector<cplx> synthesize_at(const LaurentVector& u, std::span<const cplx> pts) {
    std::vector<cplx> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = synthesize_at(u, pts[i]);
    return out;
}

GridFunction project_plus(const AnnulusDomain& dom, const GridFunction& f) {
    return synthesize_grid(dom, analyze(dom, f));
}

GridFunction project_minus(const AnnulusDomain& dom, const GridFunction& f) {
    return gf_sub(f, project_plus(dom, f));
}

namespace {

void check_distance(const AnnulusDomain& dom, cplx zeta) {
    const double r = std::abs(zeta);
    const double dist = std::min(std::abs(r - dom.R), std::abs(r - 1.0 / dom.R));
    if (dist < dom.grid.min_distance()) {
        std::ostringstream os;
        os << "evaluation point |z| = " << r << " within one grid spacing of the contour";
        throw EvalTooClose(os.str());
    }
    if (dom.inside_annulus(zeta)) throw EvalTooClose("evaluation point lies inside D+");
}

}  // namespace

cplx eval_hminus(const AnnulusDomain& dom, const GridFunction& f, cplx zeta) {
    check_distance(dom, zeta);
    const ContourGrid& g = dom.grid;
    cplx s = 0.0;
    for (int k = 0; k < dom.M; ++k) {
        s += f.outer[k] * g.outer_weights[k] / (zeta - g.outer_nodes[k]);
        s += f.inner[k] * g.inner_weights[k] / (zeta - g.inner_nodes[k]);
    }
    return s / kTwoPiI;
}

cplx eval_hminus_derivative(const AnnulusDomain& dom, const GridFunction& f, cplx zeta) {
    check_distance(dom, zeta);
    const ContourGrid& g = dom.grid;
    cplx s = 0.0;
    for (int k = 0; k < dom.M; ++k) {
        cplx d = zeta - g.outer_nodes[k];
        s -= f.outer[k] * g.outer_weights[k] / (d * d);
        d = zeta - g.inner_nodes[k];
        s -= f.inner[k] * g.inner_weights[k] / (d * d);
    }
    return s / kTwoPiI;
}

GridFunction apply_R(const AnnulusDomain& dom, const GridFunction& f) {
    // 1/outer_node[k] == inner_node[k] exactly, so R is an index-preserving
    // swap of the two circles plus the z^{-1} factor.
    const ContourGrid& g = dom.grid;
    GridFunction out(dom.M);
    for (int k = 0; k < dom.M; ++k) {
        out.outer[k] = g.inner_nodes[k] * f.inner[k];   // 1/outer = inner
        out.inner[k] = g.outer_nodes[k] * f.outer[k];
    }
    return out;
}

GridFunction gf_add(const GridFunction& a, const GridFunction& b) {
    GridFunction out = a;
    for (std::size_t i = 0; i < out.outer.size(); ++i) out.outer[i] += b.outer[i];
    for (std::size_t i = 0; i < out.inner.size(); ++i) out.inner[i] += b.inner[i];
    return out;
}

GridFunction gf_sub(const GridFunction& a, const GridFunction& b) {
    GridFunction out = a;
    for (std::size_t i = 0; i < out.outer.size(); ++i) out.outer[i] -= b.outer[i];
    for (std::size_t i = 0; i < out.inner.size(); ++i) out.inner[i] -= b.inner[i];
    return out;
}

double gf_max_abs(const GridFunction& a) {
    double m = 0.0;
    for (const cplx& v : a.outer) m = std::max(m, std::abs(v));
    for (const cplx& v : a.inner) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace toda
