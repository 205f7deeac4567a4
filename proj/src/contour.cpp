#include "toda/contour.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "toda/errors.hpp"
#include "toda/kernels.hpp"

namespace toda {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double ContourGrid::min_distance() const {
    return kTwoPi * std::max(radius, 1.0) / static_cast<double>(points);
}

double ell_of(double lambda0) {
    return 0.5 * (lambda0 + std::sqrt(lambda0 * lambda0 - 4.0));
}

const cplx* AnnulusDomain::outer_power_row(int p) const {
    return pow_outer_.data() + static_cast<std::size_t>(p + max_power()) * M;
}

const cplx* AnnulusDomain::inner_power_row(int p) const {
    return pow_inner_.data() + static_cast<std::size_t>(p + max_power()) * M;
}

bool AnnulusDomain::inside_annulus(cplx z) const {
    double r = std::abs(z);
    return r > 1.0 / R && r < R;
}

bool AnnulusDomain::in_dminus(cplx z) const {
    double r = std::abs(z);
    return r > R || r < 1.0 / R;
}

AnnulusDomain build_domain(double lambda0, double R, int M, int N) {
    if (lambda0 < 2.0) throw DomainError("lambda0 must be >= 2");
    const double ell = ell_of(lambda0);
    if (!(R > ell)) {
        std::ostringstream os;
        os << "outer radius " << R << " must exceed ell = " << ell;
        throw DomainError(os.str());
    }
    if (M % 2 != 0 || M < 8) throw DomainError("grid_points must be even and >= 8");
    if (N < 1) throw DomainError("truncation must be >= 1");
    if (M < 4 * N) throw DomainError("grid_points must be >= 4*truncation (aliasing margin)");

    AnnulusDomain dom;
    dom.lambda0 = lambda0;
    dom.ell = ell;
    dom.R = R;
    dom.M = M;
    dom.N = N;

    ContourGrid& g = dom.grid;
    g.points = M;
    g.radius = R;
    g.outer_nodes.resize(M);
    g.inner_nodes.resize(M);
    g.outer_weights.resize(M);
    g.inner_weights.resize(M);
    const cplx iw(0.0, kTwoPi / M);  // 2*pi*i/M
    for (int k = 0; k < M; ++k) {
        const double th = kTwoPi * k / M;
        g.outer_nodes[k] = std::polar(R, th);
        g.inner_nodes[k] = std::polar(1.0 / R, -th);
        // dlambda = i*lambda*dtheta on C1 (anti-clockwise); C2 runs clockwise,
        // so its weights carry the opposite sign.
        g.outer_weights[k] = iw * g.outer_nodes[k];
        g.inner_weights[k] = -iw * g.inner_nodes[k];
    }

    const int P = dom.max_power();
    dom.pow_outer_.resize(static_cast<std::size_t>(2 * P + 1) * M);
    dom.pow_inner_.resize(static_cast<std::size_t>(2 * P + 1) * M);
    for (int p = -P; p <= P; ++p) {
        cplx* ro = dom.pow_outer_.data() + static_cast<std::size_t>(p + P) * M;
        cplx* ri = dom.pow_inner_.data() + static_cast<std::size_t>(p + P) * M;
        for (int k = 0; k < M; ++k) {
            // polar form keeps |lambda^p| exact and the phase error at one ulp
            const double thp = kTwoPi * k * p / M;
            ro[k] = std::polar(std::pow(R, p), thp);
            ri[k] = std::polar(std::pow(R, -p), -thp);
        }
    }
    return dom;
}

AnnulusDomain default_domain() {
    return build_domain(kDefaultLambda0, kDefaultRadius, kDefaultGridPoints, kDefaultTruncation);
}

cplx contour_integral(const AnnulusDomain& dom, const GridFunction& f) {
    const ContourGrid& g = dom.grid;
    cplx s = kernels::dotu(f.outer.data(), g.outer_weights.data(), g.outer_weights.size());
    s += kernels::dotu(f.inner.data(), g.inner_weights.data(), g.inner_weights.size());
    return s;
}

cplx contour_integral_outer(const AnnulusDomain& dom, const GridFunction& f) {
    const ContourGrid& g = dom.grid;
    return kernels::dotu(f.outer.data(), g.outer_weights.data(), g.outer_weights.size());
}

}  // namespace toda
