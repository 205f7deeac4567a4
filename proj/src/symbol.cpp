#include "toda/symbol.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "toda/errors.hpp"

namespace toda {

// ---------------------------------------------------------------------------
// LaurentPoly

cplx LaurentPoly::eval(cplx z) const {
    if (coef.empty()) return 0.0;
    // Horner over ascending powers, then shift by z^lo
    cplx acc = 0.0;
    for (std::size_t i = coef.size(); i-- > 0;) acc = acc * z + coef[i];
    return acc * std::pow(z, lo);
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly d;
    if (coef.empty()) return d;
    d.lo = lo - 1;
    d.coef.resize(coef.size());
    for (std::size_t i = 0; i < coef.size(); ++i)
        d.coef[i] = coef[i] * static_cast<double>(lo + static_cast<int>(i));
    return d;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (coef.empty()) return o;
    if (o.coef.empty()) return *this;
    const int new_lo = std::min(lo, o.lo);
    const int new_hi = std::max(lo + static_cast<int>(coef.size()),
                                o.lo + static_cast<int>(o.coef.size()));
    LaurentPoly r;
    r.lo = new_lo;
    r.coef.assign(static_cast<std::size_t>(new_hi - new_lo), 0.0);
    for (std::size_t i = 0; i < coef.size(); ++i) r.coef[lo - new_lo + i] += coef[i];
    for (std::size_t i = 0; i < o.coef.size(); ++i) r.coef[o.lo - new_lo + i] += o.coef[i];
    return r;
}

LaurentPoly LaurentPoly::operator*(double s) const {
    LaurentPoly r = *this;
    for (cplx& c : r.coef) c *= s;
    return r;
}

bool LaurentPoly::is_real(double tol) const {
    for (const cplx& c : coef)
        if (std::abs(c.imag()) > tol) return false;
    return true;
}

// ---------------------------------------------------------------------------
// GroupElement

cplx GroupElement::eval(cplx z) const {
    cplx num = scale;
    for (const cplx& w : zeros) num *= (z - w);
    cplx den = 1.0;
    for (const cplx& p : poles) {
        const cplx d = z - p;
        if (std::abs(d) < 1e-12) {
            std::ostringstream os;
            os << "evaluation at pole (" << p.real() << "," << p.imag() << ")";
            throw PoleHit(os.str());
        }
        den *= d;
    }
    cplx v = num / den;
    if (!exponent.empty()) v *= std::exp(exponent.eval(z));
    return v;
}

cplx GroupElement::log_derivative(cplx z) const {
    cplx s = 0.0;
    for (const cplx& w : zeros) s += 1.0 / (z - w);
    for (const cplx& p : poles) s -= 1.0 / (z - p);
    if (!exponent.empty()) s += exponent.derivative().eval(z);
    return s;
}

GroupElement GroupElement::inverse() const {
    GroupElement g;
    g.zeros = poles;
    g.poles = zeros;
    g.exponent = exponent * (-1.0);
    g.scale = 1.0 / scale;
    g.real = real;
    return g;
}

GroupElement GroupElement::tilde() const {
    GroupElement g;
    g.real = real;
    g.scale = scale;
    int zpow = static_cast<int>(poles.size()) - static_cast<int>(zeros.size());
    for (const cplx& w : zeros) {
        if (std::abs(w) > 0.0) {
            g.zeros.push_back(1.0 / w);
            g.scale *= -w;
        }
        // a zero at the origin contributes 1/z, absorbed in zpow below
    }
    for (const cplx& p : poles) {
        if (std::abs(p) > 0.0) {
            g.poles.push_back(1.0 / p);
            g.scale /= -p;
        }
    }
    if (zpow > 0)
        g.zeros.insert(g.zeros.end(), static_cast<std::size_t>(zpow), cplx(0.0));
    else if (zpow < 0)
        g.poles.insert(g.poles.end(), static_cast<std::size_t>(-zpow), cplx(0.0));
    if (!exponent.empty()) {
        g.exponent.lo = -(exponent.lo + static_cast<int>(exponent.coef.size()) - 1);
        g.exponent.coef.assign(exponent.coef.rbegin(), exponent.coef.rend());
    }
    return g;
}

void GroupElement::validate(const AnnulusDomain& dom) const {
    const double margin = dom.grid.min_distance();
    auto check = [&](const cplx& w, const char* kind) {
        const double r = std::abs(w);
        if (r >= 1.0 / dom.R - margin && r <= dom.R + margin) {
            std::ostringstream os;
            os << kind << " at |z| = " << r << " inside or too close to the closed annulus";
            throw PoleHit(os.str());
        }
    };
    for (const cplx& w : zeros) check(w, "zero");
    for (const cplx& p : poles) check(p, "pole");
    if (real) {
        auto conj_closed = [](const std::vector<cplx>& v) {
            for (const cplx& w : v) {
                if (std::abs(w.imag()) < 1e-12) continue;
                bool found = false;
                for (const cplx& u : v)
                    if (std::abs(u - std::conj(w)) < 1e-10) { found = true; break; }
                if (!found) return false;
            }
            return true;
        };
        if (!conj_closed(zeros) || !conj_closed(poles) || !exponent.is_real(1e-12) ||
            std::abs(scale.imag()) > 1e-12 * std::abs(scale))
            throw DomainError("group element flagged real is not conjugation-symmetric");
    }
}

bool GroupElement::is_symmetric(const AnnulusDomain& dom, double tol) const {
    double worst = 0.0;
    for (int k = 0; k < dom.M; k += std::max(1, dom.M / 16)) {
        const cplx z = dom.grid.outer_nodes[k];
        const cplx g1 = eval(z);
        const cplx g2 = eval(dom.grid.inner_nodes[k]);  // 1/z
        worst = std::max(worst, std::abs(g1 - g2) / std::max(1.0, std::abs(g1)));
    }
    return worst <= tol;
}

GroupElement GroupElement::identity() {
    GroupElement g;
    g.real = true;
    return g;
}

GroupElement GroupElement::q_zeta(cplx zeta) {
    GroupElement g;
    g.poles = {zeta};
    g.scale = -zeta;  // q_zeta(z) = (1 - z/zeta)^{-1}, so q_zeta(0) = 1
    g.real = std::abs(zeta.imag()) < 1e-14;
    return g;
}

GroupElement GroupElement::r_zeta(cplx zeta) {
    GroupElement g;
    g.poles = {zeta, std::conj(zeta)};
    g.scale = zeta * std::conj(zeta);
    g.real = true;
    return g;
}

GroupElement GroupElement::z_power(int n) {
    GroupElement g;
    g.real = true;
    if (n > 0)
        g.zeros.assign(static_cast<std::size_t>(n), cplx(0.0));
    else if (n < 0)
        g.poles.assign(static_cast<std::size_t>(-n), cplx(0.0));
    return g;
}

GroupElement GroupElement::exp_poly(LaurentPoly h, bool real_flag) {
    GroupElement g;
    g.exponent = std::move(h);
    g.real = real_flag && g.exponent.is_real(1e-14);
    return g;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    GroupElement g;
    g.zeros = a.zeros;
    g.zeros.insert(g.zeros.end(), b.zeros.begin(), b.zeros.end());
    g.poles = a.poles;
    g.poles.insert(g.poles.end(), b.poles.begin(), b.poles.end());
    g.exponent = a.exponent + b.exponent;
    g.scale = a.scale * b.scale;
    g.real = a.real && b.real;
    return g;
}

namespace {

// roots of a monic-izable polynomial via its companion matrix, polished with
// two Newton steps
std::vector<cplx> poly_roots(const std::vector<cplx>& c) {
    int deg = static_cast<int>(c.size()) - 1;
    while (deg > 0 && std::abs(c[static_cast<std::size_t>(deg)]) == 0.0) --deg;
    if (deg < 1) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    const cplx lead = c[static_cast<std::size_t>(deg)];
    for (int i = 0; i < deg; ++i) {
        comp(i, deg - 1) = -c[static_cast<std::size_t>(i)] / lead;
        if (i > 0) comp(i, i - 1) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
    auto horner = [&](cplx z, cplx& p, cplx& dp) {
        p = 0.0;
        dp = 0.0;
        for (int i = deg; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + c[static_cast<std::size_t>(i)];
        }
    };
    for (cplx& r : roots) {
        for (int it = 0; it < 2; ++it) {
            cplx p, dp;
            horner(r, p, dp);
            if (std::abs(dp) > 0.0) r -= p / dp;
        }
    }
    return roots;
}

}  // namespace

GroupElement resolvent_power_approx(const LaurentPoly& h, int n) {
    // (1 - h/n)^{-n} = (n z^K)^n / P(z)^n with P = z^K (n - h), K clearing the
    // negative powers of h
    const int K = std::max(0, -h.lo);
    const int hi = h.lo + static_cast<int>(h.coef.size()) - 1;
    const int deg = std::max(K, K + hi);
    std::vector<cplx> P(static_cast<std::size_t>(deg) + 1, 0.0);
    P[static_cast<std::size_t>(K)] += static_cast<double>(n);
    for (std::size_t i = 0; i < h.coef.size(); ++i)
        P[static_cast<std::size_t>(K + h.lo) + i] -= h.coef[i];

    std::vector<cplx> roots = poly_roots(P);
    GroupElement g;
    g.real = h.is_real(1e-14);
    if (K > 0) g.zeros.assign(static_cast<std::size_t>(n) * K, cplx(0.0));
    for (const cplx& r : roots)
        g.poles.insert(g.poles.end(), static_cast<std::size_t>(n), r);
    // scale = (n / lead)^n, computed in logs; irrelevant to tau, clamped if it
    // would overflow
    int lead_deg = static_cast<int>(P.size()) - 1;
    while (lead_deg > 0 && std::abs(P[static_cast<std::size_t>(lead_deg)]) == 0.0) --lead_deg;
    const cplx lead = P[static_cast<std::size_t>(lead_deg)];
    const double log_mag = n * (std::log(static_cast<double>(n)) - std::log(std::abs(lead)));
    if (std::abs(log_mag) < 650.0) {
        const double arg = -n * std::arg(lead);
        g.scale = std::polar(std::exp(log_mag), arg);
    }
    return g;
}

// ---------------------------------------------------------------------------
// VectorSymbol

double VectorSymbol::sup_norm() const {
    double s = 0.0;
    for (std::size_t k = 0; k < a1.outer.size(); ++k) {
        s = std::max(s, std::abs(a1.outer[k]) + std::abs(a2.outer[k]));
        s = std::max(s, std::abs(a1.inner[k]) + std::abs(a2.inner[k]));
    }
    return s;
}

VectorSymbol identity_symbol(const AnnulusDomain& dom) {
    VectorSymbol s;
    s.a1 = GridFunction(dom.M);
    s.a2 = GridFunction(dom.M);
    std::fill(s.a1.outer.begin(), s.a1.outer.end(), cplx(1.0));
    std::fill(s.a1.inner.begin(), s.a1.inner.end(), cplx(1.0));
    s.eval1 = [](cplx) { return cplx(1.0); };
    s.eval2 = [](cplx) { return cplx(0.0); };
    s.is_real = true;
    return s;
}

GridFunction symbol_apply(const AnnulusDomain& dom, const VectorSymbol& a, const GridFunction& u) {
    const ContourGrid& g = dom.grid;
    GridFunction out(dom.M);
    for (int k = 0; k < dom.M; ++k) {
        // lambda^{-1} u(1/lambda): 1/outer[k] == inner[k] by construction
        out.outer[k] = a.a1.outer[k] * u.outer[k] + a.a2.outer[k] * g.inner_nodes[k] * u.inner[k];
        out.inner[k] = a.a1.inner[k] * u.inner[k] + a.a2.inner[k] * g.outer_nodes[k] * u.outer[k];
    }
    return out;
}

VectorSymbol symbol_tilde(const AnnulusDomain& dom, const VectorSymbol& a) {
    VectorSymbol t;
    t.a1.outer = a.a1.inner;
    t.a1.inner = a.a1.outer;
    t.a2.outer = a.a2.inner;
    t.a2.inner = a.a2.outer;
    if (a.has_evaluators()) {
        auto e1 = a.eval1, e2 = a.eval2;
        t.eval1 = [e1](cplx z) { return e1(1.0 / z); };
        t.eval2 = [e2](cplx z) { return e2(1.0 / z); };
    }
    t.is_real = a.is_real;
    (void)dom;
    return t;
}

VectorSymbol group_apply(const AnnulusDomain& dom, const GroupElement& g, const VectorSymbol& a) {
    VectorSymbol out;
    out.a1 = GridFunction(dom.M);
    out.a2 = GridFunction(dom.M);
    for (int k = 0; k < dom.M; ++k) {
        const cplx go = g.eval(dom.grid.outer_nodes[k]);
        const cplx gi = g.eval(dom.grid.inner_nodes[k]);
        out.a1.outer[k] = go * a.a1.outer[k];
        out.a2.outer[k] = go * a.a2.outer[k];
        out.a1.inner[k] = gi * a.a1.inner[k];
        out.a2.inner[k] = gi * a.a2.inner[k];
    }
    if (a.has_evaluators()) {
        auto e1 = a.eval1, e2 = a.eval2;
        GroupElement gc = g;
        out.eval1 = [gc, e1](cplx z) { return gc.eval(z) * e1(z); };
        out.eval2 = [gc, e2](cplx z) { return gc.eval(z) * e2(z); };
    }
    out.is_real = a.is_real && g.real;
    return out;
}

VectorSymbol zpow_apply(const AnnulusDomain& dom, int n, const VectorSymbol& a) {
    VectorSymbol out;
    out.a1 = GridFunction(dom.M);
    out.a2 = GridFunction(dom.M);
    const bool tabulated = std::abs(n) <= dom.max_power();
    for (int k = 0; k < dom.M; ++k) {
        const cplx zo = tabulated ? dom.outer_power_row(n)[k]
                                  : std::pow(dom.grid.outer_nodes[k], n);
        const cplx zi = tabulated ? dom.inner_power_row(n)[k]
                                  : std::pow(dom.grid.inner_nodes[k], n);
        out.a1.outer[k] = zo * a.a1.outer[k];
        out.a2.outer[k] = zo * a.a2.outer[k];
        out.a1.inner[k] = zi * a.a1.inner[k];
        out.a2.inner[k] = zi * a.a2.inner[k];
    }
    if (a.has_evaluators()) {
        auto e1 = a.eval1, e2 = a.eval2;
        out.eval1 = [n, e1](cplx z) { return std::pow(z, n) * e1(z); };
        out.eval2 = [n, e2](cplx z) { return std::pow(z, n) * e2(z); };
    }
    out.is_real = a.is_real;
    return out;
}

double symbol_reality_defect(const AnnulusDomain& dom, const VectorSymbol& a) {
    double worst = 0.0;
    for (int k = 0; k < dom.M; ++k) {
        const int kc = dom.grid.conj_index(k);
        worst = std::max(worst, std::abs(a.a1.outer[kc] - std::conj(a.a1.outer[k])));
        worst = std::max(worst, std::abs(a.a2.outer[kc] - std::conj(a.a2.outer[k])));
        worst = std::max(worst, std::abs(a.a1.inner[kc] - std::conj(a.a1.inner[k])));
        worst = std::max(worst, std::abs(a.a2.inner[kc] - std::conj(a.a2.inner[k])));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Group membership certificate

MSymbolCert certify_msymbol(const AnnulusDomain& dom, const VectorSymbol& m) {
    MSymbolCert cert;
    cert.sup_norm = std::max(1.0, m.sup_norm());

    // Values at 0 come from the inner-circle mean (the symbol components are
    // analytic across C2), values at infinity from the outer mean.
    cplx m1_at0 = 0.0, m2_at0 = 0.0, m1_inf = 0.0, m2_inf = 0.0;
    for (int k = 0; k < dom.M; ++k) {
        m1_at0 += m.a1.inner[k];
        m2_at0 += m.a2.inner[k];
        m1_inf += m.a1.outer[k];
        m2_inf += m.a2.outer[k];
    }
    const double inv_m = 1.0 / dom.M;
    m1_at0 *= inv_m;
    m2_at0 *= inv_m;
    m1_inf *= inv_m;
    m2_inf *= inv_m;

    cert.point_defect = std::max({std::abs(m1_at0 - 1.0), std::abs(m1_inf - 1.0),
                                  std::abs(m2_at0), std::abs(m2_inf)});

    // m1 m1~ - m2 m2~ sampled on C (the boundary of D-bar-minus); the tilde
    // values are the circle-swapped samples at the same index.
    double min_det = std::numeric_limits<double>::infinity();
    for (int k = 0; k < dom.M; ++k) {
        const cplx d = m.a1.outer[k] * m.a1.inner[k] - m.a2.outer[k] * m.a2.inner[k];
        min_det = std::min(min_det, std::abs(d));
    }
    if (m.has_evaluators()) {
        const double radii[] = {1.15 * dom.R, 2.0 * dom.R, 5.0 * dom.R,
                                0.85 / dom.R, 0.4 / dom.R, 0.1 / dom.R};
        for (double r : radii) {
            for (int j = 0; j < 16; ++j) {
                const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / 16.0);
                const cplx d = m.eval1(z) * m.eval1(1.0 / z) - m.eval2(z) * m.eval2(1.0 / z);
                min_det = std::min(min_det, std::abs(d));
            }
        }
    }
    cert.min_determinant = min_det;

    const double det_floor = kCertMarginTol * cert.sup_norm * cert.sup_norm;
    cert.member = cert.point_defect <= kCertPointTol * cert.sup_norm && min_det >= det_floor;
    if (!cert.member) {
        std::ostringstream os;
        os << "point defect " << cert.point_defect << ", min |m1 m1~ - m2 m2~| "
           << cert.min_determinant << " (floor " << det_floor << ")";
        cert.detail = os.str();
    }
    return cert;
}

void require_msymbol(const AnnulusDomain& dom, const VectorSymbol& m) {
    MSymbolCert cert = certify_msymbol(dom, m);
    if (!cert.member) throw CertFail("symbol failed group membership: " + cert.detail);
}

VectorSymbol msymbol_from_m(const AnnulusDomain& dom, const MFunctionHandle& m,
                            MSymbolCert* cert_out) {
    auto comp1 = [m](cplx z) { return (z * m.eval(z) - 1.0) / (z * z - 1.0); };
    auto comp2 = [m](cplx z) { return z * z * (z - m.eval(z)) / (z * z - 1.0); };
    VectorSymbol s;
    s.a1 = sample(dom, comp1);
    s.a2 = sample(dom, comp2);
    s.eval1 = comp1;
    s.eval2 = comp2;
    s.is_real = true;

    MSymbolCert cert = certify_msymbol(dom, s);
    if (cert_out) *cert_out = cert;
    if (!cert.member) throw CertFail("m-function symbol failed certificate: " + cert.detail);
    return s;
}

VectorSymbol mgroup_product(const AnnulusDomain& dom, const VectorSymbol& m,
                            const VectorSymbol& n) {
    require_msymbol(dom, m);
    require_msymbol(dom, n);
    VectorSymbol out;
    out.a1 = GridFunction(dom.M);
    out.a2 = GridFunction(dom.M);
    for (int k = 0; k < dom.M; ++k) {
        // tilde values are the other circle's samples at the same index
        out.a1.outer[k] = m.a1.outer[k] * n.a1.outer[k] + m.a2.outer[k] * n.a2.inner[k];
        out.a2.outer[k] = m.a1.outer[k] * n.a2.outer[k] + m.a2.outer[k] * n.a1.inner[k];
        out.a1.inner[k] = m.a1.inner[k] * n.a1.inner[k] + m.a2.inner[k] * n.a2.outer[k];
        out.a2.inner[k] = m.a1.inner[k] * n.a2.inner[k] + m.a2.inner[k] * n.a1.outer[k];
    }
    if (m.has_evaluators() && n.has_evaluators()) {
        auto m1 = m.eval1, m2 = m.eval2, n1 = n.eval1, n2 = n.eval2;
        out.eval1 = [m1, m2, n1, n2](cplx z) { return m1(z) * n1(z) + m2(z) * n2(1.0 / z); };
        out.eval2 = [m1, m2, n1, n2](cplx z) { return m1(z) * n2(z) + m2(z) * n1(1.0 / z); };
    }
    out.is_real = m.is_real && n.is_real;
    require_msymbol(dom, out);
    return out;
}

VectorSymbol mgroup_inverse(const AnnulusDomain& dom, const VectorSymbol& m) {
    require_msymbol(dom, m);
    VectorSymbol out;
    out.a1 = GridFunction(dom.M);
    out.a2 = GridFunction(dom.M);
    for (int k = 0; k < dom.M; ++k) {
        const cplx det_o = m.a1.outer[k] * m.a1.inner[k] - m.a2.outer[k] * m.a2.inner[k];
        out.a1.outer[k] = m.a1.inner[k] / det_o;
        out.a2.outer[k] = -m.a2.outer[k] / det_o;
        out.a1.inner[k] = m.a1.outer[k] / det_o;
        out.a2.inner[k] = -m.a2.inner[k] / det_o;
    }
    if (m.has_evaluators()) {
        auto m1 = m.eval1, m2 = m.eval2;
        auto det = [m1, m2](cplx z) { return m1(z) * m1(1.0 / z) - m2(z) * m2(1.0 / z); };
        out.eval1 = [m1, det](cplx z) { return m1(1.0 / z) / det(z); };
        out.eval2 = [m2, det](cplx z) { return -m2(z) / det(z); };
    }
    out.is_real = m.is_real;
    return out;
}

}  // namespace toda
