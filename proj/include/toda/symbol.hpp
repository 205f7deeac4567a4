#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "toda/contour.hpp"
#include "toda/hardy.hpp"
#include "toda/mfunction.hpp"

namespace toda {

// h(z) = sum_{k=lo}^{lo+len-1} coef[k-lo] z^k
struct LaurentPoly {
    int lo = 0;
    std::vector<cplx> coef;

    static LaurentPoly zero() { return {}; }
    bool empty() const { return coef.empty(); }
    cplx eval(cplx z) const;
    LaurentPoly derivative() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(double s) const;
    bool is_real(double tol = 1e-14) const;
};

// Flow-group element g = scale * prod (z - zero_i) / prod (z - pole_j) * e^{h}.
// The scale never affects tau (it cancels in g^{-1} T(g a)); it is kept so
// q_zeta can reproduce the normalization q_zeta(0) = 1.
struct GroupElement {
    std::vector<cplx> zeros, poles;
    LaurentPoly exponent;
    cplx scale = 1.0;
    bool real = false;

    cplx eval(cplx z) const;             // PoleHit within 1e-12 of a pole
    cplx log_derivative(cplx z) const;   // g'/g
    cplx derivative(cplx z) const { return eval(z) * log_derivative(z); }

    GroupElement inverse() const;
    GroupElement tilde() const;  // g~(z) = g(1/z), up to scale
    bool is_identity() const { return zeros.empty() && poles.empty() && exponent.empty(); }

    // no zeros or poles within margin of the closed annulus; reality checks
    void validate(const AnnulusDomain& dom) const;
    bool is_symmetric(const AnnulusDomain& dom, double tol = 1e-10) const;  // g(z) == g(1/z)

    static GroupElement identity();
    static GroupElement q_zeta(cplx zeta);                 // (1 - z/zeta)^{-1}
    static GroupElement r_zeta(cplx zeta);                 // q_zeta * q_conj(zeta)
    static GroupElement z_power(int n);                    // z^n
    static GroupElement exp_poly(LaurentPoly h, bool real_flag = true);
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);

// (1 - h/n)^{-n} as an explicit rational element (poles from the companion
// matrix of the numerator polynomial, zeros at the origin).
GroupElement resolvent_power_approx(const LaurentPoly& h, int n);

// Vector symbol a = (a1, a2) acting on the Hardy space by
// (a u)(lambda) = a1(lambda) u(lambda) + a2(lambda) lambda^{-1} u(1/lambda).
struct VectorSymbol {
    GridFunction a1, a2;
    std::function<cplx(cplx)> eval1, eval2;  // optional closed forms near C
    bool is_real = false;

    double sup_norm() const;
    bool has_evaluators() const { return static_cast<bool>(eval1) && static_cast<bool>(eval2); }
};

VectorSymbol identity_symbol(const AnnulusDomain& dom);

GridFunction symbol_apply(const AnnulusDomain& dom, const VectorSymbol& a, const GridFunction& u);
// a~ (lambda) = (a1(1/lambda), a2(1/lambda)): index-preserving circle swap
VectorSymbol symbol_tilde(const AnnulusDomain& dom, const VectorSymbol& a);
// (g a)(lambda) = g(lambda) a(lambda)
VectorSymbol group_apply(const AnnulusDomain& dom, const GroupElement& g, const VectorSymbol& a);
// z^n a without going through GroupElement::eval (uses the power tables)
VectorSymbol zpow_apply(const AnnulusDomain& dom, int n, const VectorSymbol& a);

// check a_j(conj lambda) = conj(a_j(lambda)) on paired nodes
double symbol_reality_defect(const AnnulusDomain& dom, const VectorSymbol& a);

// Membership certificate for the symbol group: point conditions
// m1(0) = m1~(0) = 1, m2(0) = m2~(0) = 0 and non-vanishing of
// m1 m1~ - m2 m2~ on sampled D-bar-minus.
struct MSymbolCert {
    bool member = false;
    double point_defect = 0.0;      // worst of the four point conditions
    double min_determinant = 0.0;   // min |m1 m1~ - m2 m2~| over samples
    double sup_norm = 1.0;
    std::string detail;
};

MSymbolCert certify_msymbol(const AnnulusDomain& dom, const VectorSymbol& m);
// throws CertFail when the certificate rejects
void require_msymbol(const AnnulusDomain& dom, const VectorSymbol& m);

// Symbol built from an m-function by
// m(z) -> ( (z m(z) - 1)/(z^2 - 1), z^2 (z - m(z))/(z^2 - 1) ).
VectorSymbol msymbol_from_m(const AnnulusDomain& dom, const MFunctionHandle& m,
                            MSymbolCert* cert_out = nullptr);

// Group product (m.n) = (m1 n1 + m2 n2~, m1 n2 + m2 n1~); both factors must
// certify.
VectorSymbol mgroup_product(const AnnulusDomain& dom, const VectorSymbol& m,
                            const VectorSymbol& n);
VectorSymbol mgroup_inverse(const AnnulusDomain& dom, const VectorSymbol& m);

inline constexpr double kCertPointTol = 1e-10;
inline constexpr double kCertMarginTol = 1e-8;

}  // namespace toda
