#pragma once

#include <Eigen/Dense>
#include <memory>

#include "toda/contour.hpp"
#include "toda/hardy.hpp"
#include "toda/symbol.hpp"

namespace toda {

inline constexpr double kCondMax = 1e12;

// Dense realization of T(a), S_a, H_g or a composite on the truncated basis.
struct OperatorMatrix {
    enum class Role { T, S, H, composite };
    Role role = Role::composite;
    Eigen::MatrixXcd m;
    bool truncation_warning = false;
};

// T(a) u = p+(a u); column n holds analyze(a * z^n). (2N+1) x (2N+1).
OperatorMatrix build_T(const AnnulusDomain& dom, const VectorSymbol& a);

// S_a u = p-(a u), Laurent coefficients to grid values of the H- part.
// Rows: outer nodes then inner nodes (2M x (2N+1)).
OperatorMatrix build_S(const AnnulusDomain& dom, const VectorSymbol& a);

// H_g v = p+(g v) for v in H- given by grid values, realized through the
// difference kernel (g(lambda) - g(z))/(lambda - z); (2N+1) x 2M.
OperatorMatrix build_H(const AnnulusDomain& dom, const GroupElement& g);

// Grid-values form of the same kernel: maps grid samples of v to grid values
// of H_g v on C (2M x 2M). build_H is analyze() composed with this.
Eigen::MatrixXcd hg_kernel_matrix(const AnnulusDomain& dom, const GroupElement& g);

// LU factorization of a T matrix with a condition estimate attached.
class TFactor {
  public:
    TFactor(const AnnulusDomain& dom, const OperatorMatrix& T);

    double condition() const { return cond_; }
    bool invertible() const { return cond_ <= kCondMax; }
    // throws NotInvertible when the condition estimate exceeds cond_max
    Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs) const;
    Eigen::MatrixXcd solve(const Eigen::MatrixXcd& rhs) const;
    int size() const { return static_cast<int>(lu_.rows()); }

  private:
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
    double cond_ = 0.0;
};

LaurentVector solve_T(const AnnulusDomain& dom, const OperatorMatrix& T, const LaurentVector& rhs);

// phi_a^{(n)} = p-(a T(a)^{-1} z^n), an H- element with its two distinguished
// limits attached.
struct PhiFunction {
    GridFunction values;
    cplx at_zero = 0.0;   // phi(0)
    cplx inf_limit = 0.0; // lim z->inf z phi(z), read from the outer Fourier data
};

PhiFunction phi_n(const AnnulusDomain& dom, const VectorSymbol& a, const TFactor& tf, int n);
PhiFunction phi_n(const AnnulusDomain& dom, const VectorSymbol& a, int n);

cplx phi_eval(const AnnulusDomain& dom, const PhiFunction& phi, cplx zeta);
cplx phi_eval_derivative(const AnnulusDomain& dom, const PhiFunction& phi, cplx zeta);

// Laurent coefficients as an Eigen vector and back.
Eigen::VectorXcd to_eigen(const LaurentVector& u);
LaurentVector from_eigen(const Eigen::VectorXcd& v, int N);

// Truncated multiplication-by-g matrix analyze(g * synthesize(.)) used by the
// operator-identity tests.
Eigen::MatrixXcd multiplication_matrix(const AnnulusDomain& dom, const GroupElement& g);

}  // namespace toda
