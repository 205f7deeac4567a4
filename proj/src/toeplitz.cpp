#include "toda/toeplitz.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "toda/errors.hpp"
#include "toda/kernels.hpp"

namespace toda {

namespace {
const cplx kTwoPiI(0.0, 2.0 * std::numbers::pi);
}

Eigen::VectorXcd to_eigen(const LaurentVector& u) {
    Eigen::VectorXcd v(u.size());
    for (int i = 0; i < u.size(); ++i) v(i) = u.c[static_cast<std::size_t>(i)];
    return v;
}

LaurentVector from_eigen(const Eigen::VectorXcd& v, int N) {
    LaurentVector u(N);
    for (int i = 0; i < u.size(); ++i) u.c[static_cast<std::size_t>(i)] = v(i);
    return u;
}

OperatorMatrix build_T(const AnnulusDomain& dom, const VectorSymbol& a) {
    const int N = dom.N;
    const int M = dom.M;
    const int dim = 2 * N + 1;
    OperatorMatrix T;
    T.role = OperatorMatrix::Role::T;
    T.m.resize(dim, dim);

    std::vector<cplx> col_outer(M), col_inner(M);
    const double inv_m = 1.0 / M;
    for (int n = -N; n <= N; ++n) {
        // (a z^n)(lambda) = a1 lambda^n + a2 lambda^{-n-1}
        kernels::hadamard(a.a1.outer.data(), dom.outer_power_row(n), col_outer.data(), M);
        kernels::hadamard_add(a.a2.outer.data(), dom.outer_power_row(-n - 1), col_outer.data(), M);
        kernels::hadamard(a.a1.inner.data(), dom.inner_power_row(n), col_inner.data(), M);
        kernels::hadamard_add(a.a2.inner.data(), dom.inner_power_row(-n - 1), col_inner.data(), M);

        double peak = 0.0;
        for (int r = 0; r <= N; ++r) {
            const cplx c = inv_m * kernels::dotu(dom.outer_power_row(-r), col_outer.data(), M);
            T.m(r + N, n + N) = c;
            peak = std::max(peak, std::abs(c));
        }
        for (int r = -N; r < 0; ++r) {
            const cplx c = inv_m * kernels::dotu(dom.inner_power_row(-r), col_inner.data(), M);
            T.m(r + N, n + N) = c;
            peak = std::max(peak, std::abs(c));
        }
        const double edge = std::max(std::abs(T.m(0, n + N)), std::abs(T.m(dim - 1, n + N)));
        if (peak > 0.0 && edge > 1e-8 * peak) T.truncation_warning = true;
    }
    return T;
}

OperatorMatrix build_S(const AnnulusDomain& dom, const VectorSymbol& a) {
    const int N = dom.N;
    const int M = dom.M;
    OperatorMatrix S;
    S.role = OperatorMatrix::Role::S;
    S.m.resize(2 * M, 2 * N + 1);

    std::vector<cplx> col_outer(M), col_inner(M);
    const double inv_m = 1.0 / M;
    LaurentVector plus(N);
    for (int n = -N; n <= N; ++n) {
        kernels::hadamard(a.a1.outer.data(), dom.outer_power_row(n), col_outer.data(), M);
        kernels::hadamard_add(a.a2.outer.data(), dom.outer_power_row(-n - 1), col_outer.data(), M);
        kernels::hadamard(a.a1.inner.data(), dom.inner_power_row(n), col_inner.data(), M);
        kernels::hadamard_add(a.a2.inner.data(), dom.inner_power_row(-n - 1), col_inner.data(), M);

        for (int r = 0; r <= N; ++r)
            plus.at(r) = inv_m * kernels::dotu(dom.outer_power_row(-r), col_outer.data(), M);
        for (int r = -N; r < 0; ++r)
            plus.at(r) = inv_m * kernels::dotu(dom.inner_power_row(-r), col_inner.data(), M);

        GridFunction proj = synthesize_grid(dom, plus);
        for (int k = 0; k < M; ++k) {
            S.m(k, n + N) = col_outer[static_cast<std::size_t>(k)] - proj.outer[static_cast<std::size_t>(k)];
            S.m(M + k, n + N) = col_inner[static_cast<std::size_t>(k)] - proj.inner[static_cast<std::size_t>(k)];
        }
    }
    return S;
}

Eigen::MatrixXcd hg_kernel_matrix(const AnnulusDomain& dom, const GroupElement& g) {
    const int M = dom.M;
    const double dist_min = dom.grid.min_distance();
    for (const cplx& p : g.poles) {
        const double r = std::abs(p);
        const double d = std::min(std::abs(r - dom.R), std::abs(r - 1.0 / dom.R));
        if (!dom.in_dminus(p) || d < dist_min) {
            std::ostringstream os;
            os << "pole of g at |z| = " << r << " within " << dist_min << " of the contour";
            throw PoleHit(os.str());
        }
    }

    std::vector<cplx> nodes(2 * static_cast<std::size_t>(M));
    std::vector<cplx> weights(2 * static_cast<std::size_t>(M));
    for (int k = 0; k < M; ++k) {
        nodes[static_cast<std::size_t>(k)] = dom.grid.outer_nodes[k];
        nodes[static_cast<std::size_t>(M + k)] = dom.grid.inner_nodes[k];
        weights[static_cast<std::size_t>(k)] = dom.grid.outer_weights[k];
        weights[static_cast<std::size_t>(M + k)] = dom.grid.inner_weights[k];
    }
    std::vector<cplx> gval(2 * static_cast<std::size_t>(M));
    for (std::size_t j = 0; j < nodes.size(); ++j) gval[j] = g.eval(nodes[j]);

    Eigen::MatrixXcd K(2 * M, 2 * M);
    for (int i = 0; i < 2 * M; ++i) {
        const cplx zi = nodes[static_cast<std::size_t>(i)];
        const cplx gi = gval[static_cast<std::size_t>(i)];
        for (int j = 0; j < 2 * M; ++j) {
            if (i == j) {
                K(i, j) = g.derivative(zi) * weights[static_cast<std::size_t>(j)] / kTwoPiI;
            } else {
                const cplx lam = nodes[static_cast<std::size_t>(j)];
                K(i, j) = (gval[static_cast<std::size_t>(j)] - gi) /
                          (lam - zi) * weights[static_cast<std::size_t>(j)] / kTwoPiI;
            }
        }
    }
    return K;
}

namespace {

// analyze() as a (2N+1) x 2M matrix acting on stacked grid values
Eigen::MatrixXcd analysis_matrix(const AnnulusDomain& dom) {
    const int N = dom.N;
    const int M = dom.M;
    Eigen::MatrixXcd W = Eigen::MatrixXcd::Zero(2 * N + 1, 2 * M);
    const double inv_m = 1.0 / M;
    for (int n = 0; n <= N; ++n) {
        const cplx* row = dom.outer_power_row(-n);
        for (int k = 0; k < M; ++k) W(n + N, k) = inv_m * row[k];
    }
    for (int n = -N; n < 0; ++n) {
        const cplx* row = dom.inner_power_row(-n);
        for (int k = 0; k < M; ++k) W(n + N, M + k) = inv_m * row[k];
    }
    return W;
}

}  // namespace

OperatorMatrix build_H(const AnnulusDomain& dom, const GroupElement& g) {
    OperatorMatrix H;
    H.role = OperatorMatrix::Role::H;
    H.m = analysis_matrix(dom) * hg_kernel_matrix(dom, g);
    return H;
}

Eigen::MatrixXcd multiplication_matrix(const AnnulusDomain& dom, const GroupElement& g) {
    const int N = dom.N;
    const int M = dom.M;
    Eigen::MatrixXcd V(2 * M, 2 * N + 1);
    for (int n = -N; n <= N; ++n) {
        const cplx* ro = dom.outer_power_row(n);
        const cplx* ri = dom.inner_power_row(n);
        for (int k = 0; k < M; ++k) {
            V(k, n + N) = ro[k];
            V(M + k, n + N) = ri[k];
        }
    }
    Eigen::VectorXcd gv(2 * M);
    for (int k = 0; k < M; ++k) {
        gv(k) = g.eval(dom.grid.outer_nodes[k]);
        gv(M + k) = g.eval(dom.grid.inner_nodes[k]);
    }
    return analysis_matrix(dom) * gv.asDiagonal() * V;
}

TFactor::TFactor(const AnnulusDomain& dom, const OperatorMatrix& T) : lu_(T.m) {
    (void)dom;
    // L1 condition number from the explicit inverse; cheap at this dimension
    const double tn = T.m.cwiseAbs().colwise().sum().maxCoeff();
    const Eigen::MatrixXcd inv = lu_.solve(Eigen::MatrixXcd::Identity(T.m.rows(), T.m.cols()));
    const double in = inv.cwiseAbs().colwise().sum().maxCoeff();
    cond_ = tn * in;
    if (!std::isfinite(cond_)) cond_ = std::numeric_limits<double>::infinity();
}

Eigen::VectorXcd TFactor::solve(const Eigen::VectorXcd& rhs) const {
    if (!invertible()) {
        std::ostringstream os;
        os << "T(a) condition estimate " << cond_ << " exceeds " << kCondMax;
        throw NotInvertible(os.str());
    }
    return lu_.solve(rhs);
}

Eigen::MatrixXcd TFactor::solve(const Eigen::MatrixXcd& rhs) const {
    if (!invertible()) {
        std::ostringstream os;
        os << "T(a) condition estimate " << cond_ << " exceeds " << kCondMax;
        throw NotInvertible(os.str());
    }
    return lu_.solve(rhs);
}

LaurentVector solve_T(const AnnulusDomain& dom, const OperatorMatrix& T, const LaurentVector& rhs) {
    TFactor tf(dom, T);
    return from_eigen(tf.solve(to_eigen(rhs)), dom.N);
}

PhiFunction phi_n(const AnnulusDomain& dom, const VectorSymbol& a, const TFactor& tf, int n) {
    if (std::abs(n) > dom.N) throw DomainError("phi_n: |n| exceeds the truncation order");
    const LaurentVector u = from_eigen(tf.solve(to_eigen(LaurentVector::basis(dom.N, n))), dom.N);
    const GridFunction au = symbol_apply(dom, a, synthesize_grid(dom, u));
    PhiFunction phi;
    phi.values = project_minus(dom, au);
    phi.at_zero = eval_hminus(dom, phi.values, cplx(0.0));
    // lim z phi(z) is the (-1)-st Laurent coefficient of the outer expansion
    phi.inf_limit =
        kernels::dotu(phi.values.outer.data(), dom.grid.outer_weights.data(), dom.grid.outer_weights.size()) /
        kTwoPiI;
    return phi;
}

PhiFunction phi_n(const AnnulusDomain& dom, const VectorSymbol& a, int n) {
    TFactor tf(dom, build_T(dom, a));
    return phi_n(dom, a, tf, n);
}

cplx phi_eval(const AnnulusDomain& dom, const PhiFunction& phi, cplx zeta) {
    return eval_hminus(dom, phi.values, zeta);
}

cplx phi_eval_derivative(const AnnulusDomain& dom, const PhiFunction& phi, cplx zeta) {
    return eval_hminus_derivative(dom, phi.values, zeta);
}

}  // namespace toda
