#pragma once

#include <complex>
#include <functional>

namespace toda {

// Evaluator for an m-function on C \ Sigma_{lambda0} together with the
// coefficients (a0^2, a1^2, b0) it carries. Measures are never materialized;
// everything downstream works through eval.
struct MFunctionHandle {
    std::function<std::complex<double>(std::complex<double>)> eval;
    double a0sq = 1.0;
    double a1sq = 1.0;
    double b0 = 0.0;
    // m'(0); exact (= a0^2) for handles built from Jacobi data, finite
    // difference otherwise.
    std::function<double()> dprime0;

    std::complex<double> operator()(std::complex<double> z) const { return eval(z); }
};

}  // namespace toda
