#pragma once

// Closed-form distribution functions for the invariant measure rho_N
// (density normalizer/(x+N-1)), the extended measure on the unit square, and
// the one-parameter conditional family rho^t_N.

#include "renyi_cf/cf_core.hpp"

namespace renyi {

struct MeasureParams {
    CFParams params;
    double normalizer;  // 1 / log(N/(N-1))

    explicit MeasureParams(CFParams p);
    explicit MeasureParams(Digit N) : MeasureParams(CFParams(N)) {}

    Digit N() const noexcept { return params.N; }
};

struct ConditionalParam {
    double t;
    explicit ConditionalParam(double value);
};

double rho_density(double x, const MeasureParams& m);
double rho_cdf(double x, const MeasureParams& m);

// rho-bar([0,x] x [0,y]); also the limit law of the two-dimensional
// Gauss-Kuzmin problem.
double rho_bar_cdf(double x, double y, const MeasureParams& m);

// rho-bar of [x0, x0+dx] x [y0, y0+dy]. Taking widths rather than corners
// keeps tiny rectangles free of cancellation.
double rho_bar_rect(double x0, double dx, double y0, double dy, const MeasureParams& m);

double rho_t_cdf(double x, const ConditionalParam& c, const MeasureParams& m);

// Inverse of rho_t_cdf; maps a uniform variate u to a rho^t_N variate.
double sample_rho_t(const ConditionalParam& c, const MeasureParams& m, double u);

enum class TailPolicy {
    analytic,  // add the closed-form remainder over digits > M
    bounded,   // leave it out and certify it instead
};

struct InvarianceCheck {
    double residual;     // |rho(R^{-1}[0,x]) - rho([0,x])|
    double tail;         // rho-mass attributed to digits > M
    double certificate;  // bound on what the tail treatment and rounding can hide
};

// Measures the preimage of [0,x] branch by branch up to digit M. Throws
// TruncationTooCoarse if `certificate` exceeds `tolerance`.
InvarianceCheck invariance_residual(double x, const MeasureParams& m, Digit M, double tolerance = 1e-10,
                                    TailPolicy policy = TailPolicy::analytic);

}  // namespace renyi
