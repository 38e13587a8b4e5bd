#include "renyi_cf/measures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "renyi_cf/errors.hpp"
#include "renyi_cf/summation.hpp"

namespace renyi {

MeasureParams::MeasureParams(CFParams p)
    : params(p), normalizer(1.0 / std::log1p(1.0 / static_cast<double>(p.N - 1))) {}

ConditionalParam::ConditionalParam(double value) : t(value) {
    if (!(value >= 0.0 && value <= 1.0)) throw std::invalid_argument("ConditionalParam: t must lie in [0,1]");
}

namespace {

void require_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
}

}  // namespace

double rho_density(double x, const MeasureParams& m) {
    require_unit(x, "rho_density: x");
    return m.normalizer / (x + static_cast<double>(m.N()) - 1.0);
}

double rho_cdf(double x, const MeasureParams& m) {
    require_unit(x, "rho_cdf: x");
    return m.normalizer * std::log1p(x / static_cast<double>(m.N() - 1));
}

double rho_bar_cdf(double x, double y, const MeasureParams& m) {
    require_unit(x, "rho_bar_cdf: x");
    require_unit(y, "rho_bar_cdf: y");
    // (x+N-1)(y+N-1) - (N-1)(N-(1-x)(1-y)) = N x y
    const double n = static_cast<double>(m.N());
    return m.normalizer * std::log1p(n * x * y / ((n - 1.0) * (n - (1.0 - x) * (1.0 - y))));
}

double rho_bar_rect(double x0, double dx, double y0, double dy, const MeasureParams& m) {
    if (dx <= 0.0 || dy <= 0.0) return 0.0;
    const double n = static_cast<double>(m.N());
    const double a = 1.0 - x0;
    const double c = 1.0 - y0;
    // D(p,q) = N - (1-p)(1-q); the mass is log[D(x0,y1) D(x1,y0) / (D(x1,y1) D(x0,y0))]
    // and the numerator minus the denominator is N dx dy.
    const double d11 = n - (a - dx) * (c - dy);
    const double d00 = n - a * c;
    return m.normalizer * std::log1p(n * dx * dy / (d11 * d00));
}

double rho_t_cdf(double x, const ConditionalParam& c, const MeasureParams& m) {
    require_unit(x, "rho_t_cdf: x");
    const double n = static_cast<double>(m.N());
    return n * x / (n - (1.0 - x) * (1.0 - c.t));
}

double sample_rho_t(const ConditionalParam& c, const MeasureParams& m, double u) {
    require_unit(u, "sample_rho_t: u");
    const double n = static_cast<double>(m.N());
    return u * (n - 1.0 + c.t) / (n - u * (1.0 - c.t));
}

InvarianceCheck invariance_residual(double x, const MeasureParams& m, Digit M, double tolerance,
                                    TailPolicy policy) {
    require_unit(x, "invariance_residual: x");
    const Digit N = m.N();
    if (M < N) throw std::invalid_argument("invariance_residual: truncation M must be >= N");

    // rho(u^i([0,x])) = normalizer * log1p(x / ((i-1)(x+i)))
    NeumaierSum sum;
    for (Digit i = N; i <= M; ++i) {
        const double di = static_cast<double>(i);
        sum.add(std::log1p(x / ((di - 1.0) * (x + di))));
    }
    // telescoping remainder over i > M
    const double tail_log = std::log1p(x / static_cast<double>(M));
    const double eps = std::numeric_limits<double>::epsilon();
    const double rounding = 4.0 * eps * (sum.value() + tail_log) * m.normalizer + 4.0 * eps;

    InvarianceCheck out{};
    out.tail = m.normalizer * tail_log;
    double preimage = m.normalizer * sum.value();
    if (policy == TailPolicy::analytic) {
        preimage += out.tail;
        out.certificate = rounding;
    } else {
        out.certificate = rounding + out.tail;
    }
    out.residual = std::abs(preimage - rho_cdf(x, m));
    if (out.certificate > tolerance) {
        throw TruncationTooCoarse("invariance_residual: certificate " + std::to_string(out.certificate) +
                                  " exceeds tolerance " + std::to_string(tolerance));
    }
    return out;
}

}  // namespace renyi
