#include "renyi_cf/natural_extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "renyi_cf/errors.hpp"
#include "renyi_cf/summation.hpp"

namespace renyi {

ExtendedPoint extension_map(ExtendedPoint p, const CFParams& params) {
    const Digit a = digit(p.x, params);
    return {renyi_map(p.x, params), inverse_branch(p.y, static_cast<double>(a), params.N)};
}

ExtendedPoint extension_inverse(ExtendedPoint p, const CFParams& params) {
    const Digit a = digit(p.y, params);
    return {inverse_branch(p.x, static_cast<double>(a), params.N), renyi_map(p.y, params)};
}

Digit extended_digit(ExtendedPoint p, std::int64_t l, const CFParams& params) {
    if (l >= 1) {
        for (std::int64_t k = 1; k < l; ++k) p = extension_map(p, params);
    } else {
        for (std::int64_t k = l; k < 1; ++k) p = extension_inverse(p, params);
    }
    return digit(p.x, params);
}

std::vector<MarkovState> markov_chain(double t, const DigitSequence& digits) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("markov_chain: t must lie in [0,1]");
    std::vector<MarkovState> states;
    states.reserve(digits.size() + 1);
    states.push_back({t, 0, t});
    double s = t;
    for (std::size_t k = 0; k < digits.size(); ++k) {
        s = inverse_branch(s, static_cast<double>(digits[k]), digits.params().N);
        states.push_back({s, k + 1, t});
    }
    return states;
}

double markov_state_closed_form(double t, const DigitSequence& digits) {
    if (digits.empty()) return t;
    std::vector<double> reversed(digits.size());
    for (std::size_t k = 0; k < digits.size(); ++k) {
        reversed[k] = static_cast<double>(digits[digits.size() - 1 - k]);
    }
    reversed.back() += t - 1.0;
    return cf_value(reversed, digits.params().N);
}

PreservationCheck rho_bar_preservation_residual(const Rectangle& rect, const MeasureParams& m, Digit M,
                                                double tolerance) {
    const auto [x0, x1, y0, y1] = rect;
    if (!(0.0 <= x0 && x0 < x1 && x1 <= 1.0 && 0.0 <= y0 && y0 < y1 && y1 <= 1.0)) {
        throw std::invalid_argument("rho_bar_preservation_residual: need 0 <= x0 < x1 <= 1 and 0 <= y0 < y1 <= 1");
    }
    const Digit N = m.N();
    if (M < N) throw std::invalid_argument("rho_bar_preservation_residual: truncation M must be >= N");
    const double n = static_cast<double>(N);

    const Digit first = digit(y0, m.params);
    const bool to_top = y1 == 1.0;
    const Digit last = to_top ? std::numeric_limits<Digit>::max() : digit(y1, m.params);
    const Digit stop = std::min(last, std::max(M, first));

    NeumaierSum mass;
    for (Digit i = first; i <= stop; ++i) {
        const double di = static_cast<double>(i);
        const double lo = std::max(y0, 1.0 - n / di);
        const double hi = std::min(y1, 1.0 - n / (di + 1.0));
        if (!(hi > lo)) continue;
        // R_N restricted to I(i) is y -> N/(1-y) - i
        const double v_lo = std::clamp(n / (1.0 - lo) - di, 0.0, 1.0);
        const double dv = n * (hi - lo) / ((1.0 - lo) * (1.0 - hi));
        const double u_lo = inverse_branch(x0, di, N);
        const double du = n * (x1 - x0) / ((x0 + di) * (x1 + di));
        mass.add(rho_bar_rect(u_lo, du, v_lo, std::min(dv, 1.0 - v_lo), m));
    }

    PreservationCheck out{};
    const double eps = std::numeric_limits<double>::epsilon();
    // sum over i > stop of rho(u^i([x0,x1])) telescopes to this
    const double beyond = m.normalizer * std::log1p((x1 - x0) / (x0 + static_cast<double>(stop)));
    out.certificate = 8.0 * eps;
    if (last > stop) {
        if (to_top) {
            mass.add(beyond);
        } else {
            out.certificate += beyond;
        }
    }
    out.preimage_measure = mass.value();
    out.measure = rho_bar_rect(x0, x1 - x0, y0, y1 - y0, m);
    out.residual = std::abs(out.preimage_measure - out.measure);
    if (out.certificate > tolerance) {
        throw TruncationTooCoarse("rho_bar_preservation_residual: omitted digits could carry " +
                                  std::to_string(out.certificate) + " > tolerance " + std::to_string(tolerance));
    }
    return out;
}

}  // namespace renyi
