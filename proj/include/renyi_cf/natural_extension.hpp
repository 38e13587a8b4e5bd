#pragma once

// The invertible two-dimensional extension
//
//     (x, y) -> (R_N(x), u^{a_1(x)}_N(y))
//
// of R_N on the unit square, the extended digits it induces, and the
// "past" Markov chain s^t_{N,n} = 1 - N/(a_n + s^t_{N,n-1}).

#include <cstdint>
#include <vector>

#include "renyi_cf/cf_core.hpp"
#include "renyi_cf/measures.hpp"

namespace renyi {

struct ExtendedPoint {
    double x;
    double y;
};

ExtendedPoint extension_map(ExtendedPoint p, const CFParams& params);
ExtendedPoint extension_inverse(ExtendedPoint p, const CFParams& params);

// a_1 of the first coordinate of the (l-1)-th iterate; negative l walks the
// inverse map.
Digit extended_digit(ExtendedPoint p, std::int64_t l, const CFParams& params);

struct MarkovState {
    double s;
    std::size_t step;
    double seed;
};

// States s_0 = t, s_1, ..., s_n driven by the given digits.
std::vector<MarkovState> markov_chain(double t, const DigitSequence& digits);

// Independent evaluation of s_n as the finite expansion
// [a_n, ..., a_2, a_1 + t - 1]_R (for n = 1 this is 1 - N/(a_1 + t)).
double markov_state_closed_form(double t, const DigitSequence& digits);

// Probability of moving from state s by digit i; same as branch_weight.
inline double transition_prob(double s, Digit i, const CFParams& params) {
    return branch_weight(s, static_cast<double>(i), params.N);
}

struct Rectangle {
    double x0, x1, y0, y1;
};

struct PreservationCheck {
    double residual;          // |rho-bar(preimage) - rho-bar(rect)|
    double preimage_measure;  // summed over first y-digits up to M (plus closed-form tail if y1 = 1)
    double measure;           // rho-bar(rect)
    double certificate;       // mass of first y-digits above M that was left out
};

// Preimage of A x B under the extension is the union over first digits i of
// B of u^i(A) x R_N(B cap I(i)). Throws TruncationTooCoarse when the
// omitted digits could carry more than `tolerance`.
PreservationCheck rho_bar_preservation_residual(const Rectangle& rect, const MeasureParams& m, Digit M,
                                                double tolerance = 1e-8);

}  // namespace renyi
