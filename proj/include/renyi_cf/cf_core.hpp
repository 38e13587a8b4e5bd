#pragma once

// Mechanics of the Renyi-type continued fraction
//
//     x = 1 - N / (1 + a1 - N / (1 + a2 - N / (1 + a3 - ...)))
//
// generated by R_N(x) = N/(1-x) - floor(N/(1-x)) on [0,1), R_N(1) = 0.
// Digits live in {N, N+1, ...}. Floating-point and exact rational variants
// are provided; the rational ones never round.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "renyi_cf/rational.hpp"

namespace renyi {

using Digit = std::int64_t;

inline constexpr Digit kDefaultDigitCap = Digit{1} << 53;

struct CFParams {
    Digit N;
    // digit() raises DigitOverflow above this value
    Digit digit_cap = kDefaultDigitCap;

    explicit CFParams(Digit n, Digit cap = kDefaultDigitCap);
};

// Finite word a_1..a_n over {N, N+1, ...}. The empty word is the trivial
// cylinder [0,1].
class DigitSequence {
public:
    explicit DigitSequence(CFParams params, std::vector<Digit> digits = {});

    const CFParams& params() const noexcept { return params_; }
    std::span<const Digit> digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    Digit operator[](std::size_t i) const { return digits_[i]; }

    DigitSequence prefix(std::size_t n) const;
    DigitSequence append(std::span<const Digit> more) const;

    friend bool operator==(const DigitSequence& a, const DigitSequence& b) {
        return a.params_.N == b.params_.N && a.digits_ == b.digits_;
    }

private:
    CFParams params_;
    std::vector<Digit> digits_;
};

struct ConvergentPair {
    BigInt p;
    BigInt q;
    std::size_t order;
};

// Half-open [low, high) of points sharing a digit prefix.
struct CylinderInterval {
    Rational low;
    Rational high;
    DigitSequence digits;

    bool contains(const Rational& x) const { return low <= x && x < high; }
};

struct Expansion {
    DigitSequence digits;
    // Set when the orbit reached x = 1 (where the digit is infinite) before
    // the requested length; holds the 1-based step whose digit is undefined.
    std::optional<std::size_t> terminated_at;
};

double renyi_map(double x, const CFParams& params);
Rational renyi_map(const Rational& x, const CFParams& params);

Digit digit(double x, const CFParams& params);
Digit digit(const Rational& x, const CFParams& params);

Expansion expand(double x, std::size_t n, const CFParams& params);
Expansion expand(const Rational& x, std::size_t n, const CFParams& params);

// Orders 0..n: p_0 = q_0 = 1, p_1 = 1 + a_1 - N, q_1 = 1 + a_1 and
// p_k = (1 + a_k) p_{k-1} - N p_{k-2} (same for q).
std::vector<ConvergentPair> convergents(const DigitSequence& digits);

// p_{n-1} q_n - p_n q_{n-1} - N^n for consecutive pairs. Always zero.
BigInt determinant_residual(const ConvergentPair& previous, const ConvergentPair& current,
                            const CFParams& params);

struct ApproximationCheck {
    Rational error;  // |x - p_n/q_n|
    Rational bound;  // N^n / (q_n (q_n - q_{n-1}))
    bool holds() const { return error <= bound; }
};

ApproximationCheck approximation_bound(const Rational& x, const ConvergentPair& previous,
                                       const ConvergentPair& current, const CFParams& params);
ApproximationCheck approximation_bound(double x, const ConvergentPair& previous,
                                       const ConvergentPair& current, const CFParams& params);

// Pulls [0,1) back through the inverse branches in reverse digit order.
CylinderInterval cylinder(const DigitSequence& digits);

// u^i_N(x) = 1 - N/(x + i), the right inverse of R_N on I(i).
double inverse_branch(double x, double i, Digit N);
Rational inverse_branch(const Rational& x, Digit i, Digit N);

// P^i_N(s) = (s + N - 1) / ((s + i)(s + i - 1)).
double branch_weight(double s, double i, Digit N);

// Sum of P^i_N(s) over i > M, i.e. (s + N - 1)/(s + M).
double branch_tail(double s, Digit M, Digit N);

// Value of the finite expansion [a_1, ..., a_n]_R with real-valued digits,
// evaluated from the innermost level outward.
double cf_value(std::span<const double> digits, Digit N);
Rational cf_value(const DigitSequence& digits);

}  // namespace renyi
