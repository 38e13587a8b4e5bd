#include "renyi_cf/cf_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "renyi_cf/errors.hpp"

namespace renyi {

CFParams::CFParams(Digit n, Digit cap) : N(n), digit_cap(cap) {
    if (n < 2) throw std::invalid_argument("CFParams: N must be >= 2, got " + std::to_string(n));
    if (cap < n) throw std::invalid_argument("CFParams: digit cap below N");
}

DigitSequence::DigitSequence(CFParams params, std::vector<Digit> digits)
    : params_(params), digits_(std::move(digits)) {
    for (std::size_t k = 0; k < digits_.size(); ++k) {
        if (digits_[k] < params_.N) {
            throw std::invalid_argument("DigitSequence: digit " + std::to_string(digits_[k]) + " at position " +
                                        std::to_string(k + 1) + " is below N = " + std::to_string(params_.N));
        }
    }
}

DigitSequence DigitSequence::prefix(std::size_t n) const {
    if (n > digits_.size()) throw std::out_of_range("DigitSequence::prefix");
    return DigitSequence(params_, std::vector<Digit>(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(n)));
}

DigitSequence DigitSequence::append(std::span<const Digit> more) const {
    std::vector<Digit> all = digits_;
    all.insert(all.end(), more.begin(), more.end());
    return DigitSequence(params_, std::move(all));
}

namespace {

void require_unit(double x, const char* where) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument(std::string(where) + ": x must lie in [0,1]");
}

void require_unit(const Rational& x, const char* where) {
    if (x < 0 || x > 1) throw std::invalid_argument(std::string(where) + ": x must lie in [0,1]");
}

}  // namespace

double renyi_map(double x, const CFParams& params) {
    require_unit(x, "renyi_map");
    if (x == 1.0) return 0.0;
    const double q = static_cast<double>(params.N) / (1.0 - x);
    return q - std::floor(q);
}

Rational renyi_map(const Rational& x, const CFParams& params) {
    require_unit(x, "renyi_map");
    if (x == 1) return Rational(0);
    const Rational q = Rational(params.N) / (1 - x);
    return q - Rational(floor(q));
}

Digit digit(double x, const CFParams& params) {
    require_unit(x, "digit");
    if (x == 1.0) throw DigitOverflow("digit: a_1(1) is infinite");
    const double q = std::floor(static_cast<double>(params.N) / (1.0 - x));
    if (q > static_cast<double>(params.digit_cap)) {
        throw DigitOverflow("digit: floor(N/(1-x)) exceeds the digit cap near x = 1");
    }
    return static_cast<Digit>(q);
}

Digit digit(const Rational& x, const CFParams& params) {
    require_unit(x, "digit");
    if (x == 1) throw DigitOverflow("digit: a_1(1) is infinite");
    const BigInt q = floor(Rational(params.N) / (1 - x));
    if (q > params.digit_cap) throw DigitOverflow("digit: floor(N/(1-x)) exceeds the digit cap near x = 1");
    return q.convert_to<Digit>();
}

namespace {

template <class Real>
Expansion expand_impl(Real x, std::size_t n, const CFParams& params) {
    if (n < 1) throw std::invalid_argument("expand: n must be >= 1");
    std::vector<Digit> out;
    out.reserve(n);
    std::optional<std::size_t> terminated;
    for (std::size_t k = 0; k < n; ++k) {
        if (x == 1) {
            terminated = k + 1;
            break;
        }
        out.push_back(digit(x, params));
        x = renyi_map(x, params);
    }
    return {DigitSequence(params, std::move(out)), terminated};
}

}  // namespace

Expansion expand(double x, std::size_t n, const CFParams& params) { return expand_impl(x, n, params); }

Expansion expand(const Rational& x, std::size_t n, const CFParams& params) {
    return expand_impl<Rational>(x, n, params);
}

std::vector<ConvergentPair> convergents(const DigitSequence& digits) {
    const BigInt N = digits.params().N;
    std::vector<ConvergentPair> out;
    out.reserve(digits.size() + 1);
    out.push_back({1, 1, 0});
    if (digits.empty()) return out;
    out.push_back({1 + digits[0] - N, 1 + digits[0], 1});
    for (std::size_t k = 1; k < digits.size(); ++k) {
        const BigInt c = 1 + digits[k];
        const auto& a = out[k];
        const auto& b = out[k - 1];
        out.push_back({c * a.p - N * b.p, c * a.q - N * b.q, k + 1});
    }
    return out;
}

BigInt determinant_residual(const ConvergentPair& previous, const ConvergentPair& current,
                            const CFParams& params) {
    if (current.order != previous.order + 1) {
        throw std::invalid_argument("determinant_residual: pairs must have consecutive orders");
    }
    const BigInt power = boost::multiprecision::pow(BigInt(params.N), static_cast<unsigned>(current.order));
    return previous.p * current.q - current.p * previous.q - power;
}

ApproximationCheck approximation_bound(const Rational& x, const ConvergentPair& previous,
                                       const ConvergentPair& current, const CFParams& params) {
    if (current.order < 1 || current.order != previous.order + 1) {
        throw std::invalid_argument("approximation_bound: need consecutive orders n-1, n with n >= 1");
    }
    Rational error = x - Rational(current.p, current.q);
    if (error < 0) error = -error;
    const BigInt power = boost::multiprecision::pow(BigInt(params.N), static_cast<unsigned>(current.order));
    const Rational bound(power, current.q * (current.q - previous.q));
    return {error, bound};
}

ApproximationCheck approximation_bound(double x, const ConvergentPair& previous,
                                       const ConvergentPair& current, const CFParams& params) {
    return approximation_bound(exact_rational(x), previous, current, params);
}

CylinderInterval cylinder(const DigitSequence& digits) {
    const Digit N = digits.params().N;
    Rational low(0);
    Rational high(1);
    for (std::size_t k = digits.size(); k-- > 0;) {
        low = inverse_branch(low, digits[k], N);
        high = inverse_branch(high, digits[k], N);
    }
    return {low, high, digits};
}

double inverse_branch(double x, double i, Digit N) { return 1.0 - static_cast<double>(N) / (x + i); }

Rational inverse_branch(const Rational& x, Digit i, Digit N) { return 1 - Rational(N) / (x + i); }

double branch_weight(double s, double i, Digit N) {
    return (s + static_cast<double>(N) - 1.0) / ((s + i) * (s + i - 1.0));
}

double branch_tail(double s, Digit M, Digit N) {
    return (s + static_cast<double>(N) - 1.0) / (s + static_cast<double>(M));
}

double cf_value(std::span<const double> digits, Digit N) {
    if (digits.empty()) return 1.0;
    const double n = static_cast<double>(N);
    double r = 1.0 + digits.back();
    for (std::size_t k = digits.size() - 1; k-- > 0;) r = 1.0 + digits[k] - n / r;
    return 1.0 - n / r;
}

Rational cf_value(const DigitSequence& digits) {
    if (digits.empty()) return Rational(1);
    const Rational n(digits.params().N);
    Rational r = 1 + Rational(digits[digits.size() - 1]);
    for (std::size_t k = digits.size() - 1; k-- > 0;) r = 1 + Rational(digits[k]) - n / r;
    return 1 - n / r;
}

}  // namespace renyi
