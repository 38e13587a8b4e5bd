#include "renyi_cf/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace renyi {

Rational exact_rational(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("exact_rational: non-finite value");
    if (x == 0.0) return Rational(0);
    int exponent = 0;
    const double mantissa = std::frexp(x, &exponent);
    // mantissa * 2^53 is an exact integer for every finite double
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational r{BigInt(scaled)};
    if (exponent > 0) {
        r *= Rational(BigInt(1) << exponent);
    } else if (exponent < 0) {
        r /= Rational(BigInt(1) << -exponent);
    }
    return r;
}

bool is_fraction_literal(std::string_view text) {
    for (const char c : text) {
        if (c == '.' || c == 'e' || c == 'E') return false;
    }
    return true;
}

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty integer");
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw std::invalid_argument("parse_rational: missing digits");
    BigInt v = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("parse_rational: bad character in '" + std::string(text) + "'");
        }
        v = v * 10 + (c - '0');
    }
    return negative ? BigInt(-v) : v;
}

Rational parse_decimal(std::string_view text) {
    std::string_view mantissa = text;
    long long exp10 = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        exp10 = static_cast<long long>(parse_integer(text.substr(e + 1)));
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
        negative = mantissa[0] == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long long frac_digits = 0;
    bool seen_point = false;
    for (const char c : mantissa) {
        if (c == '.') {
            if (seen_point) throw std::invalid_argument("parse_rational: two decimal points");
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++frac_digits;
        } else {
            throw std::invalid_argument("parse_rational: bad character in '" + std::string(text) + "'");
        }
    }
    if (digits.empty()) throw std::invalid_argument("parse_rational: missing digits");
    Rational r{parse_integer(digits)};
    const long long shift = exp10 - frac_digits;
    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(shift)));
    if (shift >= 0) {
        r *= Rational(scale);
    } else {
        r /= Rational(scale);
    }
    return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("parse_rational: empty input");
    if (!is_fraction_literal(text)) return parse_decimal(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const BigInt num = parse_integer(text.substr(0, slash));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    const BigInt& den = boost::multiprecision::denominator(r);
    if (den == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

std::string to_string(const BigInt& v) { return v.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt floor(const Rational& r) {
    const BigInt& num = boost::multiprecision::numerator(r);
    const BigInt& den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

}  // namespace renyi
