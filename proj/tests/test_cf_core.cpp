#include <doctest.h>

#include <cmath>
#include <random>

#include "renyi_cf/cf_core.hpp"
#include "renyi_cf/errors.hpp"

using namespace renyi;

namespace {

// value of a word by composing the inverse branches on 1, independent of the
// continued-fraction evaluation in the library
Rational compose_branches(const DigitSequence& d) {
    Rational v(1);
    for (std::size_t k = d.size(); k-- > 0;) v = 1 - Rational(d.params().N) / (v + d[k]);
    return v;
}

DigitSequence random_word(std::mt19937_64& rng, Digit N, std::size_t len, Digit spread) {
    std::uniform_int_distribution<Digit> dig(N, N + spread);
    std::vector<Digit> w(len);
    for (auto& a : w) a = dig(rng);
    return DigitSequence(CFParams(N), w);
}

}  // namespace

TEST_CASE("parameters and digit words are validated") {
    CHECK_THROWS_AS(CFParams(1), std::invalid_argument);
    CHECK_NOTHROW(CFParams(2));
    CHECK_THROWS_AS(DigitSequence(CFParams(3), {3, 2}), std::invalid_argument);
    const DigitSequence d(CFParams(2), {3, 2, 5});
    CHECK(d.prefix(2) == DigitSequence(CFParams(2), {3, 2}));
    const std::vector<Digit> more{7};
    CHECK(d.append(more).size() == 4);
}

TEST_CASE("parse_rational and exact_rational") {
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("25e-2") == Rational(1, 4));
    CHECK(exact_rational(0.1) != Rational(1, 10));
    CHECK(to_double(exact_rational(0.1)) == 0.1);
    CHECK(exact_rational(0.375) == Rational(3, 8));
    CHECK(is_fraction_literal("22/7"));
    CHECK_FALSE(is_fraction_literal("0.5"));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK(floor(Rational(-1, 2)) == -1);
}

TEST_CASE("map and digits") {
    const CFParams p(2);
    CHECK(digit(0.0, p) == 2);
    CHECK(renyi_map(0.0, p) == 0.0);
    CHECK(renyi_map(1.0, p) == 0.0);
    CHECK(digit(0.5, p) == 4);
    CHECK_THROWS_AS(digit(1.0, p), DigitOverflow);
    CHECK_THROWS_AS(digit(Rational(1), p), DigitOverflow);
    CHECK_THROWS_AS(digit(1.0 - 1e-15, CFParams(2, 1000)), DigitOverflow);
    CHECK_THROWS_AS(renyi_map(1.5, p), std::invalid_argument);
    // rational and floating maps agree where the float is exact
    const Rational x(3, 8);
    CHECK(to_double(renyi_map(x, p)) == doctest::Approx(renyi_map(0.375, p)).epsilon(1e-15));
}

TEST_CASE("expand 1/3 with N = 2 gives 3,2,2,2,2") {
    const Expansion e = expand(Rational(1, 3), 5, CFParams(2));
    CHECK(e.digits == DigitSequence(CFParams(2), {3, 2, 2, 2, 2}));
    CHECK_FALSE(e.terminated_at.has_value());
    CHECK_THROWS_AS(expand(Rational(1, 3), 0, CFParams(2)), std::invalid_argument);
}

TEST_CASE("expansion stops at x = 1") {
    const Expansion e = expand(Rational(1), 3, CFParams(2));
    CHECK(e.digits.empty());
    REQUIRE(e.terminated_at.has_value());
    CHECK(*e.terminated_at == 1);
}

TEST_CASE("convergents match composed branches and the determinant identity") {
    std::mt19937_64 rng(11);
    for (Digit N : {2, 3, 5, 10, 100}) {
        for (int rep = 0; rep < 40; ++rep) {
            const DigitSequence d = random_word(rng, N, 1 + rng() % 20, 3 * N);
            const auto conv = convergents(d);
            REQUIRE(conv.size() == d.size() + 1);
            CHECK(conv[0].p == 1);
            CHECK(conv[0].q == 1);
            for (std::size_t k = 1; k < conv.size(); ++k) {
                CHECK(Rational(conv[k].p, conv[k].q) == compose_branches(d.prefix(k)));
                CHECK(Rational(conv[k].p, conv[k].q) == cf_value(d.prefix(k)));
                CHECK(determinant_residual(conv[k - 1], conv[k], d.params()) == 0);
            }
        }
    }
}

TEST_CASE("approximation bound holds for random rationals") {
    std::mt19937_64 rng(5);
    for (Digit N : {2, 3, 7}) {
        const CFParams p(N);
        for (int rep = 0; rep < 60; ++rep) {
            const Rational x(static_cast<long long>(rng() % 100000), 100003);
            const Expansion e = expand(x, 12, p);
            const auto conv = convergents(e.digits);
            for (std::size_t k = 1; k < conv.size(); ++k) {
                CHECK(approximation_bound(x, conv[k - 1], conv[k], p).holds());
            }
        }
    }
}

TEST_CASE("cylinders") {
    const CylinderInterval I = cylinder(DigitSequence(CFParams(2), {2, 2}));
    CHECK(I.low == 0);
    CHECK(I.high == Rational(1, 7));
    const CylinderInterval one = cylinder(DigitSequence(CFParams(3), {4}));
    CHECK(one.low == Rational(1, 4));
    CHECK(one.high == Rational(2, 5));
    CHECK(cylinder(DigitSequence(CFParams(2))).high == 1);

    // brute-force membership: points of the cylinder expand with its prefix,
    // points just outside do not
    std::mt19937_64 rng(3);
    for (Digit N : {2, 3, 5}) {
        for (int rep = 0; rep < 30; ++rep) {
            const DigitSequence d = random_word(rng, N, 1 + rng() % 5, 6);
            const CylinderInterval c = cylinder(d);
            for (int j = 0; j < 5; ++j) {
                const Rational frac(static_cast<long long>(rng() % 997), 997);
                const Rational x = c.low + (c.high - c.low) * frac;
                CHECK(c.contains(x));
                CHECK(expand(x, d.size(), d.params()).digits == d);
            }
            if (c.high < 1) CHECK_FALSE(expand(c.high, d.size(), d.params()).digits == d);
        }
    }
}

TEST_CASE("inverse branches") {
    CHECK(inverse_branch(0.0, 2.0, 2) == 0.0);
    CHECK(inverse_branch(1.0, 3.0, 3) == doctest::Approx(1.0 - 3.0 / 4.0));
    CHECK(renyi_map(inverse_branch(0.37, 5.0, 3), CFParams(3)) == doctest::Approx(0.37).epsilon(1e-12));
    CHECK(inverse_branch(Rational(1, 2), 4, 2) == Rational(5, 9));
    CHECK(branch_weight(0.0, 2.0, 2) == doctest::Approx(0.5));
    CHECK(branch_weight(1.0, 3.0, 3) == doctest::Approx(0.25));
    CHECK(branch_tail(1.0, 10, 2) == doctest::Approx(2.0 / 11.0));
}

TEST_CASE("real-digit evaluation") {
    const std::vector<double> empty;
    CHECK(cf_value(empty, 2) == 1.0);
    const std::vector<double> one{3.0};
    CHECK(cf_value(one, 2) == doctest::Approx(1.0 - 2.0 / 4.0));
    const std::vector<double> two{3.0, 2.0};
    CHECK(cf_value(two, 2) == doctest::Approx(to_double(cf_value(DigitSequence(CFParams(2), {3, 2})))));
}
