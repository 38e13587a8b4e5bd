#include <doctest.h>

#include <cmath>
#include <random>

#include "renyi_cf/errors.hpp"
#include "renyi_cf/measures.hpp"

using namespace renyi;

namespace {

// 20-point Gauss-Legendre on [a,b] split into `panels` pieces
template <class F>
double quad(F f, double a, double b, int panels = 16) {
    static const double xg[10] = {0.0765265211334973, 0.2277858511416451, 0.3737060887154195, 0.5108670019508271,
                                  0.6360536807265150, 0.7463319064601508, 0.8391169718222188, 0.9122344282513259,
                                  0.9639719272779138, 0.9931285991850949};
    static const double wg[10] = {0.1527533871307258, 0.1491729864726037, 0.1420961093183820, 0.1316886384491766,
                                  0.1181945319615184, 0.1019301198172404, 0.0832767415767048, 0.0626720483341091,
                                  0.0406014298003869, 0.0176140071391521};
    double s = 0.0;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double c = a + (p + 0.5) * h;
        const double r = 0.5 * h;
        for (int k = 0; k < 10; ++k) s += wg[k] * r * (f(c - r * xg[k]) + f(c + r * xg[k]));
    }
    return s;
}

}  // namespace

TEST_CASE("normalizer and density") {
    const MeasureParams m(2);
    CHECK(m.normalizer == doctest::Approx(1.0 / std::log(2.0)));
    CHECK(rho_density(0.0, m) == doctest::Approx(1.0 / std::log(2.0)));
    CHECK_THROWS_AS(rho_density(1.5, m), std::invalid_argument);
    CHECK_THROWS_AS(ConditionalParam(-0.1), std::invalid_argument);
}

TEST_CASE("rho_cdf agrees with quadrature of the density") {
    for (Digit N : {2, 3, 10, 100}) {
        const MeasureParams m(N);
        CHECK(rho_cdf(0.0, m) == 0.0);
        CHECK(rho_cdf(1.0, m) == doctest::Approx(1.0).epsilon(1e-15));
        for (double x : {0.1, 0.37, 0.5, 0.9}) {
            const double q = quad([&](double u) { return rho_density(u, m); }, 0.0, x);
            CHECK(rho_cdf(x, m) == doctest::Approx(q).epsilon(1e-13));
        }
    }
}

TEST_CASE("rho_bar_cdf") {
    const MeasureParams m2(2);
    CHECK(rho_bar_cdf(0.5, 0.5, m2) == doctest::Approx(0.3625701).epsilon(1e-7));
    for (Digit N : {2, 3, 7}) {
        const MeasureParams m(N);
        CHECK(rho_bar_cdf(1.0, 1.0, m) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(rho_bar_cdf(0.0, 0.7, m) == 0.0);
        for (double x : {0.2, 0.6, 1.0}) {
            CHECK(rho_bar_cdf(x, 1.0, m) == doctest::Approx(rho_cdf(x, m)).epsilon(1e-14));
            CHECK(rho_bar_cdf(1.0, x, m) == doctest::Approx(rho_cdf(x, m)).epsilon(1e-14));
        }
        // density normalizer * N / (N - (1-x)(1-y))^2 integrated over the box
        const double n = static_cast<double>(N);
        for (auto [x, y] : {std::pair{0.3, 0.8}, std::pair{0.9, 0.1}, std::pair{0.55, 0.55}}) {
            const double q = quad(
                [&](double u) {
                    return quad([&](double v) { return m.normalizer * n / std::pow(n - (1 - u) * (1 - v), 2); },
                                0.0, y, 4);
                },
                0.0, x, 4);
            CHECK(rho_bar_cdf(x, y, m) == doctest::Approx(q).epsilon(1e-12));
        }
    }
}

TEST_CASE("rho_bar_rect matches inclusion-exclusion and stays accurate for tiny boxes") {
    const MeasureParams m(3);
    const double x0 = 0.2, x1 = 0.7, y0 = 0.1, y1 = 0.45;
    const double ie = rho_bar_cdf(x1, y1, m) - rho_bar_cdf(x0, y1, m) - rho_bar_cdf(x1, y0, m) +
                      rho_bar_cdf(x0, y0, m);
    CHECK(rho_bar_rect(x0, x1 - x0, y0, y1 - y0, m) == doctest::Approx(ie).epsilon(1e-13));
    // tiny box: mass ~ density * area
    const double n = 3.0;
    const double dens = m.normalizer * n / std::pow(n - (1 - 0.4) * (1 - 0.6), 2);
    CHECK(rho_bar_rect(0.4, 1e-9, 0.6, 1e-9, m) == doctest::Approx(dens * 1e-18).epsilon(1e-7));
    CHECK(rho_bar_rect(0.4, 0.0, 0.6, 0.3, m) == 0.0);
}

TEST_CASE("conditional family and its sampler") {
    const MeasureParams m(2);
    for (double t : {0.0, 0.5, 1.0}) {
        const ConditionalParam c(t);
        CHECK(rho_t_cdf(0.0, c, m) == 0.0);
        CHECK(rho_t_cdf(1.0, c, m) == doctest::Approx(1.0));
        for (double u : {0.0, 0.1, 0.5, 0.93, 1.0}) {
            CHECK(rho_t_cdf(sample_rho_t(c, m, u), c, m) == doctest::Approx(u).epsilon(1e-14));
        }
    }
    // rho_N is the mixture of rho^t over t with the rho_N law of t; check
    // rho_cdf(x) = int rho_t_cdf(x) rho(dt) numerically
    const MeasureParams m3(3);
    for (double x : {0.25, 0.8}) {
        const double q =
            quad([&](double t) { return rho_t_cdf(x, ConditionalParam(t), m3) * rho_density(t, m3); }, 0.0, 1.0);
        CHECK(q == doctest::Approx(rho_cdf(x, m3)).epsilon(1e-13));
    }
}

TEST_CASE("invariance residual") {
    for (Digit N : {2, 3, 5, 10}) {
        const MeasureParams m(N);
        for (int k = 0; k <= 20; ++k) {
            const double x = k / 20.0;
            const InvarianceCheck c = invariance_residual(x, m, 1000);
            CHECK(c.residual < 1e-12);
            CHECK(c.certificate <= 1e-10);
        }
    }
    const MeasureParams m(2);
    CHECK_THROWS_AS(invariance_residual(0.5, m, 100, 1e-10, TailPolicy::bounded), TruncationTooCoarse);
    const InvarianceCheck b = invariance_residual(0.5, m, 100, 1.0, TailPolicy::bounded);
    // without the analytic tail the residual is the tail itself
    CHECK(b.residual == doctest::Approx(b.tail).epsilon(1e-9));
    CHECK(b.tail == doctest::Approx(m.normalizer * std::log1p(0.5 / 100)).epsilon(1e-14));
    CHECK_THROWS_AS(invariance_residual(0.5, m, 1), std::invalid_argument);
}
