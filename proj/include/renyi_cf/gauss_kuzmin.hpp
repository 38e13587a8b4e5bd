#pragma once

// Two-dimensional Gauss-Kuzmin problem: the joint law of (R^n_N x, s^t_{N,n})
// under rho^t_N against its limit
//
//     G(x,y) = log[(x+N-1)(y+N-1) / ((N-1)(N-(1-x)(1-y)))] / log(N/(N-1)),
//
// with the error sandwiched between (1/2) P^{N(n)}_N(1) and (1/N + K_N)^n.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "renyi_cf/cf_core.hpp"
#include "renyi_cf/measures.hpp"

namespace renyi {

enum class Method { exact, monte_carlo };

std::string to_string(Method method);
Method parse_method(std::string_view text);

// Shares its implementation with rho_bar_cdf.
double limit_cdf(double x, double y, const MeasureParams& m);

// P^{N(n)}_N(t): weight of the cylinder of n digits all equal to N.
double minimal_digit_weight(const MeasureParams& m, std::size_t n, double t);

// (1/2)(N-1)/(N^{n+1}-1)
double gk_lower_bound(const MeasureParams& m, std::size_t n);
// (1/N + K_N)^n
double gk_upper_bound(const MeasureParams& m, std::size_t n);

// Values F(x_i, y_j) on a product grid, stored row-major in x.
struct JointCDF {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> values;
    // exact mode: F just below / above each y (by 1e-12), bracketing steps
    // that rounding may have put on the wrong side of a grid line; equal to
    // `values` for monte-carlo
    std::vector<double> lower;
    std::vector<double> upper;
    Method method = Method::exact;
    // exact: F_true lies in [F, F + tail] up to `tolerance - tail` of
    // rounding/expansion error; monte-carlo: uniform confidence half-width
    double tolerance = 0.0;
    double tail = 0.0;
    Digit cutoff = 0;
    std::uint64_t words = 0;
    std::uint64_t samples = 0;
    std::uint64_t discarded = 0;

    double at(std::size_t ix, std::size_t iy) const { return values[ix * ys.size() + iy]; }
};

struct ExactOptions {
    Digit cutoff = 60;
    double budget = 1e8;  // largest admissible (M - N + 1)^n
    // TruncationTooCoarse when the unenumerated mass exceeds this
    double max_tail = 1.0;
    unsigned threads = 1;
    // words with weight >= threshold are kept as individual steps of F(x, .);
    // negative selects automatically (all words when there are few)
    double atom_threshold = -1.0;
};

struct MonteCarloOptions {
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 1;
    double alpha = 0.01;  // confidence level 1 - alpha for the half-width
    unsigned threads = 1;
};

std::vector<double> uniform_grid(std::size_t points);

JointCDF joint_cdf_exact(double t, std::size_t n, const MeasureParams& m, const std::vector<double>& xs,
                         const std::vector<double>& ys, const ExactOptions& options = {});

JointCDF joint_cdf_mc(double t, std::size_t n, const MeasureParams& m, const std::vector<double>& xs,
                      const std::vector<double>& ys, const MonteCarloOptions& options = {});

// Half-width h with P(sup |F_S - F| > h) <= alpha for a bivariate empirical
// CDF from S samples.
double dkw_halfwidth(std::uint64_t samples, double alpha);

struct ErrorReport {
    Digit N = 0;
    double t = 0.0;
    std::size_t n = 0;
    double sup_error = 0.0;     // max |F - G| over grid and, in exact mode, both sides of large steps
    double sup_upper = 0.0;     // exact mode: bound on the sup over all y for grid x (before tolerance)
    double marginal_sup = 0.0;  // the x = 1 row: sup_y |F(1,y) - rho_cdf(y)|
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    Method method = Method::exact;
    double tolerance = 0.0;
    double tail = 0.0;
    double argmax_x = 0.0;
    double argmax_y = 0.0;
    std::size_t resolution = 0;
    Digit cutoff = 0;
    std::uint64_t words = 0;
    std::uint64_t atoms = 0;
    std::uint64_t samples = 0;
    std::uint64_t discarded = 0;
};

struct SupOptions {
    Method method = Method::exact;
    std::size_t resolution = 513;
    ExactOptions exact;
    MonteCarloOptions mc;
};

ErrorReport sup_error(double t, std::size_t n, const MeasureParams& m, const SupOptions& options = {});

struct BoundsRow {
    Digit N;
    double lower;  // 1/N
    double upper;  // 1/N + K_N
};

std::vector<BoundsRow> bounds_table(const std::vector<Digit>& Ns);

struct RateEstimate {
    double ratio;          // exp(slope)
    double slope;
    double intercept;
    double delta;          // 2 standard errors, on the ratio scale
    double lower;          // 1/N
    double upper;          // 1/N + K_N
    double lower_root;     // (lower_bound at the largest n)^(1/n)
    bool within() const { return ratio >= lower - delta && ratio <= upper + delta; }
};

// Least-squares fit of log sup_error against n.
RateEstimate rate_estimate(const std::vector<ErrorReport>& reports);

}  // namespace renyi
