#pragma once

// Perron-Frobenius operator
//
//     U_N f(x) = sum_{i >= N} P^i_N(x) f(u^i_N(x))
//
// acting on piecewise-linear functions, plus cylinder weights of the
// conditional measures rho^t_N and the variation bounds built on
// K_N = 2 / (2N - 1 + 2 sqrt(N(N-1))).

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "renyi_cf/cf_core.hpp"
#include "renyi_cf/measures.hpp"

namespace renyi {

// Piecewise-linear function on [0,1] given by its values at strictly
// increasing breakpoints 0 = b_0 < ... < b_m = 1.
class GridFunction {
public:
    GridFunction(std::vector<double> breakpoints, std::vector<double> values);

    static GridFunction uniform(std::size_t points, const std::function<double(double)>& f);
    static GridFunction constant(double c) { return GridFunction({0.0, 1.0}, {c, c}); }

    const std::vector<double>& breakpoints() const noexcept { return x_; }
    const std::vector<double>& values() const noexcept { return v_; }
    std::size_t size() const noexcept { return x_.size(); }

    double operator()(double x) const;

    double variation() const;
    // variation of the interpolant restricted to [a,b]
    double variation_on(double a, double b) const;
    double sup_norm() const;

private:
    std::vector<double> x_;
    std::vector<double> v_;
};

inline double variation(const GridFunction& f) { return f.variation(); }

double k_constant(const MeasureParams& m);
// 1/N + K_N
double contraction_ratio(const MeasureParams& m);

// Sum over i of var_{[0,1]} P^i_N, with the exact remainder beyond M.
double branch_variation_sum(const MeasureParams& m, Digit M);

struct PfoOptions {
    std::optional<Digit> truncation;  // default max(1000, 50 N)
    std::size_t output_points = 1025;
    std::optional<std::vector<double>> output_grid;  // overrides output_points
    double tolerance = 1e-4;                         // on the truncation certificate
    unsigned threads = 1;
};

struct PfoResult {
    GridFunction g;
    double truncation_error;        // max_x tail(x) * var of f on [1 - N/(M+1), 1]
    double interpolation_estimate;  // max |second difference of g| / 8 over output cells
    Digit truncation;
};

Digit default_truncation(Digit N);

PfoResult pfo_apply(const GridFunction& f, const MeasureParams& m, const PfoOptions& options = {});

// Transfer operator with respect to Lebesgue measure,
// L_N f(x) = sum_i N/(x+i)^2 f(u^i(x)), summed directly to M with f(1) times
// the trigamma tail beyond; L_N fixes the invariant density, L_N f = h U_N(f/h).
GridFunction lebesgue_transfer(const GridFunction& f, Digit N, Digit M, std::vector<double> xs);

// rho^t_N-probability of the cylinder I(i_1..i_n): product of transition
// probabilities along the chain s_0 = t, s_k = u^{i_k}(s_{k-1}).
double cylinder_weight(const DigitSequence& digits, double t);

// Same quantity through the closed form in the polynomials q_k; needs n >= 2
// and falls back to the single factor for n = 1.
double cylinder_weight_qpoly(const DigitSequence& digits, double t);

// q_k(j_1..j_k) with q_0 = 1, q_1 = 1 + j_1, q_k = (1 + j_k) q_{k-1} - N q_{k-2}.
double q_poly(std::span<const double> j, Digit N);

// Integral of f against rho_N; exact for the piecewise-linear interpretant.
double pfo_fixed_functional(const GridFunction& f, const MeasureParams& m);

struct ContractionRow {
    std::size_t k;
    double variation;        // var U^k f
    double deviation;        // sup |U^k f - U^infinity f| on the output grid
    double bound;            // (1/N + K_N)^k var f
    double certificate;      // accumulated truncation + interpolation error up to step k
};

std::vector<ContractionRow> contraction_report(const GridFunction& f, const MeasureParams& m, std::size_t n,
                                               const PfoOptions& options = {});

}  // namespace renyi
