#include "renyi_cf/transfer_op.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "renyi_cf/errors.hpp"
#include "renyi_cf/summation.hpp"

namespace renyi {

GridFunction::GridFunction(std::vector<double> breakpoints, std::vector<double> values)
    : x_(std::move(breakpoints)), v_(std::move(values)) {
    if (x_.size() < 2 || x_.size() != v_.size()) {
        throw std::invalid_argument("GridFunction: need at least two breakpoints and one value per breakpoint");
    }
    if (x_.front() != 0.0 || x_.back() != 1.0) {
        throw std::invalid_argument("GridFunction: breakpoints must start at 0 and end at 1");
    }
    for (std::size_t k = 1; k < x_.size(); ++k) {
        if (!(x_[k] > x_[k - 1])) throw std::invalid_argument("GridFunction: breakpoints must be strictly increasing");
    }
    for (double v : v_) {
        if (!std::isfinite(v)) throw std::invalid_argument("GridFunction: values must be finite");
    }
}

GridFunction GridFunction::uniform(std::size_t points, const std::function<double(double)>& f) {
    if (points < 2) throw std::invalid_argument("GridFunction::uniform: need at least two points");
    std::vector<double> x(points), v(points);
    const double h = 1.0 / static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) {
        x[k] = k + 1 == points ? 1.0 : static_cast<double>(k) * h;
        v[k] = f(x[k]);
    }
    return GridFunction(std::move(x), std::move(v));
}

double GridFunction::operator()(double x) const {
    x = std::clamp(x, 0.0, 1.0);
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    if (it == x_.end()) return v_.back();
    const std::size_t k = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double s = (x - x_[k]) / (x_[k + 1] - x_[k]);
    return v_[k] + s * (v_[k + 1] - v_[k]);
}

double GridFunction::variation() const {
    NeumaierSum sum;
    for (std::size_t k = 1; k < v_.size(); ++k) sum.add(std::abs(v_[k] - v_[k - 1]));
    return sum.value();
}

double GridFunction::variation_on(double a, double b) const {
    a = std::clamp(a, 0.0, 1.0);
    b = std::clamp(b, 0.0, 1.0);
    if (!(b > a)) return 0.0;
    double prev = (*this)(a);
    NeumaierSum sum;
    auto it = std::upper_bound(x_.begin(), x_.end(), a);
    for (; it != x_.end() && *it < b; ++it) {
        const double v = v_[static_cast<std::size_t>(it - x_.begin())];
        sum.add(std::abs(v - prev));
        prev = v;
    }
    sum.add(std::abs((*this)(b) - prev));
    return sum.value();
}

double GridFunction::sup_norm() const {
    double s = 0.0;
    for (double v : v_) s = std::max(s, std::abs(v));
    return s;
}

double k_constant(const MeasureParams& m) {
    const double n = static_cast<double>(m.N());
    return 2.0 / (2.0 * n - 1.0 + 2.0 * std::sqrt(n * (n - 1.0)));
}

double contraction_ratio(const MeasureParams& m) { return 1.0 / static_cast<double>(m.N()) + k_constant(m); }

double branch_variation_sum(const MeasureParams& m, Digit M) {
    const Digit N = m.N();
    if (M < 2 * N) throw std::invalid_argument("branch_variation_sum: M must be >= 2N");
    const double n = static_cast<double>(N);
    NeumaierSum sum;
    for (Digit i = N; i <= M; ++i) {
        const double di = static_cast<double>(i);
        const double p0 = branch_weight(0.0, di, N);
        const double p1 = branch_weight(1.0, di, N);
        if (i <= 2 * N - 2) {
            sum.add(p0 - p1);
        } else if (i == 2 * N - 1) {
            const double xs = 1.0 - n + std::sqrt(n * (n - 1.0));
            sum.add(2.0 * branch_weight(xs, di, N) - p0 - p1);
        } else {
            sum.add(p1 - p0);
        }
    }
    // increasing branches beyond M: sum of P^i(1) - P^i(0) telescopes
    sum.add(n / static_cast<double>(M + 1) - (n - 1.0) / static_cast<double>(M));
    return sum.value();
}

Digit default_truncation(Digit N) { return std::max<Digit>(1000, 50 * N); }

namespace {

double apply_at(const GridFunction& f, double x, Digit N, Digit M) {
    const auto& bx = f.breakpoints();
    const auto& bv = f.values();
    const double n = static_cast<double>(N);
    NeumaierSum sum;
    std::size_t k = 0;
    for (Digit i = N; i <= M; ++i) {
        const double di = static_cast<double>(i);
        const double u = inverse_branch(x, di, N);
        while (k + 2 < bx.size() && bx[k + 1] <= u) ++k;
        const double s = (u - bx[k]) / (bx[k + 1] - bx[k]);
        const double fu = bv[k] + s * (bv[k + 1] - bv[k]);
        sum.add((x + n - 1.0) / ((x + di) * (x + di - 1.0)) * fu);
    }
    sum.add(branch_tail(x, M, N) * bv.back());
    return sum.value();
}

}  // namespace

PfoResult pfo_apply(const GridFunction& f, const MeasureParams& m, const PfoOptions& options) {
    const Digit N = m.N();
    const Digit M = options.truncation.value_or(default_truncation(N));
    if (M < N) throw std::invalid_argument("pfo_apply: truncation M must be >= N");

    const double cut = 1.0 - static_cast<double>(N) / static_cast<double>(M + 1);
    const double truncation_error = branch_tail(1.0, M, N) * f.variation_on(cut, 1.0);
    if (truncation_error > options.tolerance) {
        throw TruncationTooCoarse("pfo_apply: tail certificate " + std::to_string(truncation_error) +
                                  " exceeds tolerance " + std::to_string(options.tolerance) + " at M = " +
                                  std::to_string(M));
    }

    std::vector<double> xs;
    if (options.output_grid) {
        xs = *options.output_grid;
    } else {
        if (options.output_points < 2) throw std::invalid_argument("pfo_apply: output grid needs >= 2 points");
        xs.resize(options.output_points);
        const double h = 1.0 / static_cast<double>(options.output_points - 1);
        for (std::size_t k = 0; k < xs.size(); ++k) xs[k] = k + 1 == xs.size() ? 1.0 : static_cast<double>(k) * h;
    }
    std::vector<double> ys(xs.size());

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, xs.size()));
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) ys[k] = apply_at(f, xs[k], N, M);
    };
    if (threads <= 1) {
        work(0, xs.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (xs.size() + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(xs.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    double interp = 0.0;
    for (std::size_t k = 1; k + 1 < ys.size(); ++k) {
        interp = std::max(interp, std::abs(ys[k + 1] - 2.0 * ys[k] + ys[k - 1]) / 8.0);
    }
    return PfoResult{GridFunction(std::move(xs), std::move(ys)), truncation_error, interp, M};
}

GridFunction lebesgue_transfer(const GridFunction& f, Digit N, Digit M, std::vector<double> xs) {
    if (M < N) throw std::invalid_argument("lebesgue_transfer: truncation M must be >= N");
    const double n = static_cast<double>(N);
    std::vector<double> ys(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double x = xs[k];
        NeumaierSum s;
        for (Digit i = N; i <= M; ++i) {
            const double d = x + static_cast<double>(i);
            s.add(n / (d * d) * f(1.0 - n / d));
        }
        // sum_{i>M} 1/(x+i)^2 = psi'(a), asymptotic series at a = x+M+1
        const double a = x + static_cast<double>(M) + 1.0;
        const double a2 = a * a;
        const double trigamma = 1.0 / a + 1.0 / (2.0 * a2) + 1.0 / (6.0 * a2 * a) - 1.0 / (30.0 * a2 * a2 * a);
        s.add(n * trigamma * f(1.0));
        ys[k] = s.value();
    }
    return GridFunction(std::move(xs), std::move(ys));
}

double cylinder_weight(const DigitSequence& digits, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("cylinder_weight: t must lie in [0,1]");
    const Digit N = digits.params().N;
    double w = 1.0;
    double s = t;
    for (Digit i : digits.digits()) {
        const double di = static_cast<double>(i);
        w *= branch_weight(s, di, N);
        s = inverse_branch(s, di, N);
    }
    return w;
}

double q_poly(std::span<const double> j, Digit N) {
    const double n = static_cast<double>(N);
    double q2 = 1.0;  // q_{k-2}
    double q1 = 1.0;  // q_{k-1}
    for (std::size_t k = 0; k < j.size(); ++k) {
        const double q = k == 0 ? 1.0 + j[0] : (1.0 + j[k]) * q1 - n * q2;
        q2 = q1;
        q1 = q;
    }
    return q1;
}

double cylinder_weight_qpoly(const DigitSequence& digits, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("cylinder_weight_qpoly: t must lie in [0,1]");
    const Digit N = digits.params().N;
    const double n = static_cast<double>(N);
    const std::size_t len = digits.size();
    if (len == 0) return 1.0;
    if (len == 1) return branch_weight(t, static_cast<double>(digits[0]), N);

    std::vector<double> j(len);
    for (std::size_t k = 0; k < len; ++k) j[k] = static_cast<double>(digits[k]);
    std::vector<double> dec = j;
    dec.back() -= 1.0;

    const std::span<const double> tail1(j.data() + 1, len - 1);
    const std::span<const double> tail2(j.data() + 2, len - 2);
    const std::span<const double> dec1(dec.data() + 1, len - 1);
    const std::span<const double> dec2(dec.data() + 2, len - 2);

    const double a = t + j[0];
    const double first = a * q_poly(tail1, N) - n * q_poly(tail2, N);
    const double second = a * q_poly(dec1, N) - n * q_poly(dec2, N);
    return (t + n - 1.0) * std::pow(n, static_cast<double>(len - 1)) / first / second;
}

double pfo_fixed_functional(const GridFunction& f, const MeasureParams& m) {
    const auto& bx = f.breakpoints();
    const auto& bv = f.values();
    const double c = static_cast<double>(m.N()) - 1.0;
    NeumaierSum sum;
    for (std::size_t k = 0; k + 1 < bx.size(); ++k) {
        const double a = bx[k];
        const double w = bx[k + 1] - a;
        const double beta = (bv[k + 1] - bv[k]) / w;
        // int_a^b (v_k + beta (x - a)) / (x + N - 1) dx
        const double L = std::log1p(w / (a + c));
        sum.add(beta * w);
        sum.add((bv[k] - beta * (a + c)) * L);
    }
    return m.normalizer * sum.value();
}

std::vector<ContractionRow> contraction_report(const GridFunction& f, const MeasureParams& m, std::size_t n,
                                               const PfoOptions& options) {
    if (n < 1) throw std::invalid_argument("contraction_report: n must be >= 1");
    const double limit = pfo_fixed_functional(f, m);
    const double ratio = contraction_ratio(m);
    const double var0 = f.variation();

    auto deviation = [&](const GridFunction& g) {
        double d = 0.0;
        for (double v : g.values()) d = std::max(d, std::abs(v - limit));
        return d;
    };

    std::vector<ContractionRow> rows;
    rows.push_back({0, var0, deviation(f), var0, 0.0});
    GridFunction current = f;
    double budget = 0.0;
    double interp_prev = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        PfoResult r = pfo_apply(current, m, options);
        budget += r.truncation_error + interp_prev;
        interp_prev = r.interpolation_estimate;
        current = std::move(r.g);
        rows.push_back({k, current.variation(), deviation(current), std::pow(ratio, static_cast<double>(k)) * var0,
                        budget});
    }
    return rows;
}

}  // namespace renyi
