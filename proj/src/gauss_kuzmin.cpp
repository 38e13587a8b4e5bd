#include "renyi_cf/gauss_kuzmin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "renyi_cf/errors.hpp"
#include "renyi_cf/summation.hpp"
#include "renyi_cf/transfer_op.hpp"

namespace renyi {

std::string to_string(Method method) { return method == Method::exact ? "exact" : "monte-carlo"; }

Method parse_method(std::string_view text) {
    if (text == "exact" || text == "exact-enumeration") return Method::exact;
    if (text == "monte-carlo" || text == "mc") return Method::monte_carlo;
    throw std::invalid_argument("unknown method '" + std::string(text) + "' (expected exact or monte-carlo)");
}

double limit_cdf(double x, double y, const MeasureParams& m) { return rho_bar_cdf(x, y, m); }

double minimal_digit_weight(const MeasureParams& m, std::size_t n, double t) {
    return cylinder_weight(DigitSequence(m.params, std::vector<Digit>(n, m.N())), t);
}

double gk_lower_bound(const MeasureParams& m, std::size_t n) {
    const double N = static_cast<double>(m.N());
    return 0.5 * (N - 1.0) / std::expm1(static_cast<double>(n + 1) * std::log(N));
}

double gk_upper_bound(const MeasureParams& m, std::size_t n) {
    return std::pow(contraction_ratio(m), static_cast<double>(n));
}

std::vector<double> uniform_grid(std::size_t points) {
    if (points < 2) throw std::invalid_argument("uniform_grid: need at least two points");
    std::vector<double> g(points);
    for (std::size_t k = 0; k < points; ++k) {
        g[k] = k + 1 == points ? 1.0 : static_cast<double>(k) / static_cast<double>(points - 1);
    }
    return g;
}

double dkw_halfwidth(std::uint64_t samples, double alpha) {
    if (samples == 0) throw InsufficientData("dkw_halfwidth: no samples");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("dkw_halfwidth: alpha must lie in (0,1)");
    const double S = static_cast<double>(samples);
    return std::sqrt(std::log(2.0 * (S + 1.0) / alpha) / (2.0 * S));
}

namespace {

void check_grid(const std::vector<double>& g, const char* what) {
    if (g.empty()) throw std::invalid_argument(std::string(what) + ": grid is empty");
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!(g[k] >= 0.0 && g[k] <= 1.0) || (k > 0 && !(g[k] > g[k - 1]))) {
            throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing inside [0,1]");
        }
    }
}

struct Node {
    double s;
    double w;
};

// One step of the chain and of the cylinder weight. Both enumeration passes
// go through here so that they agree bit for bit on every weight.
inline Node child(Node p, double di, double n) {
    const double a = p.s + di;
    const double inv = 1.0 / (a * (a - 1.0));
    // (a - n)/a rather than 1 - n/a keeps the state nonnegative
    return {(a - n) * (a - 1.0) * inv, p.w * (p.s + n - 1.0) * inv};
}

struct Atom {
    double z;
    double w;
};

constexpr int kBlocks = 8;
constexpr std::size_t kBuckets = std::size_t{1} << 18;
constexpr double kMaxCell = 1.0 / 2048.0;
// bound on the rounding error of a computed chain state s_n
constexpr double kEdge = 1e-12;

class Enumerator {
public:
    Enumerator(double t, std::size_t n, Digit N, Digit M) : t_(t), n_(n), N_(N), M_(M), dn_(static_cast<double>(N)) {}

    // words whose weight is at least theta
    std::vector<Atom> heavy(double theta) const {
        std::vector<Atom> out;
        collect(0, {t_, 1.0}, theta, out);
        return out;
    }

    struct Cells {
        const std::vector<double>* bounds;
        const std::vector<double>* centers;
        const std::vector<std::uint32_t>* table;
    };

    struct Block {
        std::vector<double> S;  // four moments per cell
        NeumaierSum mass;
        std::uint64_t leaves = 0;
    };

    void light(Digit first_lo, Digit first_hi, double theta, const Cells& cells, Block& b) const {
        b.S.assign(cells.centers->size() * 4, 0.0);
        for (Digit i = first_lo; i <= first_hi; ++i) {
            const Node c = child({t_, 1.0}, static_cast<double>(i), dn_);
            if (n_ == 1) {
                leaf(c, theta, cells, b);
            } else {
                descend(1, c, theta, cells, b);
            }
        }
    }

private:
    void collect(std::size_t depth, Node p, double theta, std::vector<Atom>& out) const {
        if (depth == n_) {
            out.push_back({p.s, p.w});
            return;
        }
        // P^i(s) decreases in i, so the first light child ends the row
        for (Digit i = N_; i <= M_; ++i) {
            const Node c = child(p, static_cast<double>(i), dn_);
            if (c.w < theta) break;
            collect(depth + 1, c, theta, out);
        }
    }

    void descend(std::size_t depth, Node p, double theta, const Cells& cells, Block& b) const {
        if (depth + 1 == n_) {
            for (Digit i = N_; i <= M_; ++i) leaf(child(p, static_cast<double>(i), dn_), theta, cells, b);
            return;
        }
        for (Digit i = N_; i <= M_; ++i) descend(depth + 1, child(p, static_cast<double>(i), dn_), theta, cells, b);
    }

    static void leaf(Node c, double theta, const Cells& cells, Block& b) {
        b.mass.add(c.w);
        ++b.leaves;
        if (c.w >= theta) return;
        const auto& C = *cells.bounds;
        std::size_t bucket = static_cast<std::size_t>(c.s * static_cast<double>(kBuckets));
        if (bucket >= kBuckets) bucket = kBuckets - 1;
        std::size_t k = (*cells.table)[bucket];
        while (C[k] < c.s) ++k;
        const double d = c.s - (*cells.centers)[k];
        const double wd = c.w * d;
        double* S = &b.S[4 * k];
        S[0] += c.w;
        S[1] += wd;
        S[2] += wd * d;
        S[3] += wd * d * d;
    }

    double t_;
    std::size_t n_;
    Digit N_, M_;
    double dn_;
};

struct SweepResult {
    JointCDF cdf;
    double sup_lo = 0.0;
    double sup_hi = 0.0;
    double marginal = 0.0;
    double arg_x = 0.0;
    double arg_y = 0.0;
    double moment_error = 0.0;
    double rounding = 0.0;
    std::uint64_t atoms = 0;
};

template <class Fn>
void run_parallel(unsigned threads, std::size_t jobs, Fn&& fn) {
    threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
    if (threads <= 1) {
        for (std::size_t j = 0; j < jobs; ++j) fn(j);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t j = w; j < jobs; j += threads) fn(j);
        });
    }
    for (auto& th : pool) th.join();
}

SweepResult exact_sweep(double t, std::size_t n, const MeasureParams& m, const std::vector<double>& xs,
                        const std::vector<double>& ys, const ExactOptions& opt) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("joint_cdf_exact: t must lie in [0,1]");
    check_grid(xs, "joint_cdf_exact");
    check_grid(ys, "joint_cdf_exact");
    const Digit N = m.N();
    const Digit M = opt.cutoff;
    if (M < N) throw std::invalid_argument("joint_cdf_exact: cutoff M must be >= N");
    const double per_level = static_cast<double>(M - N + 1);
    const double words = std::pow(per_level, static_cast<double>(n));
    if (words > opt.budget) {
        throw ComplexityGuard("joint_cdf_exact: " + std::to_string(M - N + 1) + "^" + std::to_string(n) +
                              " words exceed the budget of " + std::to_string(opt.budget));
    }
    const double theta = opt.atom_threshold >= 0.0 ? opt.atom_threshold : (words <= 131072.0 ? 0.0 : 2e-5);

    Enumerator en(t, n, N, M);
    std::vector<Atom> atoms = en.heavy(theta);
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.z < b.z; });

    // evaluation ordinates: the y grid with its kEdge neighbours, 0, 1 and
    // every heavy step
    std::vector<double> E;
    E.reserve(3 * ys.size() + atoms.size() + 2);
    E.push_back(0.0);
    E.push_back(1.0);
    for (double y : ys) {
        E.push_back(y);
        if (y - kEdge > 0.0) E.push_back(y - kEdge);
        if (y + kEdge < 1.0) E.push_back(y + kEdge);
    }
    for (const Atom& a : atoms) E.push_back(a.z);
    std::sort(E.begin(), E.end());
    E.erase(std::unique(E.begin(), E.end()), E.end());

    std::vector<double> jump(E.size(), 0.0);
    {
        std::size_t e = 0;
        for (const Atom& a : atoms) {
            while (E[e] < a.z) ++e;
            jump[e] += a.w;
        }
    }
    auto index_of = [&](double y) {
        return static_cast<std::ptrdiff_t>(std::lower_bound(E.begin(), E.end(), y) - E.begin());
    };
    // per ordinate: which grid column reads F there, and which read it as
    // the lower / upper envelope
    std::vector<std::ptrdiff_t> slot_mid(E.size(), -1), slot_lo(E.size(), -1), slot_hi(E.size(), -1);
    std::vector<std::size_t> hi_at_one;
    for (std::size_t j = 0; j < ys.size(); ++j) {
        const auto jj = static_cast<std::ptrdiff_t>(j);
        slot_mid[static_cast<std::size_t>(index_of(ys[j]))] = jj;
        // below 0 the lower envelope keeps its initial 0
        if (ys[j] - kEdge > 0.0) slot_lo[static_cast<std::size_t>(index_of(ys[j] - kEdge))] = jj;
        if (ys[j] + kEdge < 1.0) {
            slot_hi[static_cast<std::size_t>(index_of(ys[j] + kEdge))] = jj;
        } else {
            hi_at_one.push_back(j);
        }
    }

    // cells (C[k-1], C[k]] refine the ordinates down to kMaxCell
    std::vector<double> C{E[0]};
    std::vector<std::ptrdiff_t> eval_at{0};
    for (std::size_t e = 1; e < E.size(); ++e) {
        const double gap = E[e] - E[e - 1];
        const auto pieces = static_cast<std::size_t>(std::ceil(gap / kMaxCell));
        for (std::size_t j = 1; j < pieces; ++j) {
            C.push_back(E[e - 1] + gap * static_cast<double>(j) / static_cast<double>(pieces));
            eval_at.push_back(-1);
        }
        C.push_back(E[e]);
        eval_at.push_back(static_cast<std::ptrdiff_t>(e));
    }
    const std::size_t K = C.size();
    std::vector<double> centers(K), half(K);
    centers[0] = C[0];
    half[0] = 0.0;
    for (std::size_t k = 1; k < K; ++k) {
        centers[k] = 0.5 * (C[k - 1] + C[k]);
        half[k] = 0.5 * (C[k] - C[k - 1]);
    }
    std::vector<std::uint32_t> table(kBuckets);
    {
        std::size_t k = 0;
        for (std::size_t b = 0; b < kBuckets; ++b) {
            const double lo = static_cast<double>(b) / static_cast<double>(kBuckets);
            while (C[k] < lo) ++k;
            table[b] = static_cast<std::uint32_t>(k);
        }
    }

    std::vector<double> S(4 * K, 0.0);
    double mass = 0.0;
    std::uint64_t leaves = 0;
    if (theta > 0.0 && n > 0) {
        std::vector<Enumerator::Block> blocks(kBlocks);
        const Enumerator::Cells cells{&C, &centers, &table};
        const Digit span = M - N + 1;
        run_parallel(opt.threads, kBlocks, [&](std::size_t b) {
            const Digit lo = N + span * static_cast<Digit>(b) / kBlocks;
            const Digit hi = N + span * static_cast<Digit>(b + 1) / kBlocks - 1;
            if (lo <= hi) {
                en.light(lo, hi, theta, cells, blocks[b]);
            } else {
                blocks[b].S.assign(4 * K, 0.0);
            }
        });
        NeumaierSum total;
        for (auto& b : blocks) {
            for (std::size_t k = 0; k < 4 * K; ++k) S[k] += b.S[k];
            total.add(b.mass.value());
            leaves += b.leaves;
        }
        mass = total.value();
    } else {
        NeumaierSum total;
        for (const Atom& a : atoms) total.add(a.w);
        mass = total.value();
        leaves = atoms.size();
    }

    SweepResult out;
    out.atoms = atoms.size();
    JointCDF& cdf = out.cdf;
    cdf.xs = xs;
    cdf.ys = ys;
    cdf.values.assign(xs.size() * ys.size(), 0.0);
    cdf.lower.assign(xs.size() * ys.size(), 0.0);
    cdf.upper.assign(xs.size() * ys.size(), 0.0);
    cdf.method = Method::exact;
    cdf.cutoff = M;
    cdf.words = leaves;
    cdf.tail = std::max(0.0, 1.0 - mass);

    struct RowStats {
        double lo = 0.0, hi = 0.0, y = 0.0, rem = 0.0;
    };
    std::vector<RowStats> rows(xs.size());
    const double dn = static_cast<double>(N);
    run_parallel(opt.threads, xs.size(), [&](std::size_t ix) {
        const double x = xs[ix];
        const double A = dn - 1.0 + x;
        const double B = 1.0 - x;
        const double nx = dn * x;
        RowStats r;
        double F = 0.0;
        double prev_plus = 0.0;
        double prev_g = 0.0;
        for (std::size_t k = 0; k < K; ++k) {
            const double* s = &S[4 * k];
            if (s[0] > 0.0) {
                const double D = A + B * centers[k];
                const double q = -B / D;
                F += nx / D * (s[0] + q * (s[1] + q * (s[2] + q * s[3])));
                const double rho = B * half[k] / D;
                r.rem += nx / D * (rho * rho) * (rho * rho) / (1.0 - rho) * s[0];
            }
            if (eval_at[k] < 0) continue;
            const auto e = static_cast<std::size_t>(eval_at[k]);
            const double y = E[e];
            const double g = limit_cdf(x, y, m);
            const double minus = F;
            const double plus = F + jump[e] * nx / (A + B * y);
            const double err = std::max(std::abs(minus - g), std::abs(plus - g));
            if (err > r.lo) {
                r.lo = err;
                r.y = y;
            }
            if (e > 0) r.hi = std::max(r.hi, std::max(minus - prev_g, g - prev_plus));
            const std::size_t row = ix * ys.size();
            if (slot_mid[e] >= 0) cdf.values[row + static_cast<std::size_t>(slot_mid[e])] = plus;
            if (slot_lo[e] >= 0) cdf.lower[row + static_cast<std::size_t>(slot_lo[e])] = plus;
            if (slot_hi[e] >= 0) cdf.upper[row + static_cast<std::size_t>(slot_hi[e])] = plus;
            F = plus;
            prev_plus = plus;
            prev_g = g;
        }
        r.hi = std::max(r.hi, r.lo);
        for (std::size_t j : hi_at_one) cdf.upper[ix * ys.size() + j] = F;
        rows[ix] = r;
    });

    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
        const RowStats& r = rows[ix];
        if (r.lo > out.sup_lo || ix == 0) {
            out.sup_lo = r.lo;
            out.arg_x = xs[ix];
            out.arg_y = r.y;
        }
        out.sup_hi = std::max(out.sup_hi, r.hi);
        out.moment_error = std::max(out.moment_error, r.rem);
        if (xs[ix] == 1.0) out.marginal = r.lo;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    out.rounding = eps * (static_cast<double>(leaves) + static_cast<double>(K) + 16.0 * static_cast<double>(n + 1));
    cdf.tolerance = cdf.tail + out.moment_error + out.rounding;
    if (cdf.tail > opt.max_tail) {
        throw TruncationTooCoarse("joint_cdf_exact: unenumerated mass " + std::to_string(cdf.tail) +
                                  " exceeds " + std::to_string(opt.max_tail) + " at cutoff " + std::to_string(M));
    }
    return out;
}

}  // namespace

JointCDF joint_cdf_exact(double t, std::size_t n, const MeasureParams& m, const std::vector<double>& xs,
                         const std::vector<double>& ys, const ExactOptions& options) {
    return exact_sweep(t, n, m, xs, ys, options).cdf;
}

JointCDF joint_cdf_mc(double t, std::size_t n, const MeasureParams& m, const std::vector<double>& xs,
                      const std::vector<double>& ys, const MonteCarloOptions& options) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("joint_cdf_mc: t must lie in [0,1]");
    if (options.samples < 1) throw std::invalid_argument("joint_cdf_mc: need at least one sample");
    check_grid(xs, "joint_cdf_mc");
    check_grid(ys, "joint_cdf_mc");
    const ConditionalParam tp(t);
    const double dn = static_cast<double>(m.N());
    const double cap = static_cast<double>(m.params.digit_cap);
    const std::size_t nx = xs.size();
    const std::size_t ny = ys.size();

    constexpr std::uint64_t kChunk = 65536;
    const std::uint64_t chunks = (options.samples + kChunk - 1) / kChunk;
    struct Tally {
        std::vector<std::uint64_t> counts;
        std::uint64_t kept = 0;
        std::uint64_t dropped = 0;
    };
    const unsigned threads = std::max(1u, options.threads == 0 ? std::thread::hardware_concurrency() : options.threads);
    std::vector<Tally> tallies(std::min<std::uint64_t>(threads, chunks));
    for (auto& tl : tallies) tl.counts.assign(nx * ny, 0);

    auto run_chunk = [&](std::uint64_t c, Tally& tl) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
        std::mt19937_64 rng(seq);
        const std::uint64_t end = std::min(options.samples, (c + 1) * kChunk);
        for (std::uint64_t j = c * kChunk; j < end; ++j) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            double x = sample_rho_t(tp, m, u);
            double s = t;
            bool ok = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (!(x < 1.0)) {
                    ok = false;
                    break;
                }
                const double q = dn / (1.0 - x);
                if (q >= cap) {
                    ok = false;
                    break;
                }
                const double a = std::floor(q);
                x = q - a;
                s = 1.0 - dn / (a + s);
            }
            if (!ok) {
                ++tl.dropped;
                continue;
            }
            ++tl.kept;
            const auto ix = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
            const auto iy = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), s) - ys.begin());
            if (ix < nx && iy < ny) ++tl.counts[ix * ny + iy];
        }
    };
    run_parallel(static_cast<unsigned>(tallies.size()), tallies.size(), [&](std::size_t w) {
        for (std::uint64_t c = w; c < chunks; c += tallies.size()) run_chunk(c, tallies[w]);
    });

    std::vector<std::uint64_t> counts(nx * ny, 0);
    std::uint64_t kept = 0, dropped = 0;
    for (const auto& tl : tallies) {
        for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += tl.counts[k];
        kept += tl.kept;
        dropped += tl.dropped;
    }
    if (kept == 0) throw InsufficientData("joint_cdf_mc: every sampled orbit overflowed");

    // 2-D prefix sums
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            std::uint64_t v = counts[i * ny + j];
            if (i > 0) v += counts[(i - 1) * ny + j];
            if (j > 0) v += counts[i * ny + j - 1];
            if (i > 0 && j > 0) v -= counts[(i - 1) * ny + j - 1];
            counts[i * ny + j] = v;
        }
    }
    JointCDF cdf;
    cdf.xs = xs;
    cdf.ys = ys;
    cdf.method = Method::monte_carlo;
    cdf.values.resize(nx * ny);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        cdf.values[k] = static_cast<double>(counts[k]) / static_cast<double>(kept);
    }
    cdf.lower = cdf.values;
    cdf.upper = cdf.values;
    cdf.samples = kept;
    cdf.discarded = dropped;
    cdf.tolerance = dkw_halfwidth(kept, options.alpha);
    return cdf;
}

ErrorReport sup_error(double t, std::size_t n, const MeasureParams& m, const SupOptions& options) {
    ErrorReport rep;
    rep.N = m.N();
    rep.t = t;
    rep.n = n;
    rep.method = options.method;
    rep.resolution = options.resolution;
    rep.lower_bound = gk_lower_bound(m, n);
    rep.upper_bound = gk_upper_bound(m, n);
    const std::vector<double> grid = uniform_grid(options.resolution);

    if (options.method == Method::exact) {
        const SweepResult r = exact_sweep(t, n, m, grid, grid, options.exact);
        rep.sup_error = r.sup_lo;
        rep.sup_upper = r.sup_hi;
        rep.marginal_sup = r.marginal;
        rep.tolerance = r.cdf.tolerance;
        rep.tail = r.cdf.tail;
        rep.argmax_x = r.arg_x;
        rep.argmax_y = r.arg_y;
        rep.cutoff = r.cdf.cutoff;
        rep.words = r.cdf.words;
        rep.atoms = r.atoms;
        return rep;
    }

    const JointCDF cdf = joint_cdf_mc(t, n, m, grid, grid, options.mc);
    bool first = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double err = std::abs(cdf.at(i, j) - limit_cdf(grid[i], grid[j], m));
            if (first || err > rep.sup_error) {
                rep.sup_error = err;
                rep.argmax_x = grid[i];
                rep.argmax_y = grid[j];
                first = false;
            }
            if (grid[i] == 1.0) rep.marginal_sup = std::max(rep.marginal_sup, err);
        }
    }
    rep.sup_upper = rep.sup_error;
    rep.tolerance = cdf.tolerance;
    rep.samples = cdf.samples;
    rep.discarded = cdf.discarded;
    return rep;
}

std::vector<BoundsRow> bounds_table(const std::vector<Digit>& Ns) {
    std::vector<BoundsRow> rows;
    rows.reserve(Ns.size());
    for (Digit N : Ns) {
        const MeasureParams m(N);
        rows.push_back({N, 1.0 / static_cast<double>(N), contraction_ratio(m)});
    }
    return rows;
}

RateEstimate rate_estimate(const std::vector<ErrorReport>& reports) {
    if (reports.size() < 3) throw InsufficientData("rate_estimate: need at least three reports");
    for (std::size_t k = 1; k < reports.size(); ++k) {
        const auto& a = reports[k - 1];
        const auto& b = reports[k];
        if (a.N != b.N || a.t != b.t || a.method != b.method) {
            throw InsufficientData("rate_estimate: reports must share N, t and method");
        }
        if (!(b.n > a.n)) throw InsufficientData("rate_estimate: n must increase strictly");
    }
    for (const auto& r : reports) {
        if (!(r.sup_error > 0.0)) throw InsufficientData("rate_estimate: sup_error must be positive to take logs");
    }
    const double k = static_cast<double>(reports.size());
    double mx = 0.0, my = 0.0;
    for (const auto& r : reports) {
        mx += static_cast<double>(r.n);
        my += std::log(r.sup_error);
    }
    mx /= k;
    my /= k;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& r : reports) {
        const double dx = static_cast<double>(r.n) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(r.sup_error) - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double sse = 0.0;
    for (const auto& r : reports) {
        const double res = std::log(r.sup_error) - (intercept + slope * static_cast<double>(r.n));
        sse += res * res;
    }
    const double se = std::sqrt(sse / (k - 2.0) / sxx);
    const MeasureParams m(reports.front().N);
    RateEstimate est{};
    est.slope = slope;
    est.intercept = intercept;
    est.ratio = std::exp(slope);
    est.delta = 2.0 * est.ratio * se;
    est.lower = 1.0 / static_cast<double>(m.N());
    est.upper = contraction_ratio(m);
    const std::size_t nmax = reports.back().n;
    est.lower_root = std::pow(gk_lower_bound(m, nmax), 1.0 / static_cast<double>(nmax));
    return est;
}

}  // namespace renyi
