#include "monorm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monorm {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double l2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Divide by the lp norm in place; returns false when the vector is zero.
bool normalize_lp(Vec& x, Exponent p) {
    const double n = lq_norm(x, p);
    if (n == 0.0) return false;
    for (double& v : x) v /= n;
    return true;
}

}  // namespace

std::string_view to_string(OracleMethod m) {
    switch (m) {
        case OracleMethod::VertexSimplex: return "vertex-simplex";
        case OracleMethod::VertexStep: return "vertex-step";
        case OracleMethod::ConcaveMajorant: return "concave-majorant";
        case OracleMethod::ProjGrad: return "projected-gradient";
    }
    return {};
}

Exactness exactness_of(OracleMethod m) {
    switch (m) {
        case OracleMethod::VertexSimplex:
        case OracleMethod::VertexStep: return Exactness::VertexExact;
        case OracleMethod::ConcaveMajorant: return Exactness::MajorantExact;
        case OracleMethod::ProjGrad: return Exactness::NumericalLowerBound;
    }
    return Exactness::NumericalLowerBound;
}

int effective_threads() {
#ifdef _OPENMP
    int t = omp_get_max_threads();
    if (const char* env = std::getenv("MONOTONE_NORM_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) t = std::min(t, cap);
    }
    return std::max(t, 1);
#else
    return 1;
#endif
}

Vec pava_decreasing(std::span<const double> y) {
    std::vector<double> mean;
    std::vector<std::size_t> count;
    mean.reserve(y.size());
    count.reserve(y.size());
    for (double v : y) {
        mean.push_back(v);
        count.push_back(1);
        while (mean.size() >= 2 && mean[mean.size() - 2] < mean.back()) {
            const double m2 = mean.back();
            const std::size_t c2 = count.back();
            mean.pop_back();
            count.pop_back();
            const double m1 = mean.back();
            const std::size_t c1 = count.back();
            mean.back() = (m1 * static_cast<double>(c1) + m2 * static_cast<double>(c2)) /
                          static_cast<double>(c1 + c2);
            count.back() = c1 + c2;
        }
    }
    Vec out;
    out.reserve(y.size());
    for (std::size_t b = 0; b < mean.size(); ++b)
        out.insert(out.end(), count[b], mean[b]);
    return out;
}

namespace {

// Scan n = 1..cols of ||A v_n||_q where v_n has ones in the first n slots,
// scaled by 1/n when `simplex`. The running column accumulation is always in
// ascending column order, so per-n values are identical for any thread count.
OracleResult vertex_scan(const NonNegMatrix& A, Exponent q, bool simplex, ExecMode exec) {
    const std::size_t rows = A.rows(), cols = A.cols();
    const int T = exec == ExecMode::Parallel
                      ? static_cast<int>(std::min<std::size_t>(effective_threads(), cols))
                      : 1;

    std::vector<double> best_val(T, -1.0);
    std::vector<std::size_t> best_n(T, 0);

#ifdef _OPENMP
#pragma omp parallel num_threads(T) if (T > 1)
#endif
    {
#ifdef _OPENMP
        const int t = T > 1 ? omp_get_thread_num() : 0;
#else
        const int t = 0;
#endif
        const std::size_t lo = cols * static_cast<std::size_t>(t) / T;
        const std::size_t hi = cols * static_cast<std::size_t>(t + 1) / T;
        Vec y(rows, 0.0);
        for (std::size_t k = 0; k < lo; ++k)
            for (std::size_t j = 0; j < rows; ++j) y[j] += A(j, k);
        double bv = -1.0;
        std::size_t bn = 0;
        for (std::size_t k = lo; k < hi; ++k) {
            for (std::size_t j = 0; j < rows; ++j) y[j] += A(j, k);
            const std::size_t n = k + 1;
            double v = lq_norm(y, q);
            if (simplex) v /= static_cast<double>(n);
            if (v > bv) {
                bv = v;
                bn = n;
            }
        }
        best_val[t] = bv;
        best_n[t] = bn;
    }

    std::size_t win = 0;
    for (int t = 1; t < T; ++t)
        if (best_val[t] > best_val[win]) win = t;

    OracleResult res;
    res.value = std::max(best_val[win], 0.0);
    res.method = simplex ? OracleMethod::VertexSimplex : OracleMethod::VertexStep;
    const std::size_t n = std::max<std::size_t>(best_n[win], 1);
    res.argmax.assign(cols, 0.0);
    const double fill = simplex ? 1.0 / static_cast<double>(n) : 1.0;
    std::fill(res.argmax.begin(), res.argmax.begin() + static_cast<std::ptrdiff_t>(n), fill);
    return res;
}

}  // namespace

OracleResult vertex_simplex_norm(const NonNegMatrix& A, Exponent q, ExecMode exec) {
    return vertex_scan(A, q, true, exec);
}

OracleResult vertex_step_norm(const NonNegMatrix& A, Exponent q, ExecMode exec) {
    return vertex_scan(A, q, false, exec);
}

OracleResult linear_downward_max(std::span<const double> s, Exponent p) {
    if (!p.is_finite())
        throw std::invalid_argument("linear_downward_max requires 1 < p < inf");
    for (double v : s)
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("linear_downward_max: s must be finite and >= 0");

    OracleResult res;
    res.method = OracleMethod::ConcaveMajorant;
    const Vec level = pava_decreasing(s);
    res.value = lq_norm(level, p.conjugate());
    const double e = p.conjugate().value() - 1.0;
    Vec x(level.size());
    for (std::size_t k = 0; k < level.size(); ++k)
        x[k] = level[k] == 0.0 ? 0.0 : std::pow(level[k], e);
    if (!normalize_lp(x, p)) {
        x.assign(s.size(), 0.0);
        if (!x.empty()) x[0] = 1.0;
    }
    res.argmax = std::move(x);
    return res;
}

namespace {

struct AscentOutcome {
    double value = 0.0;
    Vec x;
    double last_rel = 0.0;
};

struct Problem {
    const NonNegMatrix& A;
    Exponent p;
    Exponent q;
    bool monotone;  // project onto the decreasing cone vs the orthant only
    Vec colsum;     // cached A^T 1
};

// Feasible-point map: optional monotone pooling, clamp at zero, renormalize.
bool project(const Problem& pr, Vec& x) {
    if (pr.monotone) {
        Vec pooled = pava_decreasing(x);
        x = std::move(pooled);
    }
    for (double& v : x) v = std::max(v, 0.0);
    return normalize_lp(x, pr.p);
}

double objective(const Problem& pr, const Vec& x) {
    return lq_norm(matvec(pr.A, x), pr.q);
}

Vec gradient(const Problem& pr, const Vec& x) {
    const Vec y = matvec(pr.A, x);
    if (pr.q.is_one()) return pr.colsum;
    if (pr.q.is_infinity()) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < y.size(); ++j)
            if (y[j] > y[best]) best = j;  // smallest index wins ties
        return pr.A.row(best);
    }
    const double yn = lq_norm(y, pr.q);
    if (yn == 0.0) return pr.colsum;
    const double e = pr.q.value() - 1.0;
    Vec w(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
        const double r = y[j] / yn;
        w[j] = r == 0.0 ? 0.0 : std::pow(r, e);
    }
    Vec g(pr.A.cols(), 0.0);
    for (std::size_t j = 0; j < pr.A.rows(); ++j) {
        auto r = pr.A.row_span(j);
        for (std::size_t k = 0; k < pr.A.cols(); ++k) g[k] += r[k] * w[j];
    }
    return g;
}

AscentOutcome ascend(const Problem& pr, Vec x0, int max_iters, double rel_tol) {
    AscentOutcome out;
    if (!project(pr, x0)) {
        x0.assign(pr.A.cols(), 0.0);
        x0[0] = 1.0;
    }
    Vec x = std::move(x0);
    double F = objective(pr, x);
    double alpha = 0.25;
    int small_streak = 0;
    for (int it = 0; it < max_iters; ++it) {
        Vec g = gradient(pr, x);
        const double gn = l2(g);
        if (gn == 0.0) break;
        for (double& v : g) v /= gn;

        bool improved = false;
        double rel = 0.0;
        while (alpha > 1e-18) {
            Vec xt(x.size());
            for (std::size_t k = 0; k < x.size(); ++k) xt[k] = x[k] + alpha * g[k];
            if (!project(pr, xt)) {
                alpha *= 0.5;
                continue;
            }
            const double Ft = objective(pr, xt);
            if (Ft > F) {
                rel = (Ft - F) / std::max(F, 1e-300);
                x = std::move(xt);
                F = Ft;
                alpha = std::min(alpha * 1.6, 64.0);
                improved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!improved) {
            out.last_rel = 0.0;
            break;
        }
        out.last_rel = rel;
        if (rel < rel_tol) {
            if (++small_streak >= 2) break;
        } else {
            small_streak = 0;
        }
    }
    out.value = F;
    out.x = std::move(x);
    return out;
}

Vec random_decreasing_seed(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Vec t(n);
    for (double& v : t) v = -std::log1p(-u(rng));  // Exp(1) increments
    Vec x(n, 0.0);
    double acc = 0.0;
    for (std::size_t k = n; k-- > 0;) {
        acc += t[k];
        x[k] = acc;
    }
    return x;
}

Vec random_orthant_seed(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Vec x(n);
    for (double& v : x) v = u(rng);
    return x;
}

Vec power_seed(std::span<const double> c, Exponent p) {
    const double e = p.conjugate().value() - 1.0;
    Vec x(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) x[k] = c[k] == 0.0 ? 0.0 : std::pow(c[k], e);
    return x;
}

OracleResult run_multistart(const Problem& pr, std::vector<Vec> seeds, int random_restarts,
                            std::uint64_t seed, int max_iters, double rel_tol,
                            ExecMode exec) {
    const std::size_t n = pr.A.cols();
    const std::size_t fixed = seeds.size();
    const std::size_t total = fixed + static_cast<std::size_t>(std::max(random_restarts, 0));
    std::vector<AscentOutcome> outs(total);

    auto run_one = [&](std::size_t i) {
        Vec x0;
        if (i < fixed) {
            x0 = seeds[i];
        } else {
            std::mt19937_64 rng(splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (i + 1))));
            // the orthant problem alternates in decreasing draws: monotone
            // optima are common and plain ascent can stall short of them
            const bool decreasing = pr.monotone || (i - fixed) % 2 == 1;
            x0 = decreasing ? random_decreasing_seed(rng, n) : random_orthant_seed(rng, n);
        }
        outs[i] = ascend(pr, std::move(x0), max_iters, rel_tol);
    };

#ifdef _OPENMP
    if (exec == ExecMode::Parallel) {
        const int T = effective_threads();
#pragma omp parallel for schedule(dynamic) num_threads(T)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(total); ++i)
            run_one(static_cast<std::size_t>(i));
    } else
#endif
    {
        for (std::size_t i = 0; i < total; ++i) run_one(i);
    }

    std::size_t win = 0;
    for (std::size_t i = 1; i < total; ++i)
        if (outs[i].value > outs[win].value) win = i;

    OracleResult res;
    res.value = outs[win].value;
    res.argmax = std::move(outs[win].x);
    res.method = OracleMethod::ProjGrad;
    res.restarts = total;
    res.achieved_tol = outs[win].last_rel;
    return res;
}

std::vector<Vec> downward_seeds(const NonNegMatrix& A, Exponent p, Exponent q) {
    std::vector<Vec> seeds;
    const std::size_t n = A.cols();
    for (std::size_t m = 1; m <= n; ++m) {
        Vec x(n, 0.0);
        std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m), 1.0);
        seeds.push_back(std::move(x));
    }
    if (p.is_finite()) {
        if (q.is_one()) {
            seeds.push_back(power_seed(pava_decreasing(column_sums(A)), p));
        } else if (q.is_infinity()) {
            // the cone optimum is one of the per-row level-function optima
            for (std::size_t j = 0; j < A.rows(); ++j)
                seeds.push_back(power_seed(pava_decreasing(A.row_span(j)), p));
        } else {
            seeds.push_back(power_seed(pava_decreasing(column_sums(A)), p));
        }
    }
    return seeds;
}

std::vector<Vec> full_seeds(const NonNegMatrix& A, Exponent p, Exponent q) {
    std::vector<Vec> seeds;
    const std::size_t n = A.cols();
    for (std::size_t k = 0; k < n; ++k) {
        Vec x(n, 0.0);
        x[k] = 1.0;
        seeds.push_back(std::move(x));
    }
    for (std::size_t m = 2; m <= n; ++m) {
        Vec x(n, 0.0);
        std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m), 1.0);
        seeds.push_back(std::move(x));
    }
    if (p.is_finite()) {
        seeds.push_back(power_seed(column_sums(A), p));
        if (q.is_infinity()) {
            const Exponent ps = p.conjugate();
            std::size_t best = 0;
            double bv = -1.0;
            for (std::size_t j = 0; j < A.rows(); ++j) {
                const double v = lq_norm(A.row_span(j), ps);
                if (v > bv) {
                    bv = v;
                    best = j;
                }
            }
            seeds.push_back(power_seed(A.row_span(best), p));
        }
    }
    return seeds;
}

}  // namespace

OracleResult projgrad_downward(const NonNegMatrix& A, Exponent p, Exponent q,
                               const ProjGradOptions& opts, const Tolerance& tol) {
    (void)tol;
    Problem pr{A, p, q, true, column_sums(A)};
    return run_multistart(pr, downward_seeds(A, p, q), opts.random_restarts, opts.seed,
                          opts.max_iters, opts.rel_improve_tol, opts.exec);
}

OracleResult projgrad_full(const NonNegMatrix& A, Exponent p, Exponent q,
                           const ProjGradOptions& opts, const Tolerance& tol) {
    (void)tol;
    Problem pr{A, p, q, false, column_sums(A)};
    return run_multistart(pr, full_seeds(A, p, q), opts.random_restarts, opts.seed,
                          opts.max_iters, opts.rel_improve_tol, opts.exec);
}

OracleResult downward_norm(const NonNegMatrix& A, Exponent p, Exponent q,
                           const Tolerance& tol, const ProjGradOptions& opts) {
    if (p.is_one()) return vertex_simplex_norm(A, q, opts.exec);
    if (p.is_infinity()) return vertex_step_norm(A, q, opts.exec);
    if (q.is_one()) return linear_downward_max(column_sums(A), p);
    if (q.is_infinity()) {
        // sup over the cone and max over rows commute, so the q = inf case is
        // a per-row linear problem.
        const std::size_t rows = A.rows();
        Vec vals(rows, 0.0);
        const int T = opts.exec == ExecMode::Parallel ? effective_threads() : 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(T) if (T > 1)
#endif
        for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(rows); ++j) {
            const Vec level = pava_decreasing(A.row_span(static_cast<std::size_t>(j)));
            vals[static_cast<std::size_t>(j)] = lq_norm(level, p.conjugate());
        }
        std::size_t best = 0;
        for (std::size_t j = 1; j < rows; ++j)
            if (vals[j] > vals[best]) best = j;
        OracleResult res = linear_downward_max(A.row_span(best), p);
        res.value = vals[best];
        return res;
    }
    return projgrad_downward(A, p, q, opts, tol);
}

OracleResult full_norm(const NonNegMatrix& A, Exponent p, Exponent q,
                       const Tolerance& tol, const ProjGradOptions& opts) {
    OracleResult res;
    if (p.is_one()) {
        // max over the basis vectors e_k (extreme points of the l1 ball meet
        // the orthant there; the objective is convex).
        double bv = -1.0;
        std::size_t bk = 0;
        Vec buf(A.rows());
        for (std::size_t k = 0; k < A.cols(); ++k) {
            for (std::size_t j = 0; j < A.rows(); ++j) buf[j] = A(j, k);
            const double v = lq_norm(buf, q);
            if (v > bv) {
                bv = v;
                bk = k;
            }
        }
        res.value = bv;
        res.argmax.assign(A.cols(), 0.0);
        res.argmax[bk] = 1.0;
        res.method = OracleMethod::VertexSimplex;
        return res;
    }
    if (p.is_infinity()) {
        // coordinatewise monotone objective: the all-ones corner is optimal.
        res.argmax.assign(A.cols(), 1.0);
        res.value = lq_norm(matvec(A, res.argmax), q);
        res.method = OracleMethod::VertexStep;
        return res;
    }
    if (q.is_one()) {
        const Vec s = column_sums(A);
        res.value = lq_norm(s, p.conjugate());
        res.argmax = power_seed(s, p);
        if (!normalize_lp(res.argmax, p)) {
            res.argmax.assign(A.cols(), 0.0);
            res.argmax[0] = 1.0;
        }
        res.method = OracleMethod::ConcaveMajorant;
        return res;
    }
    if (q.is_infinity()) {
        const Exponent ps = p.conjugate();
        double bv = -1.0;
        std::size_t bj = 0;
        for (std::size_t j = 0; j < A.rows(); ++j) {
            const double v = lq_norm(A.row_span(j), ps);
            if (v > bv) {
                bv = v;
                bj = j;
            }
        }
        res.value = bv;
        res.argmax = power_seed(A.row_span(bj), p);
        if (!normalize_lp(res.argmax, p)) {
            res.argmax.assign(A.cols(), 0.0);
            res.argmax[0] = 1.0;
        }
        res.method = OracleMethod::ConcaveMajorant;
        return res;
    }
    // cone iterates are orthant-feasible, so the restricted ascent is a valid
    // lower bound and occasionally the sharper one; taking the better of the
    // two also keeps downward <= full structurally
    OracleResult orthant = projgrad_full(A, p, q, opts, tol);
    OracleResult cone = projgrad_downward(A, p, q, opts, tol);
    return cone.value > orthant.value ? cone : orthant;
}

}  // namespace monorm
