#pragma once

#include <cstdint>

#include "monorm/core.hpp"

namespace monorm {

enum class OracleMethod { VertexSimplex, VertexStep, ConcaveMajorant, ProjGrad };
std::string_view to_string(OracleMethod m);
Exactness exactness_of(OracleMethod m);

/// Serial keeps the reference single-threaded path; Parallel runs the same
/// work split over OpenMP threads. Both produce bit-identical results: each
/// work item is computed independently and reduced by (value, index).
enum class ExecMode { Serial, Parallel };

/// Thread count for parallel kernels: MONOTONE_NORM_THREADS caps it when set,
/// otherwise the OpenMP runtime default applies.
int effective_threads();

struct OracleResult {
    double value = 0.0;
    Vec argmax;
    OracleMethod method = OracleMethod::ProjGrad;
    std::size_t restarts = 0;
    double achieved_tol = 0.0;
};

struct ProjGradOptions {
    int random_restarts = 32;
    std::uint64_t seed = 0;
    int max_iters = 10000;
    double rel_improve_tol = 1e-12;
    ExecMode exec = ExecMode::Parallel;
};

/// l2 projection onto the non-increasing cone (pool adjacent violators).
Vec pava_decreasing(std::span<const double> y);

/// Exact p=1 downward norm: the decreasing l1 simplex has extreme points
/// c_n = (1/n, ..., 1/n, 0, ...) and x -> ||Ax||_q is convex, so enumerating
/// the c_n is exact.
OracleResult vertex_simplex_norm(const NonNegMatrix& A, Exponent q,
                                 ExecMode exec = ExecMode::Parallel);

/// Exact p=inf downward norm over the step vectors 1_n = (1, ..., 1, 0, ...).
OracleResult vertex_step_norm(const NonNegMatrix& A, Exponent q,
                              ExecMode exec = ExecMode::Parallel);

/// Exact max of sum s_k x_k over {x >= 0 decreasing, ||x||_p = 1} for finite
/// p: replace s by the slope sequence of the least concave majorant of its
/// cumulative-sum polyline (= pava_decreasing(s)), then apply Holder. The
/// argmax is x_k proportional to (s_k^level)^(p*-1), which is decreasing.
OracleResult linear_downward_max(std::span<const double> s, Exponent p);

/// Multi-restart projected gradient ascent of ||Ax||_q over the decreasing
/// cone intersected with the unit lp sphere. Deterministic for a fixed seed
/// regardless of thread count. The value is a lower bound (method ProjGrad).
OracleResult projgrad_downward(const NonNegMatrix& A, Exponent p, Exponent q,
                               const ProjGradOptions& opts = {},
                               const Tolerance& tol = {});

/// Same ascent restricted only to the non-negative orthant (full norm; valid
/// since the maximum of ||Ax||_q over the lp sphere of a non-negative A is
/// attained at x >= 0).
OracleResult projgrad_full(const NonNegMatrix& A, Exponent p, Exponent q,
                           const ProjGradOptions& opts = {},
                           const Tolerance& tol = {});

/// Downward norm with exact case routing: p=1 vertex simplex, p=inf vertex
/// step, q=1 majorant on column sums, q=inf max-over-rows majorant, interior
/// projected gradient.
OracleResult downward_norm(const NonNegMatrix& A, Exponent p, Exponent q,
                           const Tolerance& tol = {},
                           const ProjGradOptions& opts = {});

/// Full norm via the analogous exact reductions (basis vectors, all-ones,
/// Holder) with projected gradient for interior pairs.
OracleResult full_norm(const NonNegMatrix& A, Exponent p, Exponent q,
                       const Tolerance& tol = {},
                       const ProjGradOptions& opts = {});

}  // namespace monorm
