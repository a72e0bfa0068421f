#pragma once

#include "monorm/core.hpp"

namespace monorm {

enum class Provenance { E1, AllOnes, ColumnSumPower, RowPower, TailFolded };
std::string_view to_string(Provenance p);

/// A candidate norm-attaining vector: non-negative, non-increasing, unit lp
/// norm (unless the degenerate fallback fired on all-zero data), together
/// with the value ||Ax||_q it achieves.
struct Extremizer {
    Vec x;
    Exponent p = Exponent::one();
    double achieved = 0.0;
    Provenance provenance = Provenance::E1;
    std::optional<std::size_t> row;  // source row for RowPower
    bool degenerate = false;         // e1 fallback on all-zero data
    bool monotone = true;            // false when the construction is not non-increasing
};

/// p = 1: x = e1; achieved is the lq norm of column 1. Optimal exactly when
/// condition 2.1 holds (not enforced).
Extremizer extremal_l1(const NonNegMatrix& A, Exponent q);

/// p = inf: x = (1, ..., 1); achieved equals the lq norm of the row sums.
Extremizer extremal_linf(const NonNegMatrix& A, Exponent q);

/// q = 1, finite p: x_k proportional to S_k^(p*-1) with S the column sums.
/// Decreasing, hence optimal, exactly when condition 3.1 holds; otherwise the
/// vector is returned with the monotone flag cleared.
Extremizer extremal_lp_l1(const NonNegMatrix& A, Exponent p);

/// q = inf, finite p: x_k proportional to a(row, k)^(p*-1). Achieved may
/// exceed the row inner product since the output norm is a max over rows.
Extremizer extremal_lp_linf(const NonNegMatrix& A, Exponent p, std::size_t row);

/// Folds all mass beyond the first k0 coordinates into the first one:
/// preserves the l1 norm, and never decreases ||Ax||_q when A has column
/// support k0. Requires x >= 0 and k0 >= 1.
Vec fold_tail(std::span<const double> x, std::size_t k0);

}  // namespace monorm
