#pragma once

#include "monorm/core.hpp"

namespace monorm {

enum class GalleryName { Cesaro, Pi26Counterexample, HarmonicCounterexample, AtomAt22 };
std::string_view to_string(GalleryName n);
std::optional<GalleryName> parse_gallery_name(std::string_view token);

struct GalleryEntry {
    GalleryName name;
    std::size_t size;
    NonNegMatrix matrix;
};

struct ClaimResult {
    std::string id;
    bool pass = false;
    double observed = 0.0;
    double reference = 0.0;
    std::string detail;
};

/// Cesaro averaging matrix: a(j,k) = 1/j for k <= j. Its truncated lp -> lp
/// norms stay strictly below p/(p-1).
GalleryEntry cesaro(std::size_t n);

/// Banded matrix whose column k carries 1, 1/4, ..., 1/k^2 below the
/// diagonal (column 1 = e1). Its l1 -> l1 norm tends to pi^2/6 while column 1
/// stays at 1, so the norm is attained on the decreasing cone even though
/// condition 2.1 fails.
GalleryEntry pi26_counterexample(std::size_t n);

/// Row 1 is the harmonic sequence with its first two entries swapped
/// (1/2, 1, 1/3, ...); row j >= 2 is (1, 1/2, ..., 1/(j-1), 0, ...). No row
/// set satisfies 3.6 in the limit, yet the lp -> linf norm is attained on the
/// decreasing cone.
GalleryEntry harmonic_counterexample(std::size_t n);

/// Single unit entry at position (2,2): full lp -> linf norm 1, downward norm
/// 2^(-1/p), the canonical strict-gap example.
GalleryEntry atom_at_22(std::size_t n);

GalleryEntry make_gallery(GalleryName name, std::size_t n);

/// Evaluates every claim applicable to the entry at the given exponents and
/// reports pass/fail with the computed values.
std::vector<ClaimResult> verify_claims(const GalleryEntry& entry, Exponent p, Exponent q,
                                       const Tolerance& tol = {});

}  // namespace monorm
