#include "monorm/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "monorm/closed_forms.hpp"
#include "monorm/conditions.hpp"
#include "monorm/oracle.hpp"

namespace monorm {

namespace {

constexpr double kPi26 = std::numbers::pi * std::numbers::pi / 6.0;

void require_size(std::size_t n, std::size_t min) {
    if (n < min) throw std::invalid_argument("gallery: size too small for this matrix");
}

double pi26_entry(std::size_t j, std::size_t k, std::size_t n) {
    // 1-based indices: column k carries 1, 1/4, ..., 1/k^2 at rows k..2k-1.
    (void)n;
    if (j < k || j > 2 * k - 1) return 0.0;
    const double m = static_cast<double>(j - k + 1);
    return 1.0 / (m * m);
}

double harmonic_entry(std::size_t j, std::size_t k) {
    // 1-based indices.
    if (j == 1) {
        if (k == 1) return 0.5;
        if (k == 2) return 1.0;
        return 1.0 / static_cast<double>(k);
    }
    if (k <= j - 1) return 1.0 / static_cast<double>(k);
    return 0.0;
}

ClaimResult claim(std::string id, bool pass, double observed, double reference,
                  std::string detail = {}) {
    return {std::move(id), pass, observed, reference, std::move(detail)};
}

}  // namespace

std::string_view to_string(GalleryName n) {
    switch (n) {
        case GalleryName::Cesaro: return "cesaro";
        case GalleryName::Pi26Counterexample: return "pi26";
        case GalleryName::HarmonicCounterexample: return "harmonic";
        case GalleryName::AtomAt22: return "atom22";
    }
    return {};
}

std::optional<GalleryName> parse_gallery_name(std::string_view token) {
    if (token == "cesaro") return GalleryName::Cesaro;
    if (token == "pi26") return GalleryName::Pi26Counterexample;
    if (token == "harmonic") return GalleryName::HarmonicCounterexample;
    if (token == "atom22") return GalleryName::AtomAt22;
    return std::nullopt;
}

GalleryEntry cesaro(std::size_t n) {
    require_size(n, 1);
    Vec e(n * n, 0.0);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= j; ++k)
            e[(j - 1) * n + (k - 1)] = 1.0 / static_cast<double>(j);
    return {GalleryName::Cesaro, n, NonNegMatrix(n, n, std::move(e))};
}

GalleryEntry pi26_counterexample(std::size_t n) {
    require_size(n, 2);
    Vec e(n * n, 0.0);
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t j = k; j <= std::min(2 * k - 1, n); ++j)
            e[(j - 1) * n + (k - 1)] = pi26_entry(j, k, n);
    return {GalleryName::Pi26Counterexample, n, NonNegMatrix(n, n, std::move(e))};
}

GalleryEntry harmonic_counterexample(std::size_t n) {
    require_size(n, 2);
    Vec e(n * n, 0.0);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= n; ++k)
            e[(j - 1) * n + (k - 1)] = harmonic_entry(j, k);
    return {GalleryName::HarmonicCounterexample, n, NonNegMatrix(n, n, std::move(e))};
}

GalleryEntry atom_at_22(std::size_t n) {
    require_size(n, 2);
    Vec e(n * n, 0.0);
    e[1 * n + 1] = 1.0;
    return {GalleryName::AtomAt22, n, NonNegMatrix(n, n, std::move(e))};
}

GalleryEntry make_gallery(GalleryName name, std::size_t n) {
    switch (name) {
        case GalleryName::Cesaro: return cesaro(n);
        case GalleryName::Pi26Counterexample: return pi26_counterexample(n);
        case GalleryName::HarmonicCounterexample: return harmonic_counterexample(n);
        case GalleryName::AtomAt22: return atom_at_22(n);
    }
    throw std::invalid_argument("gallery: unknown name");
}

namespace {

std::vector<ClaimResult> cesaro_claims(const GalleryEntry& g, Exponent p, Exponent q,
                                       const Tolerance& tol) {
    std::vector<ClaimResult> out;
    const NonNegMatrix& A = g.matrix;

    double dev = 0.0;
    for (double s : row_sums(A)) dev = std::max(dev, std::abs(s - 1.0));
    out.push_back(claim("row-sums-one", dev <= 1e-12, dev, 0.0, "max |row sum - 1|"));

    out.push_back(claim("column-sums-decreasing", check_3_1(A, tol).holds, 1.0, 1.0,
                        "condition 3.1"));

    const OracleResult full = full_norm(A, p, q, tol);
    const OracleResult down = downward_norm(A, p, q, tol);
    out.push_back(claim("downward-equals-full", std::abs(full.value - down.value) <= 1e-6,
                        down.value, full.value, "averaging maximizer is decreasing"));

    if (p.is_finite() && q == p) {
        const double hardy = p.value() / (p.value() - 1.0);
        out.push_back(claim("hardy-strict-bound", full.value < hardy, full.value, hardy,
                            "truncated norm stays below p/(p-1)"));
    }
    return out;
}

std::vector<ClaimResult> pi26_claims(const GalleryEntry& g, Exponent p, Exponent q,
                                     const Tolerance& tol) {
    std::vector<ClaimResult> out;
    const NonNegMatrix& A = g.matrix;
    const std::size_t n = g.size;

    double dev = 0.0;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= n; ++k)
            dev = std::max(dev, std::abs(A(j - 1, k - 1) - pi26_entry(j, k, n)));
    out.push_back(claim("matrix-matches-band-formula", dev == 0.0, dev, 0.0));

    if (!(p.is_one() && q.is_one())) return out;

    // Independent partial sums: sigma_m = sum_{i<=m} 1/i^2; column k of the
    // truncation sums to sigma_{min(k, n+1-k)}.
    Vec sigma(n + 1, 0.0);
    for (std::size_t m = 1; m <= n; ++m)
        sigma[m] = sigma[m - 1] + 1.0 / (static_cast<double>(m) * static_cast<double>(m));
    Vec S(n);
    for (std::size_t k = 1; k <= n; ++k) S[k - 1] = sigma[std::min(k, n + 1 - k)];

    const double full = norm_l1_lq(A, Exponent::one());
    const double full_ref = *std::max_element(S.begin(), S.end());
    out.push_back(claim("norm-matches-partial-sums",
                        std::abs(full - full_ref) <= 1e-12 * std::max(1.0, full_ref), full,
                        full_ref, "max column sum vs independent partial sums"));

    if (n >= 3) {  // at n = 2 the truncation degenerates to the identity
        const auto rep = check_2_1(A, Exponent::one(), tol);
        const auto& w = std::get<Witness21>(rep.witness);
        const double gap_floor = n >= 50 ? 0.6 : 0.0;
        out.push_back(claim("check-2-1-fails", !rep.holds && w.gap > gap_floor, w.gap,
                            gap_floor,
                            "column 1 stays at 1 while inner columns approach pi^2/6"));
    }

    const OracleResult down = vertex_simplex_norm(A, Exponent::one());
    double enum_best = 0.0;
    double acc = 0.0;
    for (std::size_t m = 1; m <= n; ++m) {
        acc += S[m - 1];
        enum_best = std::max(enum_best, acc / static_cast<double>(m));
    }
    out.push_back(claim("downward-matches-averaging-enumeration",
                        std::abs(down.value - enum_best) <= 1e-12 * std::max(1.0, enum_best),
                        down.value, enum_best));
    out.push_back(claim("sandwich", down.value <= full + 1e-12, down.value, full));
    out.push_back(claim("limit-gap-bound", std::abs(full - kPi26) <= 2.1 / static_cast<double>(n),
                        std::abs(full - kPi26), 2.1 / static_cast<double>(n),
                        "distance of the truncated norm to pi^2/6"));
    return out;
}

std::vector<ClaimResult> harmonic_claims(const GalleryEntry& g, Exponent p, Exponent q,
                                         const Tolerance& tol) {
    std::vector<ClaimResult> out;
    const NonNegMatrix& A = g.matrix;
    const std::size_t n = g.size;

    double dev = 0.0;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= n; ++k)
            dev = std::max(dev, std::abs(A(j - 1, k - 1) - harmonic_entry(j, k)));
    out.push_back(claim("matrix-matches-formula", dev == 0.0, dev, 0.0));

    if (!(p.is_finite() && q.is_infinity())) return out;

    const double ps = p.conjugate().value();
    auto zeta_partial = [&](std::size_t m) {
        double s = 0.0;
        for (std::size_t k = 1; k <= m; ++k) s += std::pow(static_cast<double>(k), -ps);
        return std::pow(s, 1.0 / ps);
    };

    const double full = norm_lp_linf(A, p);
    const double full_ref = zeta_partial(n);
    out.push_back(claim("full-equals-permuted-zeta-row",
                        std::abs(full - full_ref) <= 1e-12 * std::max(1.0, full_ref), full,
                        full_ref, "row 1 rearranges the truncated harmonic powers"));

    const OracleResult down = downward_norm(A, p, Exponent::infinity(), tol);
    const double lower = zeta_partial(n - 1);
    out.push_back(claim("downward-geq-partial-zeta", down.value >= lower - 1e-9, down.value,
                        lower, "decreasing-row construction bound"));
    const double gap = full - down.value;
    const double gap_bound = std::pow(static_cast<double>(n), -ps) + 1e-12;
    out.push_back(claim("gap-bounded", gap >= -1e-12 && gap <= gap_bound, gap, gap_bound,
                        "full minus downward shrinks with the truncation"));

    // The limiting matrix admits no dominating row set; under truncation the
    // near-ties across the row tower need a coarse tie tolerance, while the
    // non-attainment in 3.7 needs a fine one. The tie structure only develops
    // once the top-row margin drops inside the coarse tolerance, so the 3.6
    // claim applies to deep enough truncations.
    const Tolerance coarse(5e-4, tol.oracle_abs);
    const double top_margin = (full_ref - zeta_partial(n - 1)) / full_ref;
    if (top_margin < 2.5e-4) {
        bool all36_fail = true;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t lambda[1] = {j};
            if (check_3_6(A, p, lambda, coarse).holds) all36_fail = false;
        }
        out.push_back(claim("check-3-6-fails-singletons", all36_fail, all36_fail ? 1.0 : 0.0,
                            1.0, "coarse tie tolerance 5e-4"));
    }
    bool all37_fail = true;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t lambda[1] = {j};
        if (check_3_7(A, p, lambda, tol).holds) all37_fail = false;
    }
    out.push_back(claim("check-3-7-fails-singletons", all37_fail, all37_fail ? 1.0 : 0.0, 1.0));
    return out;
}

std::vector<ClaimResult> atom_claims(const GalleryEntry& g, Exponent p, Exponent q,
                                     const Tolerance& tol) {
    std::vector<ClaimResult> out;
    const NonNegMatrix& A = g.matrix;
    const std::size_t n = g.size;

    double dev = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const double want = (j == 1 && k == 1) ? 1.0 : 0.0;
            dev = std::max(dev, std::abs(A(j, k) - want));
        }
    out.push_back(claim("matrix-single-atom", dev == 0.0, dev, 0.0));

    if (!q.is_infinity()) return out;

    const OracleResult full = full_norm(A, p, Exponent::infinity(), tol);
    out.push_back(claim("full-norm-one", std::abs(full.value - 1.0) <= 1e-12, full.value, 1.0));

    if (!p.is_infinity()) {
        const double want = std::pow(2.0, -1.0 / p.value());
        const OracleResult down = downward_norm(A, p, Exponent::infinity(), tol);
        out.push_back(claim("downward-two-pow", std::abs(down.value - want) <= 1e-12,
                            down.value, want, "downward norm is 2^(-1/p)"));
        out.push_back(claim("strict-gap", full.value - down.value >= 1.0 - want - 1e-9,
                            full.value - down.value, 1.0 - want));
    }
    if (p.is_finite()) {
        const std::size_t lambda[1] = {1};  // the row holding the atom
        out.push_back(claim("lambda2-3-6-holds", check_3_6(A, p, lambda, tol).holds, 1.0, 1.0));
        out.push_back(
            claim("lambda2-3-7-fails", !check_3_7(A, p, lambda, tol).holds, 0.0, 0.0,
                  "the atom row (0, 1, 0, ...) is not non-increasing"));
    }
    return out;
}

}  // namespace

std::vector<ClaimResult> verify_claims(const GalleryEntry& entry, Exponent p, Exponent q,
                                       const Tolerance& tol) {
    switch (entry.name) {
        case GalleryName::Cesaro: return cesaro_claims(entry, p, q, tol);
        case GalleryName::Pi26Counterexample: return pi26_claims(entry, p, q, tol);
        case GalleryName::HarmonicCounterexample: return harmonic_claims(entry, p, q, tol);
        case GalleryName::AtomAt22: return atom_claims(entry, p, q, tol);
    }
    return {};
}

}  // namespace monorm
