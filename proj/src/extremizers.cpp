#include "monorm/extremizers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monorm {

namespace {

Vec e1(std::size_t n) {
    Vec x(n, 0.0);
    x[0] = 1.0;
    return x;
}

bool is_nonincreasing(std::span<const double> x) {
    for (std::size_t k = 0; k + 1 < x.size(); ++k)
        if (x[k + 1] > x[k]) return false;
    return true;
}

// x_k = c_k^(p*-1), normalized to the unit lp sphere. Returns empty when c is
// all zero (lambda in the defining expression would divide by zero).
Vec power_profile(std::span<const double> c, Exponent p) {
    const double e = p.conjugate().value() - 1.0;
    Vec x(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) x[k] = c[k] == 0.0 ? 0.0 : std::pow(c[k], e);
    const double n = lq_norm(x, p);
    if (n == 0.0) return {};
    for (double& v : x) v /= n;
    return x;
}

}  // namespace

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::E1: return "e1";
        case Provenance::AllOnes: return "all-ones";
        case Provenance::ColumnSumPower: return "column-sum-power";
        case Provenance::RowPower: return "row-power";
        case Provenance::TailFolded: return "tail-folded";
    }
    return {};
}

Extremizer extremal_l1(const NonNegMatrix& A, Exponent q) {
    Extremizer ex;
    ex.x = e1(A.cols());
    ex.p = Exponent::one();
    ex.achieved = lq_norm(matvec(A, ex.x), q);
    ex.provenance = Provenance::E1;
    return ex;
}

Extremizer extremal_linf(const NonNegMatrix& A, Exponent q) {
    Extremizer ex;
    ex.x = Vec(A.cols(), 1.0);
    ex.p = Exponent::infinity();
    ex.achieved = lq_norm(matvec(A, ex.x), q);
    ex.provenance = Provenance::AllOnes;
    return ex;
}

Extremizer extremal_lp_l1(const NonNegMatrix& A, Exponent p) {
    if (!p.is_finite()) throw std::invalid_argument("extremal_lp_l1 requires 1 < p < inf");
    Extremizer ex;
    ex.p = p;
    ex.provenance = Provenance::ColumnSumPower;
    const Vec s = column_sums(A);
    Vec x = power_profile(s, p);
    if (x.empty()) {
        ex.x = e1(A.cols());
        ex.degenerate = true;
        ex.achieved = 0.0;
        return ex;
    }
    ex.monotone = is_nonincreasing(x);
    ex.x = std::move(x);
    ex.achieved = lq_norm(matvec(A, ex.x), Exponent::one());
    return ex;
}

Extremizer extremal_lp_linf(const NonNegMatrix& A, Exponent p, std::size_t row) {
    if (!p.is_finite()) throw std::invalid_argument("extremal_lp_linf requires 1 < p < inf");
    if (row >= A.rows()) throw std::invalid_argument("extremal_lp_linf: row out of range");
    Extremizer ex;
    ex.p = p;
    ex.provenance = Provenance::RowPower;
    ex.row = row;
    Vec x = power_profile(A.row_span(row), p);
    if (x.empty()) {
        ex.x = e1(A.cols());
        ex.degenerate = true;
        ex.achieved = 0.0;
        return ex;
    }
    ex.monotone = is_nonincreasing(x);
    ex.x = std::move(x);
    ex.achieved = lq_norm(matvec(A, ex.x), Exponent::infinity());
    return ex;
}

Vec fold_tail(std::span<const double> x, std::size_t k0) {
    if (k0 == 0) throw std::invalid_argument("fold_tail: k0 must be positive");
    for (double v : x)
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("fold_tail: entries must be finite and >= 0");
    Vec out(x.begin(), x.end());
    if (k0 >= x.size()) return out;
    double tail = 0.0;
    for (std::size_t k = k0; k < x.size(); ++k) {
        tail += x[k];
        out[k] = 0.0;
    }
    out[0] = x[0] + tail;
    return out;
}

}  // namespace monorm
