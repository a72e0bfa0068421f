#include "monorm/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monorm {

namespace {

// Equality-with-sup at relative tolerance rel, absolute fallback 1e-12 when
// the sup is zero.
bool ties_sup(double value, double sup, double rel) {
    if (sup == 0.0) return std::abs(value - sup) <= 1e-12;
    return std::abs(sup - value) <= rel * sup;
}

bool nonincreasing_pair(double a, double b, double rel, double scale) {
    // b may exceed a by the relative slack (or a tiny absolute floor when the
    // sequence lives near zero).
    return b <= a + rel * std::max(a, b) + 1e-12 * scale;
}

Vec row_pstar_norms(const NonNegMatrix& A, Exponent p) {
    const Exponent ps = p.conjugate();
    Vec out(A.rows());
    for (std::size_t j = 0; j < A.rows(); ++j) out[j] = lq_norm(A.row_span(j), ps);
    return out;
}

void require_lambda(const NonNegMatrix& A, std::span<const std::size_t> lambda) {
    if (lambda.empty()) throw std::invalid_argument("Lambda must be non-empty");
    for (std::size_t j : lambda)
        if (j >= A.rows()) throw std::invalid_argument("Lambda row index out of range");
}

}  // namespace

std::string_view to_string(ConditionId id) {
    switch (id) {
        case ConditionId::C2_1: return "2.1";
        case ConditionId::C3_1: return "3.1";
        case ConditionId::C3_6: return "3.6";
        case ConditionId::C3_7: return "3.7";
    }
    return {};
}

ConditionReport check_2_1(const NonNegMatrix& A, Exponent q, const Tolerance& tol) {
    const Vec norms = column_q_norms(A, q);
    std::size_t best = 0;
    for (std::size_t k = 1; k < norms.size(); ++k)
        if (norms[k] > norms[best]) best = k;
    Witness21 w;
    w.best_col = best;
    w.col1_norm = norms[0];
    w.best_norm = norms[best];
    w.gap = norms[best] - norms[0];
    ConditionReport rep;
    rep.id = ConditionId::C2_1;
    rep.holds = ties_sup(norms[0], norms[best], tol.condition_rel);
    rep.tolerance_used = tol.condition_rel;
    rep.witness = w;
    rep.truncation_rows = A.rows();
    rep.truncation_cols = A.cols();
    return rep;
}

ConditionReport check_3_1(const NonNegMatrix& A, const Tolerance& tol) {
    const Vec s = column_sums(A);
    const double scale = *std::max_element(s.begin(), s.end());
    Witness31 w;
    bool holds = true;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        if (!nonincreasing_pair(s[k], s[k + 1], tol.condition_rel, scale)) {
            holds = false;
            w.violation_at = k;
            w.before = s[k];
            w.after = s[k + 1];
            break;
        }
    }
    ConditionReport rep;
    rep.id = ConditionId::C3_1;
    rep.holds = holds;
    rep.tolerance_used = tol.condition_rel;
    rep.witness = w;
    rep.truncation_rows = A.rows();
    rep.truncation_cols = A.cols();
    return rep;
}

ConditionReport check_3_6(const NonNegMatrix& A, Exponent p,
                          std::span<const std::size_t> lambda, const Tolerance& tol) {
    if (!p.is_finite()) throw std::invalid_argument("check_3_6 requires 1 < p < inf");
    require_lambda(A, lambda);
    const Vec norms = row_pstar_norms(A, p);
    std::vector<bool> inside(A.rows(), false);
    for (std::size_t j : lambda) inside[j] = true;

    Witness36 w;
    double in_sup = -1.0, out_sup = -1.0;
    for (std::size_t j = 0; j < A.rows(); ++j) {
        if (inside[j]) {
            if (norms[j] > in_sup) { in_sup = norms[j]; w.inside_row = j; }
        } else if (norms[j] > out_sup) {
            out_sup = norms[j];
            w.outside_row = j;
        }
    }
    w.inside_sup = in_sup;
    w.outside_sup = std::max(out_sup, 0.0);  // empty outside sup counts as 0

    ConditionReport rep;
    rep.id = ConditionId::C3_6;
    // Strictness decided with margin condition_rel * inside sup; a tie within
    // the margin does not count as strict domination.
    rep.holds = std::isfinite(in_sup) &&
                w.outside_sup < in_sup - tol.condition_rel * in_sup && in_sup > 0.0;
    rep.tolerance_used = tol.condition_rel;
    rep.witness = w;
    rep.lambda.assign(lambda.begin(), lambda.end());
    rep.truncation_rows = A.rows();
    rep.truncation_cols = A.cols();
    return rep;
}

ConditionReport check_3_7(const NonNegMatrix& A, Exponent p,
                          std::span<const std::size_t> lambda, const Tolerance& tol) {
    if (!p.is_finite()) throw std::invalid_argument("check_3_7 requires 1 < p < inf");
    require_lambda(A, lambda);
    const Vec norms = row_pstar_norms(A, p);
    const double global = *std::max_element(norms.begin(), norms.end());

    Witness37 w;
    w.global_sup = global;
    bool any_decreasing = false;
    for (std::size_t l : lambda) {
        auto r = A.row_span(l);
        bool dec = true;
        for (std::size_t k = 0; k + 1 < r.size(); ++k)
            if (!nonincreasing_pair(r[k], r[k + 1], tol.condition_rel, norms[l])) {
                dec = false;
                break;
            }
        if (!dec) continue;
        any_decreasing = true;
        if (ties_sup(norms[l], global, tol.condition_rel)) {
            w.row = l;
            w.row_norm = norms[l];
            break;
        }
        w.row_norm = std::max(w.row_norm, norms[l]);
    }
    if (!w.row) {
        w.reason = any_decreasing
                       ? "no non-increasing row in Lambda ties the global row-norm sup"
                       : "no row in Lambda is non-increasing";
    }

    ConditionReport rep;
    rep.id = ConditionId::C3_7;
    rep.holds = w.row.has_value();
    rep.tolerance_used = tol.condition_rel;
    rep.witness = w;
    rep.lambda.assign(lambda.begin(), lambda.end());
    rep.truncation_rows = A.rows();
    rep.truncation_cols = A.cols();
    return rep;
}

std::vector<std::size_t> search_lambda_singletons(const NonNegMatrix& A, Exponent p,
                                                  const Tolerance& tol) {
    if (!p.is_finite())
        throw std::invalid_argument("search_lambda_singletons requires 1 < p < inf");
    const Vec norms = row_pstar_norms(A, p);
    const double top = *std::max_element(norms.begin(), norms.end());
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < A.rows(); ++j)
        if (ties_sup(norms[j], top, tol.condition_rel)) out.push_back(j);
    return out;
}

}  // namespace monorm
