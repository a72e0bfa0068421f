#include "monorm/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "monorm/oracle.hpp"

namespace monorm {

std::string_view to_string(NormCase c) {
    switch (c) {
        case NormCase::P1: return "p=1";
        case NormCase::PInf: return "p=inf";
        case NormCase::Q1: return "q=1";
        case NormCase::QInf: return "q=inf";
        case NormCase::Interior: return "interior";
    }
    return {};
}

NormCase classify(Exponent p, Exponent q) {
    if (p.is_one()) return NormCase::P1;
    if (p.is_infinity()) return NormCase::PInf;
    if (q.is_one()) return NormCase::Q1;
    if (q.is_infinity()) return NormCase::QInf;
    return NormCase::Interior;
}

double norm_l1_lq(const NonNegMatrix& A, Exponent q) {
    const Vec norms = column_q_norms(A, q);
    return *std::max_element(norms.begin(), norms.end());
}

double norm_linf_lq(const NonNegMatrix& A, Exponent q) {
    const Vec s = row_sums(A);
    return lq_norm(s, q);
}

double norm_lp_l1(const NonNegMatrix& A, Exponent p) {
    if (!p.is_finite())
        throw std::invalid_argument(
            "norm_lp_l1 requires 1 < p < inf; use norm_l1_lq or norm_linf_lq");
    const Vec s = column_sums(A);
    return lq_norm(s, p.conjugate());
}

double norm_lp_linf(const NonNegMatrix& A, Exponent p) {
    if (!p.is_finite())
        throw std::invalid_argument(
            "norm_lp_linf requires 1 < p < inf; use norm_l1_lq or norm_linf_lq");
    const Exponent ps = p.conjugate();
    double best = 0.0;
    for (std::size_t j = 0; j < A.rows(); ++j)
        best = std::max(best, lq_norm(A.row_span(j), ps));
    return best;
}

NormResult norm(const NonNegMatrix& A, Exponent p, Exponent q, const Tolerance& tol) {
    const NormCase c = classify(p, q);
    switch (c) {
        case NormCase::P1:
            return {norm_l1_lq(A, q), Exactness::ClosedForm, c};
        case NormCase::PInf:
            return {norm_linf_lq(A, q), Exactness::ClosedForm, c};
        case NormCase::Q1:
            return {norm_lp_l1(A, p), Exactness::ClosedForm, c};
        case NormCase::QInf:
            return {norm_lp_linf(A, p), Exactness::ClosedForm, c};
        case NormCase::Interior:
            break;
    }
    const OracleResult r = projgrad_full(A, p, q, {}, tol);
    return {r.value, Exactness::NumericalLowerBound, c};
}

}  // namespace monorm
