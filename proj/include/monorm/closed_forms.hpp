#pragma once

#include "monorm/core.hpp"

namespace monorm {

/// Which boundary-exponent regime a (p, q) pair falls in. P1/PInf take
/// precedence over Q1/QInf, so the q-side cases always have 1 < p < inf.
enum class NormCase { P1, PInf, Q1, QInf, Interior };
std::string_view to_string(NormCase c);

NormCase classify(Exponent p, Exponent q);

/// ||A||(l1 -> lq) = max over columns of the column lq norm.
double norm_l1_lq(const NonNegMatrix& A, Exponent q);

/// ||A||(linf -> lq) = lq norm of the row-sum vector.
double norm_linf_lq(const NonNegMatrix& A, Exponent q);

/// ||A||(lp -> l1) = ||column sums||_{p*}. Requires finite p (throws for
/// p = 1 or inf; those cases belong to norm_l1_lq / norm_linf_lq).
double norm_lp_l1(const NonNegMatrix& A, Exponent p);

/// ||A||(lp -> linf) = max over rows of the row l_{p*} norm. Requires finite p.
double norm_lp_linf(const NonNegMatrix& A, Exponent p);

struct NormResult {
    double value;
    Exactness exactness;
    NormCase norm_case;
};

/// Dispatcher over the four closed forms; interior (p, q) pairs fall back to
/// the projected-gradient oracle and are tagged as numerical lower bounds.
NormResult norm(const NonNegMatrix& A, Exponent p, Exponent q,
                const Tolerance& tol = {});

}  // namespace monorm
