#pragma once

#include <variant>

#include "monorm/core.hpp"

namespace monorm {

/// The four attainment conditions. Names follow the CLI tokens:
///   2.1: column 1 achieves the sup of column lq norms      (p = 1 case)
///   3.1: column sums are non-increasing                     (q = 1 case)
///   3.6: a row set Lambda strictly dominates all other row p* norms
///   3.7: some row in Lambda is non-increasing and ties the global row
///        p*-norm sup                                        (q = inf case)
enum class ConditionId { C2_1, C3_1, C3_6, C3_7 };
std::string_view to_string(ConditionId id);

struct Witness21 {
    std::size_t best_col = 0;  // column achieving the sup (0-based)
    double col1_norm = 0.0;
    double best_norm = 0.0;
    double gap = 0.0;  // best_norm - col1_norm
};

struct Witness31 {
    std::optional<std::size_t> violation_at;  // first k with S_k < S_{k+1} (0-based)
    double before = 0.0;
    double after = 0.0;
};

struct Witness36 {
    double inside_sup = 0.0;
    std::size_t inside_row = 0;
    double outside_sup = 0.0;  // 0 when Lambda covers every row
    std::optional<std::size_t> outside_row;
};

struct Witness37 {
    std::optional<std::size_t> row;  // the witnessing l when the condition holds
    double row_norm = 0.0;
    double global_sup = 0.0;
    std::string reason;  // failure explanation otherwise
};

struct ConditionReport {
    ConditionId id{};
    bool holds = false;
    double tolerance_used = 0.0;
    std::variant<Witness21, Witness31, Witness36, Witness37> witness;
    std::vector<std::size_t> lambda;  // echoed for 3.6 / 3.7 (0-based)
    std::size_t truncation_rows = 0;  // recorded so sup-over-all-rows decisions
    std::size_t truncation_cols = 0;  // can be re-checked under growth
};

ConditionReport check_2_1(const NonNegMatrix& A, Exponent q, const Tolerance& tol = {});
ConditionReport check_3_1(const NonNegMatrix& A, const Tolerance& tol = {});

/// Requires finite p and a non-empty Lambda of valid 0-based row indices.
ConditionReport check_3_6(const NonNegMatrix& A, Exponent p,
                          std::span<const std::size_t> lambda, const Tolerance& tol = {});
ConditionReport check_3_7(const NonNegMatrix& A, Exponent p,
                          std::span<const std::size_t> lambda, const Tolerance& tol = {});

/// Convenience search: rows whose p*-norm ties the top row norm within
/// condition_rel, each a candidate singleton Lambda.
std::vector<std::size_t> search_lambda_singletons(const NonNegMatrix& A, Exponent p,
                                                  const Tolerance& tol = {});

}  // namespace monorm
