#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monorm {

using Vec = std::vector<double>;

/// An exponent p in [1, inf]. The endpoints are symbolic, never float
/// sentinels, so conjugation (1/p + 1/p* = 1) is exact and powers x^p never
/// route through an overflowing literal infinity.
class Exponent {
public:
    enum class Kind { One, Finite, Infinity };

    static Exponent one() { return {Kind::One, 1.0, 0.0}; }
    static Exponent infinity() { return {Kind::Infinity, 0.0, 0.0}; }

    /// Finite exponent, requires 1 < p < inf. The conjugate value p/(p-1) is
    /// computed once here; conjugate() swaps the stored pair, which makes the
    /// involution exact bit for bit.
    static Exponent finite(double p);

    /// Accepts "1", "inf"/"infinity" (case-insensitive), or a decimal > 1.
    static std::optional<Exponent> parse(std::string_view token);

    Kind kind() const { return kind_; }
    bool is_one() const { return kind_ == Kind::One; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }

    /// Numeric value: 1, p, or +inf.
    double value() const;

    Exponent conjugate() const;

    std::string str() const;

    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }

private:
    Exponent(Kind k, double v, double cv) : kind_(k), value_(v), conj_value_(cv) {}
    Kind kind_;
    double value_;
    double conj_value_;
};

/// Tolerance policy shared by condition checks and the oracle.
///   condition_rel: relative tolerance for equality-with-sup decisions,
///                  must lie in (0, 1e-3);
///   oracle_abs:    convergence threshold for the gradient oracle,
///                  must lie in (0, 1e-2).
struct Tolerance {
    double condition_rel = 1e-9;
    double oracle_abs = 1e-6;

    Tolerance() = default;
    Tolerance(double rel, double abs);
};

/// Dense non-negative matrix, row-major, immutable after construction.
/// col_support = k0 asserts a(j,k) = 0 for all columns k > k0 (1-based count
/// of potentially non-zero leading columns).
class NonNegMatrix {
public:
    NonNegMatrix(std::size_t rows, std::size_t cols, Vec entries,
                 std::optional<std::size_t> col_support = std::nullopt);

    static NonNegMatrix zero(std::size_t rows, std::size_t cols);
    static NonNegMatrix from_rows(const std::vector<Vec>& rows,
                                  std::optional<std::size_t> col_support = std::nullopt);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::optional<std::size_t> col_support() const { return col_support_; }

    double operator()(std::size_t j, std::size_t k) const { return entries_[j * cols_ + k]; }

    std::span<const double> row_span(std::size_t j) const {
        return {entries_.data() + j * cols_, cols_};
    }
    Vec row(std::size_t j) const;
    Vec col(std::size_t k) const;
    const Vec& entries() const { return entries_; }

    NonNegMatrix transposed() const;
    NonNegMatrix scaled(double c) const;  // c >= 0

private:
    std::size_t rows_;
    std::size_t cols_;
    Vec entries_;
    std::optional<std::size_t> col_support_;
};

/// Exactness tag carried by every reported norm value.
enum class Exactness { ClosedForm, VertexExact, MajorantExact, NumericalLowerBound };
std::string_view to_string(Exactness e);

/// (sum |v_k|^q)^(1/q); sum for q=1, max for q=inf. Zero/empty vectors give 0.
/// Finite q is evaluated max-scaled so large q neither overflows nor NaNs.
double lq_norm(std::span<const double> v, Exponent q);

Vec column_sums(const NonNegMatrix& A);
Vec column_q_norms(const NonNegMatrix& A, Exponent q);
Vec row_sums(const NonNegMatrix& A);
Vec matvec(const NonNegMatrix& A, std::span<const double> x);

}  // namespace monorm
