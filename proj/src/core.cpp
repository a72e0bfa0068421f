#include "monorm/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace monorm {

Exponent Exponent::finite(double p) {
    if (!std::isfinite(p) || p <= 1.0)
        throw std::invalid_argument("Exponent::finite requires 1 < p < inf");
    return {Kind::Finite, p, p / (p - 1.0)};
}

std::optional<Exponent> Exponent::parse(std::string_view token) {
    std::string low(token);
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (low == "1") return one();
    if (low == "inf" || low == "infinity") return infinity();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(low.data(), low.data() + low.size(), v);
    if (ec != std::errc{} || ptr != low.data() + low.size()) return std::nullopt;
    if (v == 1.0) return one();
    if (!std::isfinite(v) || v < 1.0) return std::nullopt;
    return finite(v);
}

double Exponent::value() const {
    switch (kind_) {
        case Kind::One: return 1.0;
        case Kind::Finite: return value_;
        case Kind::Infinity: return std::numeric_limits<double>::infinity();
    }
    return 0.0;
}

Exponent Exponent::conjugate() const {
    switch (kind_) {
        case Kind::One: return infinity();
        case Kind::Infinity: return one();
        case Kind::Finite: return {Kind::Finite, conj_value_, value_};
    }
    return one();
}

std::string Exponent::str() const {
    switch (kind_) {
        case Kind::One: return "1";
        case Kind::Infinity: return "inf";
        case Kind::Finite: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", value_);
            return buf;
        }
    }
    return {};
}

Tolerance::Tolerance(double rel, double abs) : condition_rel(rel), oracle_abs(abs) {
    if (!(rel > 0.0 && rel < 1e-3))
        throw std::invalid_argument("Tolerance: condition_rel must lie in (0, 1e-3)");
    if (!(abs > 0.0 && abs < 1e-2))
        throw std::invalid_argument("Tolerance: oracle_abs must lie in (0, 1e-2)");
}

NonNegMatrix::NonNegMatrix(std::size_t rows, std::size_t cols, Vec entries,
                           std::optional<std::size_t> col_support)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), col_support_(col_support) {
    if (rows_ == 0 || cols_ == 0)
        throw std::invalid_argument("NonNegMatrix: dimensions must be positive");
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("NonNegMatrix: entry count does not match dimensions");
    for (double a : entries_)
        if (!std::isfinite(a) || a < 0.0)
            throw std::invalid_argument("NonNegMatrix: entries must be finite and >= 0");
    if (col_support_) {
        if (*col_support_ == 0)
            throw std::invalid_argument("NonNegMatrix: col_support must be positive");
        for (std::size_t j = 0; j < rows_; ++j)
            for (std::size_t k = *col_support_; k < cols_; ++k)
                if ((*this)(j, k) != 0.0)
                    throw std::invalid_argument(
                        "NonNegMatrix: non-zero entry beyond col_support");
    }
}

NonNegMatrix NonNegMatrix::zero(std::size_t rows, std::size_t cols) {
    return {rows, cols, Vec(rows * cols, 0.0)};
}

NonNegMatrix NonNegMatrix::from_rows(const std::vector<Vec>& rows,
                                     std::optional<std::size_t> col_support) {
    if (rows.empty()) throw std::invalid_argument("NonNegMatrix: no rows");
    const std::size_t cols = rows.front().size();
    Vec flat;
    flat.reserve(rows.size() * cols);
    for (const Vec& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("NonNegMatrix: ragged rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return {rows.size(), cols, std::move(flat), col_support};
}

Vec NonNegMatrix::row(std::size_t j) const {
    auto s = row_span(j);
    return {s.begin(), s.end()};
}

Vec NonNegMatrix::col(std::size_t k) const {
    Vec out(rows_);
    for (std::size_t j = 0; j < rows_; ++j) out[j] = (*this)(j, k);
    return out;
}

NonNegMatrix NonNegMatrix::transposed() const {
    Vec t(rows_ * cols_);
    for (std::size_t j = 0; j < rows_; ++j)
        for (std::size_t k = 0; k < cols_; ++k) t[k * rows_ + j] = (*this)(j, k);
    return {cols_, rows_, std::move(t)};
}

NonNegMatrix NonNegMatrix::scaled(double c) const {
    if (!std::isfinite(c) || c < 0.0)
        throw std::invalid_argument("NonNegMatrix::scaled requires c >= 0");
    Vec t(entries_);
    for (double& a : t) a *= c;
    return {rows_, cols_, std::move(t), col_support_};
}

std::string_view to_string(Exactness e) {
    switch (e) {
        case Exactness::ClosedForm: return "closed-form";
        case Exactness::VertexExact: return "vertex-exact";
        case Exactness::MajorantExact: return "majorant-exact";
        case Exactness::NumericalLowerBound: return "numerical-lower-bound";
    }
    return {};
}

double lq_norm(std::span<const double> v, Exponent q) {
    if (v.empty()) return 0.0;
    if (q.is_one()) {
        double s = 0.0;
        for (double x : v) s += std::abs(x);
        return s;
    }
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    if (q.is_infinity() || m == 0.0) return m;
    const double qe = q.value();
    double s = 0.0;
    for (double x : v) {
        const double r = std::abs(x) / m;
        if (r > 0.0) s += std::pow(r, qe);
    }
    return m * std::pow(s, 1.0 / qe);
}

Vec column_sums(const NonNegMatrix& A) {
    Vec s(A.cols(), 0.0);
    for (std::size_t j = 0; j < A.rows(); ++j) {
        auto r = A.row_span(j);
        for (std::size_t k = 0; k < A.cols(); ++k) s[k] += r[k];
    }
    return s;
}

Vec column_q_norms(const NonNegMatrix& A, Exponent q) {
    Vec out(A.cols());
    Vec buf(A.rows());
    for (std::size_t k = 0; k < A.cols(); ++k) {
        for (std::size_t j = 0; j < A.rows(); ++j) buf[j] = A(j, k);
        out[k] = lq_norm(buf, q);
    }
    return out;
}

Vec row_sums(const NonNegMatrix& A) {
    Vec s(A.rows(), 0.0);
    for (std::size_t j = 0; j < A.rows(); ++j) {
        double acc = 0.0;
        for (double a : A.row_span(j)) acc += a;
        s[j] = acc;
    }
    return s;
}

Vec matvec(const NonNegMatrix& A, std::span<const double> x) {
    if (x.size() != A.cols()) throw std::invalid_argument("matvec: size mismatch");
    Vec y(A.rows(), 0.0);
    for (std::size_t j = 0; j < A.rows(); ++j) {
        auto r = A.row_span(j);
        double acc = 0.0;
        for (std::size_t k = 0; k < A.cols(); ++k) acc += r[k] * x[k];
        y[j] = acc;
    }
    return y;
}

}  // namespace monorm
