#include "monorm/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace monorm {

namespace {

double parse_number(std::string_view tok) {
    // trim surrounding whitespace
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r'))
        tok.remove_suffix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("CSV: not a decimal literal: '" + std::string(tok) + "'");
    return v;
}

NonNegMatrix build(std::size_t rows, std::size_t cols, Vec entries,
                   std::optional<std::size_t> support) {
    try {
        return {rows, cols, std::move(entries), support};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("matrix: ") + e.what());
    }
}

}  // namespace

NonNegMatrix load_matrix_csv(std::istream& in) {
    std::vector<Vec> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        Vec row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string_view tok =
                std::string_view(line).substr(start, comma == std::string::npos
                                                         ? std::string::npos
                                                         : comma - start);
            row.push_back(parse_number(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("CSV: empty input");
    const std::size_t cols = rows.front().size();
    Vec flat;
    flat.reserve(rows.size() * cols);
    for (const Vec& r : rows) {
        if (r.size() != cols) throw ParseError("CSV: rows have differing lengths");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return build(rows.size(), cols, std::move(flat), std::nullopt);
}

NonNegMatrix load_matrix_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("entries"))
        throw ParseError("JSON: expected object with rows, cols, entries");
    std::size_t rows, cols;
    std::optional<std::size_t> support;
    Vec flat;
    try {
        rows = doc.at("rows").get<std::size_t>();
        cols = doc.at("cols").get<std::size_t>();
        const auto& ent = doc.at("entries");
        if (!ent.is_array() || ent.size() != rows)
            throw ParseError("JSON: entries must hold one array per row");
        flat.reserve(rows * cols);
        for (const auto& r : ent) {
            if (!r.is_array() || r.size() != cols)
                throw ParseError("JSON: each row must hold cols numbers");
            for (const auto& v : r) flat.push_back(v.get<double>());
        }
        if (doc.contains("col_support")) support = doc.at("col_support").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("JSON: ") + e.what());
    }
    return build(rows, cols, std::move(flat), support);
}

NonNegMatrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path.string());
    auto ext = path.extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == ".json") return load_matrix_json(in);
    if (ext == ".csv") return load_matrix_csv(in);
    const int first = in.peek();
    if (first == '{') return load_matrix_json(in);
    return load_matrix_csv(in);
}

void save_matrix_csv(const NonNegMatrix& A, std::ostream& out) {
    char buf[32];
    for (std::size_t j = 0; j < A.rows(); ++j) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            std::snprintf(buf, sizeof(buf), "%.17g", A(j, k));
            out << (k ? "," : "") << buf;
        }
        out << '\n';
    }
}

void save_matrix_json(const NonNegMatrix& A, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["rows"] = A.rows();
    doc["cols"] = A.cols();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < A.rows(); ++j) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < A.cols(); ++k) row.push_back(A(j, k));
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    if (A.col_support()) doc["col_support"] = *A.col_support();
    out << doc.dump() << '\n';
}

}  // namespace monorm
