#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "monorm/core.hpp"

namespace monorm {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// CSV: comma-separated decimal entries, no header, rectangular.
/// JSON: {"rows": R, "cols": C, "entries": [[...], ...], "col_support": k0?}.
/// Format is picked by extension, falling back to content sniffing.
NonNegMatrix load_matrix(const std::filesystem::path& path);

NonNegMatrix load_matrix_csv(std::istream& in);
NonNegMatrix load_matrix_json(std::istream& in);

void save_matrix_csv(const NonNegMatrix& A, std::ostream& out);
void save_matrix_json(const NonNegMatrix& A, std::ostream& out);

}  // namespace monorm
