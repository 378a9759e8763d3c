#pragma once

#include <filesystem>
#include <string>

#include "iveig/types.hpp"

namespace iveig::io {

/// Shortest decimal form that round-trips the exact double.
std::string format_double(double v);

/// Writes comma-separated rows, full round-trip precision, no header.
void write_matrix_csv(const std::filesystem::path& path, const Matrix& m);

/// Reads a numeric CSV. A first line that does not parse as numbers is
/// treated as a header and skipped. Ragged rows are rejected.
Matrix read_matrix_csv(const std::filesystem::path& path);

/// read_matrix_csv plus Dataset validation (finite, n >= 1, d >= 1).
Dataset read_dataset_csv(const std::filesystem::path& path);

}  // namespace iveig::io
