#include "iveig/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace iveig::io {

std::string format_double(double v) {
  // Try increasing precision until the text parses back to the same bits.
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  if (!out.flush()) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

namespace {

bool parse_row(const std::string& line, std::vector<double>& row) {
  row.clear();
  const char* p = line.c_str();
  while (true) {
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p) return false;
    row.push_back(v);
    p = end;
    while (*p == ' ' || *p == '\t') ++p;
    if (*p == '\0' || *p == '\r') return true;
    if (*p != ',') return false;
    ++p;
  }
}

}  // namespace

Matrix read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open: " + path.string());
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    if (!parse_row(line, row)) {
      if (first) {  // header line
        first = false;
        continue;
      }
      throw std::runtime_error("unparseable CSV row in " + path.string());
    }
    first = false;
    if (!rows.empty() && rows.front().size() != row.size()) {
      throw std::runtime_error("ragged CSV row in " + path.string());
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw std::runtime_error("empty CSV: " + path.string());
  }
  Matrix m(static_cast<Index>(rows.size()),
           static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

Dataset read_dataset_csv(const std::filesystem::path& path) {
  Dataset d{read_matrix_csv(path)};
  require_valid(d, "dataset " + path.string());
  return d;
}

}  // namespace iveig::io
