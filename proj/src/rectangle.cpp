#include "latin/rectangle.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace latin {

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::RowNotPermutation:
      return "row-not-permutation";
    case Violation::Kind::ColumnRepeat:
      return "column-repeat";
    case Violation::Kind::SymbolOutOfRange:
      return "symbol-out-of-range";
  }
  return "?";
}

namespace {

// Shared checker over any cell accessor returning long long.
template <typename CellFn>
ValidationReport check_latin(std::size_t rows, std::size_t cols, CellFn cell) {
  ValidationReport rep;
  const long long n = static_cast<long long>(cols);
  std::vector<char> seen(cols);
  for (std::size_t a = 0; a < rows; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < cols; ++c) {
      const long long v = cell(a, c);
      if (v < 0 || v >= n) {
        rep.violations.push_back(
            {Violation::Kind::SymbolOutOfRange, a, c});
      } else if (seen[static_cast<std::size_t>(v)]) {
        rep.violations.push_back(
            {Violation::Kind::RowNotPermutation, a, c});
      } else {
        seen[static_cast<std::size_t>(v)] = 1;
      }
    }
  }
  for (std::size_t c = 0; c < cols; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < rows; ++a) {
      const long long v = cell(a, c);
      if (v < 0 || v >= n) continue;  // already reported above
      if (seen[static_cast<std::size_t>(v)]) {
        rep.violations.push_back({Violation::Kind::ColumnRepeat, a, c});
      } else {
        seen[static_cast<std::size_t>(v)] = 1;
      }
    }
  }
  rep.valid = rep.violations.empty();
  return rep;
}

void check_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0) throw std::invalid_argument("grid has no rows");
  if (cols == 0) throw std::invalid_argument("grid has no columns");
  if (cols > kMaxOrder) {
    throw std::invalid_argument("grid has more than 65535 columns");
  }
}

[[noreturn]] void throw_invalid(const ValidationReport& rep) {
  std::ostringstream msg;
  msg << "grid is not a Latin rectangle:";
  std::size_t shown = 0;
  for (const auto& v : rep.violations) {
    if (shown == 4) {
      msg << " ... (" << rep.violations.size() - shown << " more)";
      break;
    }
    msg << ' ' << to_string(v.kind) << " at row " << v.row << " column "
        << v.col << ';';
    ++shown;
  }
  throw std::invalid_argument(msg.str());
}

bool is_permutation_of_range(std::span<const std::size_t> p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> seen(n);
  for (std::size_t v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

ValidationReport validate(const RawGrid& grid) {
  if (grid.empty()) throw std::invalid_argument("grid has no rows");
  const std::size_t cols = grid[0].size();
  for (std::size_t a = 0; a < grid.size(); ++a) {
    if (grid[a].size() != cols) {
      std::ostringstream msg;
      msg << "ragged grid: row " << a << " has " << grid[a].size()
          << " cells, expected " << cols;
      throw std::invalid_argument(msg.str());
    }
  }
  check_shape(grid.size(), cols);
  return check_latin(grid.size(), cols,
                     [&](std::size_t a, std::size_t c) { return grid[a][c]; });
}

LatinRectangle::LatinRectangle(std::size_t rows, std::size_t cols,
                               std::vector<Symbol> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  assert(cells_.size() == rows_ * cols_);
  inverse_.resize(rows_ * cols_);
  for (std::size_t a = 0; a < rows_; ++a) {
    for (std::size_t c = 0; c < cols_; ++c) {
      inverse_[a * cols_ + cells_[a * cols_ + c]] =
          static_cast<Symbol>(c);
    }
  }
}

LatinRectangle LatinRectangle::from_grid(const RawGrid& grid) {
  ValidationReport rep = validate(grid);
  if (!rep.valid) throw_invalid(rep);
  const std::size_t rows = grid.size();
  const std::size_t cols = grid[0].size();
  std::vector<Symbol> cells(rows * cols);
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t c = 0; c < cols; ++c) {
      cells[a * cols + c] = static_cast<Symbol>(grid[a][c]);
    }
  }
  return LatinRectangle(rows, cols, std::move(cells));
}

LatinRectangle LatinRectangle::from_cells(std::size_t rows, std::size_t cols,
                                          std::vector<Symbol> cells) {
  check_shape(rows, cols);
  if (cells.size() != rows * cols) {
    throw std::invalid_argument("cell array does not match rows*cols");
  }
  ValidationReport rep =
      check_latin(rows, cols, [&](std::size_t a, std::size_t c) {
        return static_cast<long long>(cells[a * cols + c]);
      });
  if (!rep.valid) throw_invalid(rep);
  return LatinRectangle(rows, cols, std::move(cells));
}

LatinRectangle truncate_rows(const LatinRectangle& r, std::size_t new_rows) {
  if (new_rows < 1 || new_rows > r.rows()) {
    throw std::out_of_range("truncate_rows: row count out of range");
  }
  std::vector<Symbol> cells(r.cells().begin(),
                            r.cells().begin() + new_rows * r.cols());
  return LatinRectangle::from_cells(new_rows, r.cols(), std::move(cells));
}

LatinRectangle permute(const LatinRectangle& r,
                       std::span<const std::size_t> row_perm,
                       std::span<const std::size_t> col_perm,
                       std::span<const std::size_t> sym_perm) {
  if (!is_permutation_of_range(row_perm, r.rows())) {
    throw std::invalid_argument("row_perm is not a permutation of the rows");
  }
  if (!is_permutation_of_range(col_perm, r.cols())) {
    throw std::invalid_argument("col_perm is not a permutation of the columns");
  }
  if (!is_permutation_of_range(sym_perm, r.cols())) {
    throw std::invalid_argument("sym_perm is not a permutation of the symbols");
  }
  std::vector<Symbol> cells(r.rows() * r.cols());
  for (std::size_t a = 0; a < r.rows(); ++a) {
    for (std::size_t c = 0; c < r.cols(); ++c) {
      cells[a * r.cols() + c] =
          static_cast<Symbol>(sym_perm[r.at(row_perm[a], col_perm[c])]);
    }
  }
  return LatinRectangle::from_cells(r.rows(), r.cols(), std::move(cells));
}

LatinRectangle reduce(const LatinRectangle& r) {
  // Relabel so row 0 becomes the identity, then sort rows by first column.
  std::vector<std::size_t> sym_perm(r.cols());
  for (std::size_t c = 0; c < r.cols(); ++c) {
    sym_perm[r.at(0, c)] = c;
  }
  std::vector<std::size_t> row_perm(r.rows());
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::sort(row_perm.begin(), row_perm.end(),
            [&](std::size_t x, std::size_t y) {
              return sym_perm[r.at(x, 0)] < sym_perm[r.at(y, 0)];
            });
  std::vector<std::size_t> col_perm(r.cols());
  std::iota(col_perm.begin(), col_perm.end(), 0);
  return permute(r, row_perm, col_perm, sym_perm);
}

ParseError::ParseError(std::size_t line, std::size_t col,
                       const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + what),
      line(line),
      col(col) {}

namespace {

// Grids above this many cells are rejected before allocation.
constexpr std::size_t kMaxCells = std::size_t{1} << 26;

struct Line {
  std::size_t number = 0;  // 1-based
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view body =
        eol == std::string_view::npos ? text : text.substr(0, eol);
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    lines.push_back({number, body});
    ++number;
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return lines;
}

// Splits a line into integer tokens, reporting 1-based columns on failure.
std::vector<long long> parse_int_line(const Line& line,
                                      std::size_t expected_count,
                                      const char* what) {
  std::vector<long long> values;
  std::string_view text = line.text;
  std::size_t offset = 0;
  while (true) {
    while (offset < text.size() && (text[offset] == ' ' || text[offset] == '\t')) {
      ++offset;
    }
    if (offset == text.size()) break;
    std::size_t end = offset;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    std::string_view token = text.substr(offset, end - offset);
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(line.number, offset + 1, "number out of range");
    }
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line.number, offset + 1,
                       std::string("expected integer, got \"") +
                           std::string(token) + "\"");
    }
    if (values.size() == expected_count) {
      throw ParseError(line.number, offset + 1,
                       std::string("too many values for ") + what);
    }
    values.push_back(value);
    offset = end;
  }
  if (values.size() < expected_count) {
    throw ParseError(line.number, text.size() + 1,
                     std::string("expected ") +
                         std::to_string(expected_count) + " values for " +
                         what + ", got " + std::to_string(values.size()));
  }
  return values;
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

LatinRectangle parse_lrect(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  std::size_t idx = 0;
  while (idx < lines.size() && is_blank(lines[idx].text)) ++idx;
  if (idx == lines.size()) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                     "empty input, expected \"m n\" header");
  }
  const std::vector<long long> header =
      parse_int_line(lines[idx], 2, "the \"m n\" header");
  const long long m = header[0];
  const long long n = header[1];
  if (m < 1 || n < 1) {
    throw ParseError(lines[idx].number, 1, "m and n must be positive");
  }
  if (n > static_cast<long long>(kMaxOrder)) {
    throw ParseError(lines[idx].number, 1, "n exceeds the 65535 symbol cap");
  }
  if (static_cast<unsigned long long>(m) * static_cast<unsigned long long>(n) >
      kMaxCells) {
    throw ParseError(lines[idx].number, 1, "grid too large");
  }
  ++idx;
  RawGrid grid;
  grid.reserve(static_cast<std::size_t>(m));
  for (long long row = 0; row < m; ++row) {
    if (idx == lines.size()) {
      throw ParseError(lines.back().number + 1, 1,
                       "missing row " + std::to_string(row) + " of " +
                           std::to_string(m));
    }
    grid.push_back(parse_int_line(lines[idx], static_cast<std::size_t>(n),
                                  "a grid row"));
    ++idx;
  }
  for (; idx < lines.size(); ++idx) {
    if (!is_blank(lines[idx].text)) {
      throw ParseError(lines[idx].number,
                       lines[idx].text.find_first_not_of(" \t") + 1,
                       "trailing garbage after the grid");
    }
  }
  return LatinRectangle::from_grid(grid);
}

LatinRectangle read_lrect(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_lrect(text);
}

LatinRectangle read_lrect_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_lrect(in);
}

void write_lrect(std::ostream& out, const LatinRectangle& r) {
  out << r.rows() << ' ' << r.cols() << '\n';
  for (std::size_t a = 0; a < r.rows(); ++a) {
    for (std::size_t c = 0; c < r.cols(); ++c) {
      if (c) out << ' ';
      out << r.at(a, c);
    }
    out << '\n';
  }
}

std::string to_lrect(const LatinRectangle& r) {
  std::ostringstream out;
  write_lrect(out, r);
  return out.str();
}

}  // namespace latin
