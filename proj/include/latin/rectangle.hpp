// rectangle.hpp -- Latin rectangle representation, validation, elementary
// transformations, and the LRECT v1 text format.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latin {

/// Symbols are always canonicalized to {0..n-1}. Orders are capped at 65535,
/// which keeps a symbol in 16 bits.
using Symbol = std::uint16_t;

inline constexpr std::size_t kMaxOrder = 65535;

/// Unvalidated input grid. Cells may hold arbitrary integers; validation
/// flags anything outside {0..n-1}.
using RawGrid = std::vector<std::vector<long long>>;

struct Violation {
  enum class Kind { RowNotPermutation, ColumnRepeat, SymbolOutOfRange };
  Kind kind;
  std::size_t row;
  std::size_t col;

  bool operator==(const Violation&) const = default;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks both Latin conditions on a rectangular grid: every row is a
/// permutation of {0..n-1} and no column repeats a symbol. Violations are
/// reported, not thrown; structural problems (empty or ragged input) throw
/// std::invalid_argument since no per-cell report is possible for them.
ValidationReport validate(const RawGrid& grid);

/// An immutable m x n Latin rectangle over the alphabet {0..n-1}.
///
/// The grid is stored row-major; a per-row symbol->column index is kept so
/// that permutation walks can look up "the column of symbol x in row a" in
/// O(1).
class LatinRectangle {
 public:
  /// Validates and ingests a raw grid. Throws std::invalid_argument with the
  /// first few violations spelled out if the grid is not Latin.
  static LatinRectangle from_grid(const RawGrid& grid);

  /// Same checks as from_grid, but over an already-packed cell array.
  static LatinRectangle from_cells(std::size_t rows, std::size_t cols,
                                   std::vector<Symbol> cells);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Symbol at(std::size_t row, std::size_t col) const {
    return cells_[row * cols_ + col];
  }

  /// Column holding symbol `sym` in row `row`.
  std::size_t column_of(std::size_t row, Symbol sym) const {
    return inverse_[row * cols_ + sym];
  }

  std::span<const Symbol> row(std::size_t r) const {
    return {cells_.data() + r * cols_, cols_};
  }

  const std::vector<Symbol>& cells() const { return cells_; }

  bool operator==(const LatinRectangle& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           cells_ == other.cells_;
  }

 private:
  LatinRectangle(std::size_t rows, std::size_t cols,
                 std::vector<Symbol> cells);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> cells_;    // row-major grid
  std::vector<Symbol> inverse_;  // row-major symbol->column index
};

/// First `new_rows` rows of `r`. A truncation of a Latin rectangle is again
/// Latin, and it inherits every row pair of the original unchanged.
LatinRectangle truncate_rows(const LatinRectangle& r, std::size_t new_rows);

/// Isotopy: grid'(a,c) = sym_perm[ r(row_perm[a], col_perm[c]) ]. Each
/// argument must be a permutation of its index set.
LatinRectangle permute(const LatinRectangle& r,
                       std::span<const std::size_t> row_perm,
                       std::span<const std::size_t> col_perm,
                       std::span<const std::size_t> sym_perm);

/// Canonical isotopy representative: relabels symbols so the first row reads
/// 0,1,...,n-1, then reorders rows so the first column increases. Idempotent.
LatinRectangle reduce(const LatinRectangle& r);

/// LRECT v1: line 1 is "m n", lines 2..m+1 hold n space-separated base-10
/// symbols. Anything after row m other than whitespace is rejected.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::size_t col, const std::string& what);
  std::size_t line;
  std::size_t col;
};

LatinRectangle parse_lrect(std::string_view text);
LatinRectangle read_lrect(std::istream& in);
LatinRectangle read_lrect_file(const std::string& path);
void write_lrect(std::ostream& out, const LatinRectangle& r);
std::string to_lrect(const LatinRectangle& r);

}  // namespace latin
