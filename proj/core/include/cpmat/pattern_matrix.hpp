#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpmat/color.hpp"
#include "cpmat/errors.hpp"

namespace cpmat {

/// One entry of a pattern matrix: either a structural zero (nullopt) or the
/// color class of a nonzero entry.
using Cell = std::optional<ColorId>;

/// A structured validation finding for an input document.  `row`/`col` are
/// 1-based; 0 means "whole document".
struct Diagnostic {
    std::string code;        // stable machine-readable identifier
    std::string message;     // human-readable explanation
    std::size_t row = 0;
    std::size_t col = 0;
    std::string suggestion;  // optional repair hint (may be empty)
};

/// Lenient parse result: raw tokens plus declared dimensions.  May describe
/// an invalid matrix; run validate_document / ColoredPatternMatrix::
/// from_document to decide.
struct MatrixDocument {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::optional<std::size_t> state_dim;            // n, for system inputs
    std::vector<std::vector<std::string>> tokens;    // possibly ragged
};

/// Reads either the text format
///
///     dims <rows> <cols> [<state_dim>]
///     <tok> <tok> ... <tok>          (one line per row, '#' starts a comment)
///
/// or the equivalent JSON envelope
///
///     {"rows": p, "cols": q, "state_dim": n|null, "entries": [["c1","0",...],...]}
///
/// Throws ParseError only when the framing itself is unreadable (missing or
/// malformed header, unparseable JSON); token-level problems are left for
/// validate_document so they can all be reported at once.
MatrixDocument read_document(std::string_view text);

/// Checks a document against the format rules and returns every finding:
/// dimension mismatches, malformed tokens, non-canonical (gapped or not
/// 1-based) color numbering, and state-dimension inconsistencies.  An empty
/// result means the document describes a valid colored pattern matrix.
std::vector<Diagnostic> validate_document(const MatrixDocument& doc);

/// An immutable colored pattern matrix: a rows x cols grid of cells where
/// every nonzero entry carries a color class, with canonical numbering
/// (Star classes c1..ck and Question classes g1..gl, each contiguous from 1
/// and nonempty).  Construction validates; instances are always well formed.
class ColoredPatternMatrix {
public:
    /// Empty 0x0 placeholder, only useful as a pre-assignment target; every
    /// validating constructor guarantees at least 1x1.
    ColoredPatternMatrix() = default;

    /// Validates canonical numbering and throws ParseError on violation.
    ColoredPatternMatrix(std::size_t rows, std::size_t cols, std::vector<Cell> cells);

    /// Validates a document (throwing ParseError that aggregates all
    /// diagnostics on failure) and builds the matrix.
    static ColoredPatternMatrix from_document(const MatrixDocument& doc);

    /// read_document + from_document in one step.
    static ColoredPatternMatrix parse(std::string_view text);

    /// Builds a matrix from cells whose color indices may be non-canonical
    /// (gapped, unordered).  Colors are renumbered canonically by increasing
    /// original index within each kind; the second result maps each final
    /// color to the original it came from.
    static std::pair<ColoredPatternMatrix, std::vector<std::pair<ColorId, ColorId>>>
    from_cells_renumbered(std::size_t rows, std::size_t cols, std::vector<Cell> cells);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Cell& at(std::size_t i, std::size_t j) const {  // 0-based
        return cells_[i * cols_ + j];
    }

    /// Number of Star classes (k) and Question classes (l).
    int star_class_count() const { return star_count_; }
    int question_class_count() const { return question_count_; }

    /// All colors in canonical order: c1..ck, g1..gl.
    std::vector<ColorId> colors() const;

    /// The locations of one class, row-major order (0-based coordinates).
    std::vector<std::pair<std::size_t, std::size_t>> class_cells(ColorId color) const;

    /// Induced submatrix on the given row/column index lists (0-based; order
    /// is preserved, so rows/cols may be permuted or repeated).  Colors that
    /// survive are renumbered canonically by increasing original index; the
    /// second result maps each final color to its original.
    std::pair<ColoredPatternMatrix, std::vector<std::pair<ColorId, ColorId>>>
    submatrix(std::span<const std::size_t> row_idx,
              std::span<const std::size_t> col_idx) const;

    /// Serializes to the text format (ends with a newline).  Passing a state
    /// dimension emits the three-number header form.
    std::string to_text(std::optional<std::size_t> state_dim = std::nullopt) const;

    friend bool operator==(const ColoredPatternMatrix&, const ColoredPatternMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Cell> cells_;
    int star_count_ = 0, question_count_ = 0;
};

}  // namespace cpmat
