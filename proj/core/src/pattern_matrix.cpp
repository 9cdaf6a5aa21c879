#include "cpmat/pattern_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "cpmat/json_io.hpp"

namespace cpmat {
namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

/// Splits text into lines, dropping '#' comments and blank lines.
std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::size_t a = 0, b = line.size();
        while (a < b && is_space(line[a])) ++a;
        while (b > a && is_space(line[b - 1])) --b;
        if (b > a) lines.emplace_back(line.substr(a, b - a));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) out.emplace_back(line.substr(start, i - start));
    }
    return out;
}

std::optional<std::size_t> parse_size(std::string_view tok) {
    if (tok.empty() || tok.size() > 9) return std::nullopt;
    std::size_t value = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

std::string format_diagnostics(const std::vector<Diagnostic>& ds) {
    std::ostringstream os;
    os << "invalid matrix document (" << ds.size()
       << (ds.size() == 1 ? " problem):" : " problems):");
    for (const auto& d : ds) {
        os << "\n  [" << d.code << "]";
        if (d.row != 0) {
            os << " row " << d.row;
            if (d.col != 0) os << ", col " << d.col;
            os << ":";
        }
        os << " " << d.message;
        if (!d.suggestion.empty()) os << " (" << d.suggestion << ")";
    }
    return os.str();
}

}  // namespace

MatrixDocument read_document(std::string_view text) {
    // JSON envelope?
    for (char c : text) {
        if (is_space(c)) continue;
        if (c == '{') {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("unreadable JSON document: ") + e.what());
            }
            return document_from_json(j);
        }
        break;
    }

    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError("empty document: expected a 'dims <rows> <cols> [<state-dim>]' header");
    auto header = split_tokens(lines[0]);
    if (header.empty() || header[0] != "dims")
        throw ParseError("missing header: first line must be 'dims <rows> <cols> [<state-dim>]'");
    if (header.size() != 3 && header.size() != 4)
        throw ParseError("malformed header: expected 'dims <rows> <cols>' or 'dims <rows> <cols> <state-dim>'");

    MatrixDocument doc;
    auto rows = parse_size(header[1]);
    auto cols = parse_size(header[2]);
    if (!rows || !cols)
        throw ParseError("malformed header: dimensions must be decimal integers");
    doc.rows = *rows;
    doc.cols = *cols;
    if (header.size() == 4) {
        auto n = parse_size(header[3]);
        if (!n) throw ParseError("malformed header: state dimension must be a decimal integer");
        doc.state_dim = *n;
    }
    for (std::size_t i = 1; i < lines.size(); ++i)
        doc.tokens.push_back(split_tokens(lines[i]));
    return doc;
}

std::vector<Diagnostic> validate_document(const MatrixDocument& doc) {
    std::vector<Diagnostic> out;
    auto add = [&](std::string code, std::string message, std::size_t row = 0,
                   std::size_t col = 0, std::string suggestion = "") {
        out.push_back(Diagnostic{std::move(code), std::move(message), row, col,
                                 std::move(suggestion)});
    };

    if (doc.rows == 0) add("empty-dimension", "row count must be at least 1");
    if (doc.cols == 0) add("empty-dimension", "column count must be at least 1");
    if (doc.tokens.size() != doc.rows)
        add("row-count-mismatch",
            "header declares " + std::to_string(doc.rows) + " rows but document has " +
                std::to_string(doc.tokens.size()));

    // Token-level scan.  Track the maximum index and the set of used indices
    // per kind to diagnose non-canonical numbering.
    std::map<ColorId, std::size_t> uses;
    int max_star = 0, max_question = 0;
    std::size_t row_limit = std::min(doc.tokens.size(), doc.rows);
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
        const auto& row = doc.tokens[i];
        if (row.size() != doc.cols)
            add("row-length-mismatch",
                "row has " + std::to_string(row.size()) + " entries, expected " +
                    std::to_string(doc.cols),
                i + 1);
        if (i >= row_limit) continue;  // beyond declared rows, still token-checked below
        for (std::size_t j = 0; j < row.size(); ++j) {
            const std::string& tok = row[j];
            if (tok == "0") continue;
            auto color = ColorId::parse(tok);
            if (!color) {
                add("malformed-token",
                    "'" + tok + "' is not '0', 'c<index>' or 'g<index>' with index >= 1",
                    i + 1, j + 1);
                continue;
            }
            ++uses[*color];
            if (color->solid()) max_star = std::max(max_star, color->index);
            else max_question = std::max(max_question, color->index);
        }
    }

    auto check_contiguous = [&](ColorKind kind, int max_index, char letter) {
        for (int r = 1; r <= max_index; ++r) {
            if (!uses.count(ColorId{kind, r})) {
                add("gapped-color-index",
                    std::string("class ") + letter + std::to_string(r) +
                        " is never used although " + letter + std::to_string(max_index) +
                        " is: color indices must be 1-based and contiguous",
                    0, 0, "renumber the classes consecutively from 1");
            }
        }
    };
    check_contiguous(ColorKind::Star, max_star, 'c');
    check_contiguous(ColorKind::Question, max_question, 'g');

    if (doc.state_dim) {
        if (*doc.state_dim == 0)
            add("state-dim-invalid", "state dimension must be at least 1");
        else if (*doc.state_dim != doc.rows)
            add("state-dim-invalid",
                "state dimension " + std::to_string(*doc.state_dim) +
                    " must equal the row count " + std::to_string(doc.rows));
        if (doc.cols <= *doc.state_dim)
            add("state-dim-invalid",
                "a system needs at least one input column: columns (" +
                    std::to_string(doc.cols) + ") must exceed the state dimension (" +
                    std::to_string(*doc.state_dim) + ")");
    }
    return out;
}

ColoredPatternMatrix::ColoredPatternMatrix(std::size_t rows, std::size_t cols,
                                           std::vector<Cell> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows_ == 0 || cols_ == 0)
        throw ParseError("matrix dimensions must be at least 1x1");
    if (cells_.size() != rows_ * cols_)
        throw ParseError("cell count does not match dimensions");
    std::map<ColorId, std::size_t> uses;
    for (const Cell& c : cells_)
        if (c) ++uses[*c];
    int max_star = 0, max_question = 0;
    for (const auto& [color, count] : uses) {
        if (color.solid()) max_star = std::max(max_star, color.index);
        else max_question = std::max(max_question, color.index);
    }
    for (int r = 1; r <= max_star; ++r)
        if (!uses.count(ColorId{ColorKind::Star, r}))
            throw ParseError("non-canonical coloring: class c" + std::to_string(r) +
                             " is empty");
    for (int s = 1; s <= max_question; ++s)
        if (!uses.count(ColorId{ColorKind::Question, s}))
            throw ParseError("non-canonical coloring: class g" + std::to_string(s) +
                             " is empty");
    star_count_ = max_star;
    question_count_ = max_question;
}

ColoredPatternMatrix ColoredPatternMatrix::from_document(const MatrixDocument& doc) {
    auto diagnostics = validate_document(doc);
    if (!diagnostics.empty()) throw ParseError(format_diagnostics(diagnostics));
    std::vector<Cell> cells;
    cells.reserve(doc.rows * doc.cols);
    for (const auto& row : doc.tokens)
        for (const auto& tok : row)
            cells.push_back(tok == "0" ? Cell{} : Cell{*ColorId::parse(tok)});
    return ColoredPatternMatrix(doc.rows, doc.cols, std::move(cells));
}

ColoredPatternMatrix ColoredPatternMatrix::parse(std::string_view text) {
    return from_document(read_document(text));
}

std::pair<ColoredPatternMatrix, std::vector<std::pair<ColorId, ColorId>>>
ColoredPatternMatrix::from_cells_renumbered(std::size_t rows, std::size_t cols,
                                            std::vector<Cell> cells) {
    // Collect used colors; std::map iterates Star classes by ascending index,
    // then Question classes, which is exactly the renumbering order.
    std::map<ColorId, ColorId> old_to_new;
    for (const Cell& c : cells)
        if (c) old_to_new.emplace(*c, ColorId{});
    int next_star = 0, next_question = 0;
    std::vector<std::pair<ColorId, ColorId>> new_to_old;
    for (auto& [old_color, new_color] : old_to_new) {
        int index = old_color.solid() ? ++next_star : ++next_question;
        new_color = ColorId{old_color.kind, index};
        new_to_old.emplace_back(new_color, old_color);
    }
    for (Cell& c : cells)
        if (c) c = old_to_new.at(*c);
    std::sort(new_to_old.begin(), new_to_old.end());
    return {ColoredPatternMatrix(rows, cols, std::move(cells)), std::move(new_to_old)};
}

std::vector<ColorId> ColoredPatternMatrix::colors() const {
    std::vector<ColorId> out;
    out.reserve(static_cast<std::size_t>(star_count_ + question_count_));
    for (int r = 1; r <= star_count_; ++r) out.push_back(ColorId{ColorKind::Star, r});
    for (int s = 1; s <= question_count_; ++s)
        out.push_back(ColorId{ColorKind::Question, s});
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ColoredPatternMatrix::class_cells(
    ColorId color) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) && *at(i, j) == color) out.emplace_back(i, j);
    return out;
}

std::pair<ColoredPatternMatrix, std::vector<std::pair<ColorId, ColorId>>>
ColoredPatternMatrix::submatrix(std::span<const std::size_t> row_idx,
                                std::span<const std::size_t> col_idx) const {
    for (std::size_t i : row_idx)
        if (i >= rows_) throw std::out_of_range("submatrix row index out of range");
    for (std::size_t j : col_idx)
        if (j >= cols_) throw std::out_of_range("submatrix column index out of range");
    std::vector<Cell> cells;
    cells.reserve(row_idx.size() * col_idx.size());
    for (std::size_t i : row_idx)
        for (std::size_t j : col_idx) cells.push_back(at(i, j));
    return from_cells_renumbered(row_idx.size(), col_idx.size(), std::move(cells));
}

std::string ColoredPatternMatrix::to_text(std::optional<std::size_t> state_dim) const {
    std::ostringstream os;
    os << "dims " << rows_ << " " << cols_;
    if (state_dim) os << " " << *state_dim;
    os << "\n";
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << (at(i, j) ? at(i, j)->token() : "0");
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace cpmat
