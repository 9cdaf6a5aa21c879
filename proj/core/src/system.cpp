#include "cpmat/system.hpp"

#include <algorithm>
#include <map>

namespace cpmat {

ColoredSystem ColoredSystem::from_matrix(ColoredPatternMatrix m, std::size_t state_dim) {
    if (state_dim == 0)
        throw ParseError("system state dimension must be at least 1");
    if (m.rows() != state_dim)
        throw ParseError("system matrix must have exactly state-dimension rows");
    if (m.cols() <= state_dim)
        throw ParseError("system matrix must have more columns than the state dimension");
    return ColoredSystem{state_dim, m.cols() - state_dim, std::move(m)};
}

ColoredSystem ColoredSystem::parse(std::string_view text) {
    MatrixDocument doc = read_document(text);
    if (!doc.state_dim)
        throw ParseError(
            "system documents need the three-number header 'dims <rows> <cols> <state-dim>'");
    std::size_t n = *doc.state_dim;
    return from_matrix(ColoredPatternMatrix::from_document(doc), n);
}

BarredSystem build_barred(const ColoredSystem& sys) {
    const ColoredPatternMatrix& m = sys.matrix;
    const std::size_t n = sys.state_dim;
    const std::size_t q = m.cols();

    // Split every original class into diagonal and off-diagonal membership.
    // Classes whose members are all diagonal become empty after the diagonal
    // is carved out and are dropped.
    std::map<ColorId, bool> survives;  // original color -> has off-diagonal cells
    for (ColorId color : m.colors()) {
        bool off_diagonal = false;
        for (auto [i, j] : m.class_cells(color))
            if (i != j) off_diagonal = true;  // any B-block cell has j >= n > i
        survives[color] = off_diagonal;
    }

    // Final numbering: surviving originals first (ascending original index
    // within each kind), then the fresh diagonal classes in ascending
    // diagonal order.
    std::map<ColorId, ColorId> old_to_new;
    std::vector<std::pair<ColorId, ColorId>> renumbering;
    std::vector<ColorId> dropped;
    int next_star = 0, next_question = 0;
    for (const auto& [color, keep] : survives) {
        if (!keep) {
            dropped.push_back(color);
            continue;
        }
        int index = color.solid() ? ++next_star : ++next_question;
        ColorId fresh_id{color.kind, index};
        old_to_new.emplace(color, fresh_id);
        renumbering.emplace_back(color, fresh_id);
    }

    std::vector<std::pair<std::size_t, ColorId>> fresh;
    std::vector<ColorId> diagonal_color(n);
    for (std::size_t i = 0; i < n; ++i) {
        // A structural zero on the diagonal becomes a solid class (the
        // realization's diagonal entry is shifted to a guaranteed-nonzero
        // value); a nonzero entry becomes a free class.
        bool was_zero = !m.at(i, i).has_value();
        ColorId color = was_zero ? ColorId{ColorKind::Star, ++next_star}
                                 : ColorId{ColorKind::Question, ++next_question};
        diagonal_color[i] = color;
        fresh.emplace_back(i, color);
    }

    std::vector<Cell> cells;
    cells.reserve(n * q);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            if (j == i) {
                cells.push_back(diagonal_color[i]);
            } else {
                const Cell& c = m.at(i, j);
                cells.push_back(c ? Cell{old_to_new.at(*c)} : Cell{});
            }
        }
    }

    BarredSystem out{
        ColoredSystem{n, sys.input_dim, ColoredPatternMatrix(n, q, std::move(cells))},
        std::move(renumbering), std::move(dropped), std::move(fresh)};
    return out;
}

}  // namespace cpmat
