#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "cpmat/pattern_matrix.hpp"

namespace cpmat {

/// A colored structured system: the n x (n+m) composite pattern [A B] with
/// state dimension n >= 1 and input dimension m >= 1.
struct ColoredSystem {
    std::size_t state_dim = 0;  // n
    std::size_t input_dim = 0;  // m
    ColoredPatternMatrix matrix;  // n x (n+m)

    /// Wraps an n x q matrix with q > n; throws ParseError on bad shape.
    static ColoredSystem from_matrix(ColoredPatternMatrix m, std::size_t state_dim);

    /// Parses a document that must carry the three-number header form.
    static ColoredSystem parse(std::string_view text);
};

/// Result of the diagonal-modification construction: from [A B] build
/// [Abar B] where
///   - every diagonal state entry becomes a fresh singleton class: a solid
///     (Star) class where A had a structural zero, a free (Question) class
///     otherwise;
///   - diagonal locations leave their original classes, and classes emptied
///     by that removal are dropped;
///   - surviving classes are renumbered canonically.
struct BarredSystem {
    ColoredSystem system;
    /// original color -> color in the barred matrix, for every surviving
    /// original class (sorted by original color).
    std::vector<std::pair<ColorId, ColorId>> renumbering;
    /// original classes that became empty and were dropped (sorted).
    std::vector<ColorId> dropped;
    /// diagonal index (0-based) -> the fresh class created there, for all n
    /// diagonal locations in ascending index order.
    std::vector<std::pair<std::size_t, ColorId>> fresh;
};

/// Applies the diagonal modification to a system.  The result's diagonal
/// classes are always n fresh singletons; off-diagonal class structure is
/// preserved (so the construction is idempotent on off-diagonal structure).
BarredSystem build_barred(const ColoredSystem& sys);

}  // namespace cpmat
