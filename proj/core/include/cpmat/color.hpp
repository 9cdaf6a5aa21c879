#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cpmat {

/// The two families of color classes a nonzero entry can belong to.
///  - Star ("solid" colors, tokens c1, c2, ...): entries constrained to be
///    equal and nonzero across the class.
///  - Question ("dashed" colors, tokens g1, g2, ...): entries constrained to
///    be equal across the class but free to take any value, including zero.
enum class ColorKind : std::uint8_t { Star = 0, Question = 1 };

/// Identifier of one color class: its kind plus a 1-based index within the
/// kind.  Ordering is Star-before-Question, then by index, which gives the
/// canonical color ordering used everywhere (spectra, polynomials, JSON).
struct ColorId {
    ColorKind kind{ColorKind::Star};
    int index{1};  // 1-based

    friend auto operator<=>(const ColorId&, const ColorId&) = default;

    bool solid() const { return kind == ColorKind::Star; }

    /// Canonical token: "c<index>" for Star, "g<index>" for Question.
    std::string token() const {
        return (solid() ? "c" : "g") + std::to_string(index);
    }

    /// Parses "c<digits>" / "g<digits>" with index >= 1.  Returns nullopt on
    /// anything else (including "0", which is not a color).
    static std::optional<ColorId> parse(std::string_view tok);
};

inline std::optional<ColorId> ColorId::parse(std::string_view tok) {
    if (tok.size() < 2) return std::nullopt;
    ColorKind kind;
    if (tok[0] == 'c') kind = ColorKind::Star;
    else if (tok[0] == 'g') kind = ColorKind::Question;
    else return std::nullopt;
    // Digits only, no leading '+'/'-', no leading zeros, bounded size.
    if (tok.size() > 7) return std::nullopt;  // indices beyond 999999 rejected
    if (tok[1] == '0') return std::nullopt;   // forbids "c0" and leading zeros
    long value = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') return std::nullopt;
        value = value * 10 + (tok[i] - '0');
    }
    if (value < 1) return std::nullopt;
    return ColorId{kind, static_cast<int>(value)};
}

}  // namespace cpmat
