#pragma once

#include <map>
#include <stdexcept>

#include "cpmat/color.hpp"
#include "cpmat/pattern_matrix.hpp"
#include "cpmat/rational.hpp"
#include "cpmat/rational_matrix.hpp"

namespace cpmat {

/// A map color -> rational value.  Valid for a matrix when it covers all of
/// its colors and gives every Star class a nonzero value (Question classes
/// may be anything, including zero).
struct ColorAssignment {
    std::map<ColorId, Rational> values;

    const Rational& at(ColorId color) const {
        auto it = values.find(color);
        if (it == values.end())
            throw std::out_of_range("assignment has no value for color " + color.token());
        return it->second;
    }
};

/// Realizes a pattern matrix numerically under an assignment.  Throws
/// std::invalid_argument when the assignment misses a color of `m` or maps a
/// Star class to zero.
RationalMatrix instantiate(const ColoredPatternMatrix& m, const ColorAssignment& a);

}  // namespace cpmat
