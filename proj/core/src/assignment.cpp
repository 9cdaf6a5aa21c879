#include "cpmat/assignment.hpp"

namespace cpmat {

RationalMatrix instantiate(const ColoredPatternMatrix& m, const ColorAssignment& a) {
    for (ColorId color : m.colors()) {
        auto it = a.values.find(color);
        if (it == a.values.end())
            throw std::invalid_argument("assignment misses class " + color.token());
        if (color.solid() && it->second == 0)
            throw std::invalid_argument("assignment maps solid class " + color.token() +
                                        " to zero");
    }
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (const Cell& c = m.at(i, j)) out.at(i, j) = a.values.at(*c);
    return out;
}

}  // namespace cpmat
