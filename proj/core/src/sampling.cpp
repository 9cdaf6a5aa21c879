#include "cpmat/sampling.hpp"

#include <limits>
#include <stdexcept>

namespace cpmat {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("draw_below: bound must be positive");
    // Rejection sampling from the raw stream keeps results identical on
    // every platform (std::uniform_int_distribution is not portable).
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % bound);
    for (;;) {
        std::uint64_t raw = rng();
        if (raw < limit) return raw % bound;
    }
}

namespace {

/// Uniform nonzero integer in [min, max].
long draw_nonzero(std::mt19937_64& rng, long min, long max) {
    if (min > max || (min == 0 && max == 0))
        throw std::invalid_argument("empty nonzero sampling range");
    const std::uint64_t width = static_cast<std::uint64_t>(max - min) + 1;
    for (;;) {
        long v = min + static_cast<long>(draw_below(rng, width));
        if (v != 0) return v;
    }
}

}  // namespace

ColorAssignment sample_assignment(const std::vector<ColorId>& colors,
                                  std::mt19937_64& rng, const SamplePlan& plan) {
    ColorAssignment a;
    for (ColorId color : colors) {
        Rational value;
        if (color.solid()) {
            value = Rational(draw_nonzero(rng, plan.star_min, plan.star_max));
        } else {
            if (plan.zero_den != 0 && draw_below(rng, plan.zero_den) < plan.zero_num)
                value = 0;
            else
                value = Rational(draw_nonzero(rng, plan.question_min, plan.question_max));
        }
        a.values.emplace(color, value);
    }
    return a;
}

}  // namespace cpmat
