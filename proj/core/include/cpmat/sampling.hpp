#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cpmat/assignment.hpp"
#include "cpmat/color.hpp"

namespace cpmat {

/// Deterministic sampling plan for random admissible assignments.  All draws
/// go through a fixed-width generator with rejection sampling, so identical
/// plans produce identical assignments on every platform.
struct SamplePlan {
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    /// Star classes draw nonzero integers from [star_min, star_max].
    long star_min = -10;
    long star_max = 10;
    /// Question classes draw zero with probability zero_num/zero_den, and a
    /// nonzero integer from [question_min, question_max] otherwise.
    long question_min = -10;
    long question_max = 10;
    std::uint32_t zero_num = 1;
    std::uint32_t zero_den = 4;
};

/// Uniform integer in [0, bound) by rejection from the raw 64-bit stream --
/// identical across platforms, unlike std::uniform_int_distribution.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

/// One admissible assignment for `colors` (Star values never zero).  Colors
/// are consumed in the given order; pass a canonically sorted list for
/// reproducibility.
ColorAssignment sample_assignment(const std::vector<ColorId>& colors,
                                  std::mt19937_64& rng, const SamplePlan& plan);

}  // namespace cpmat
